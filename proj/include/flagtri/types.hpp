#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace flagtri {

using Vertex = int;
using Label = std::int64_t;

/// A face written as its sorted, duplicate-free vertex list.
using Simplex = std::vector<Vertex>;

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  Simplex simplex() const { return {u, v}; }
  auto operator<=>(const Edge&) const = default;
};

VertexSet make_vertex_set(int n, std::span<const Vertex> vertices);
std::vector<Vertex> members(const VertexSet& s);

bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big);

std::string format_simplex(std::span<const Vertex> s, int offset = 0);
std::string format_counts(std::span<const long long> counts);

}  // namespace flagtri
