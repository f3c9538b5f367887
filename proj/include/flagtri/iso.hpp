#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "flagtri/complex.hpp"

namespace flagtri {

/// Canonical labelling of a flag complex's skeleton.
///
/// `digest` is the vertex count (4 bytes, big endian) followed by the upper
/// triangle of the relabelled adjacency matrix, row-major, packed MSB first.
/// Two flag complexes have equal digests iff they are isomorphic.
struct CanonicalForm {
  std::vector<std::uint8_t> digest;
  /// canonical_labeling[v] = canonical position of vertex v.
  std::vector<Vertex> canonical_labeling;

  std::string hex() const;
  /// SHA-256 of the digest, lowercase hex; a fixed-width file name.
  std::string short_id() const;
};

CanonicalForm canonical_form(const FlagComplex& c);

/// Returns a vertex map a -> b preserving adjacency both ways, if one exists.
std::optional<std::vector<Vertex>> are_isomorphic(const FlagComplex& a,
                                                  const FlagComplex& b);

/// Relabels so that vertex v becomes perm[v].
FlagComplex permute(const FlagComplex& c, const std::vector<Vertex>& perm);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

int graph_distance(const FlagComplex& c, Vertex u, Vertex v);
/// BFS distances from every vertex of `sources` (kUnreachable if none).
std::vector<int> distances_from(const Skeleton& g, const Simplex& sources);

}  // namespace flagtri
