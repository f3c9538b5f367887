#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flagtri/types.hpp"

namespace flagtri {

/// Face counts (f_{-1}, f_0, ..., f_{d-1}); counts[0] is always 1.
struct FVector {
  std::vector<long long> counts{1};

  long long f(int i) const {
    const auto k = static_cast<std::size_t>(i + 1);
    return k < counts.size() ? counts[k] : 0;
  }
  int dim() const { return static_cast<int>(counts.size()) - 2; }
  std::string to_string() const { return format_counts(counts); }
  bool operator==(const FVector&) const = default;
};

/// Facet-list complex on the dense vertex set 0..n-1.
///
/// Facets are inclusion-maximal and stored in lexicographic order. `labels()`
/// remembers, for every dense vertex, the label it carried in the source it
/// was built from (user labels for `from_facets`, parent ids for links,
/// stars and restrictions).
class SimplicialComplex {
 public:
  SimplicialComplex();

  static SimplicialComplex from_facets(
      const std::vector<std::vector<Label>>& facets);

  /// Facets over 0..vertex_count-1. Non-maximal facets are dropped and
  /// vertices that appear in no facet are squeezed out.
  static SimplicialComplex from_dense(int vertex_count,
                                      std::vector<Simplex> facets,
                                      std::vector<Label> labels = {});

  const std::vector<Simplex>& facets() const { return facets_; }
  int dim() const { return dim_; }
  int vertex_count() const { return n_; }
  const std::vector<Label>& labels() const { return labels_; }

  bool contains(std::span<const Vertex> face) const;
  bool is_pure() const;

  /// faces()[k] holds the k-dimensional faces in lexicographic order.
  std::vector<std::vector<Simplex>> faces() const;

  /// Facet-set equality; labels are ignored.
  bool operator==(const SimplicialComplex& other) const {
    return n_ == other.n_ && facets_ == other.facets_;
  }

 private:
  void index();

  int n_ = 0;
  int dim_ = -1;
  std::vector<Simplex> facets_;
  std::vector<Label> labels_;
  std::vector<VertexSet> facet_bits_;
  std::vector<std::vector<int>> vertex_facets_;
};

/// Simple undirected graph with bitset adjacency rows.
class Skeleton {
 public:
  Skeleton() = default;
  explicit Skeleton(int vertex_count);

  int vertex_count() const { return static_cast<int>(rows_.size()); }
  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);
  bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return static_cast<int>(rows_[v].count()); }
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  /// Subgraph induced on `keep`, relabelled in increasing order.
  Skeleton induced(const std::vector<Vertex>& keep) const;

  bool operator==(const Skeleton&) const = default;

 private:
  std::vector<VertexSet> rows_;
};

/// Flag complex: the clique complex of its skeleton. Faces are never
/// stored; they are enumerated from the graph on demand.
class FlagComplex {
 public:
  FlagComplex() = default;
  explicit FlagComplex(Skeleton graph, std::vector<Label> labels = {});

  /// Throws InvalidInput (with the smallest missing face) when `c` is not
  /// flag.
  static FlagComplex from_simplicial(const SimplicialComplex& c);

  const Skeleton& skeleton() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  const std::vector<Label>& labels() const { return labels_; }
  bool adjacent(Vertex a, Vertex b) const { return graph_.adjacent(a, b); }
  const VertexSet& neighbors(Vertex v) const { return graph_.neighbors(v); }
  int degree(Vertex v) const { return graph_.degree(v); }
  std::vector<Edge> edges() const { return graph_.edges(); }

  bool contains(std::span<const Vertex> face) const;
  int dim() const;

  /// Maximal cliques in lexicographic order.
  std::vector<Simplex> facets() const;
  SimplicialComplex to_simplicial() const;

 private:
  Skeleton graph_;
  std::vector<Label> labels_;
};

Skeleton skeleton(const SimplicialComplex& c);

/// Every clique of `g` in lexicographic order. Returning false from `visit`
/// prunes the extensions of that clique.
void for_each_clique(const Skeleton& g,
                     const std::function<bool(const Simplex&)>& visit);
std::vector<Simplex> maximal_cliques(const Skeleton& g);

/// Connected component index per vertex; returns the number of components.
int connected_components(const Skeleton& g, std::vector<int>* component = nullptr);

struct FlagCheck {
  bool flag = true;
  /// Lexicographically smallest missing face of size >= 3.
  std::optional<Simplex> witness;
  explicit operator bool() const { return flag; }
};

FlagCheck is_flag(const SimplicialComplex& c);

SimplicialComplex link(const SimplicialComplex& c, const Simplex& face);
SimplicialComplex star(const SimplicialComplex& c, const Simplex& face);
SimplicialComplex induced(const SimplicialComplex& c, const Simplex& vertices);

FlagComplex link(const FlagComplex& c, const Simplex& face);
FlagComplex star(const FlagComplex& c, const Simplex& face);
FlagComplex induced(const FlagComplex& c, const Simplex& vertices);

/// Vertex set of the link of `face` in a flag complex (common neighbours).
Simplex link_vertices(const FlagComplex& c, const Simplex& face);

/// Minimal non-faces with at most `max_card` vertices, lexicographic order.
std::vector<Simplex> missing_faces(const SimplicialComplex& c, int max_card);

FVector f_vector(const SimplicialComplex& c);
FVector f_vector(const FlagComplex& c);
long long euler_characteristic(const FVector& f);
long long euler_characteristic(const SimplicialComplex& c);
long long euler_characteristic(const FlagComplex& c);

}  // namespace flagtri
