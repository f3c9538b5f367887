#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagtri/complex.hpp"

namespace flagtri {

/// color[v] in 1..d; adjacent vertices get distinct colours where the
/// construction needs a balanced complex.
struct Coloring {
  std::vector<int> color;
};

/// Vertex bijection between two boundary complexes.
using BoundaryIsomorphism = std::map<Vertex, Vertex>;

struct ColoredComplex {
  FlagComplex complex;
  Coloring coloring;
};

/// Result of a gluing. map_a[v] / map_b[v] give the id in `complex` of a
/// vertex of the first / second input, or -1 if it was removed.
struct GluedComplex {
  FlagComplex complex;
  std::vector<Vertex> map_a;
  std::vector<Vertex> map_b;
};

/// Boundary of the d-dimensional cross-polytope: vertex i is antipodal to
/// i + d and both get colour i + 1.
ColoredComplex octahedral_sphere(int d);

/// Flag triangulation of S^1 by an n-cycle; n <= 3 is rejected.
FlagComplex cycle(int n);

std::vector<std::string> fixture_names();
/// Facets of a built-in fixture, with 1-based vertex labels.
std::vector<std::vector<Label>> fixture_facets(const std::string& name);
FlagComplex fixture(const std::string& name);

/// Order complex of the face poset. Vertices are the faces of `c`, by
/// dimension and then lexicographically.
FlagComplex barycentric_subdivision(const SimplicialComplex& c);

/// Staircase triangulation of a x b. order_x lists the vertices of x in
/// increasing order (empty = ascending ids). Product vertex (u, v) gets id
/// u * b.vertex_count() + v.
SimplicialComplex staircase_product(const SimplicialComplex& a,
                                    const SimplicialComplex& b,
                                    std::vector<Vertex> order_a = {},
                                    std::vector<Vertex> order_b = {});
FlagComplex staircase_product(const FlagComplex& a, const FlagComplex& b,
                              std::vector<Vertex> order_a = {},
                              std::vector<Vertex> order_b = {});

/// Flag connected sum: a[w_a] and b[w_b] must be full-dimensional balls with
/// flag sphere boundaries, and phi maps the boundary of a[w_a] onto the
/// boundary of b[w_b]. Interiors are removed and boundaries identified,
/// keeping the ids of `a`.
GluedComplex flag_connected_sum(const FlagComplex& a, const Simplex& w_a,
                                const FlagComplex& b, const Simplex& w_b,
                                const BoundaryIsomorphism& phi);

/// Vertex set of st(e): both endpoints and lk(e).
Simplex edge_star_vertices(const FlagComplex& c, Edge e);
/// Vertex set of st(v).
Simplex vertex_star_vertices(const FlagComplex& c, Vertex v);

/// Isomorphisms boundary(st(e_a)) -> boundary(st(e_b)) obtained from the
/// dihedral symmetries of the link cycle and the endpoint swap, sorted by
/// their image vectors over the sorted domain.
std::vector<BoundaryIsomorphism> edge_star_isomorphisms(const FlagComplex& a,
                                                        Edge e_a,
                                                        const FlagComplex& b,
                                                        Edge e_b);
/// Link-cycle isomorphisms lk(v_a) -> lk(v_b) of surface vertices, sorted
/// the same way.
std::vector<BoundaryIsomorphism> vertex_star_isomorphisms(const FlagComplex& a,
                                                          Vertex v_a,
                                                          const FlagComplex& b,
                                                          Vertex v_b);

GluedComplex edge_star_connected_sum(const FlagComplex& a, Edge e_a,
                                     const FlagComplex& b, Edge e_b);
GluedComplex vertex_star_connected_sum(const FlagComplex& a, Vertex v_a,
                                       const FlagComplex& b, Vertex v_b);

struct HandleResult {
  FlagComplex complex;
  /// map[v] = new id of vertex v (identified vertices share an id), -1 if
  /// removed.
  std::vector<Vertex> map;
};

/// Flag handle addition: removes the interiors of c[w1] and c[w2] and glues
/// boundary(c[w1]) to boundary(c[w2]) along phi. Requires dist(u, v) >= 4 for
/// all u in w1, v in w2.
HandleResult flag_handle_addition(const FlagComplex& c, const Simplex& w1,
                                  const Simplex& w2,
                                  const BoundaryIsomorphism& phi);
HandleResult edge_star_handle_addition(const FlagComplex& c, Edge e1, Edge e2);

/// Lexicographically first pair of edges with 4-cycle links whose stars are
/// at distance >= 4, if any.
std::optional<std::pair<Edge, Edge>> far_edge_pair(const FlagComplex& c);

/// Flag surface with 8 + 4k (orientable) or 8 + 3k vertices: k tori or k
/// projective planes glued along degree-6 vertex stars.
FlagComplex surface_min(int k, bool orientable);

struct MarkedComplex {
  FlagComplex complex;
  Edge e;
  Edge e_prime;
};

/// Flag 3-sphere on 14 vertices from four coloured octahedral spheres, with
/// edges e, e' whose links are 4-cycles and whose stars are disjoint.
MarkedComplex delta4();
/// Four copies of delta4 chained along (e' of copy i, e of copy i+1); the
/// marked edges are e of the first copy and e' of the last.
MarkedComplex delta16();
/// Flag 3-manifold with beta_1 = b and gamma_2 = 16 b.
FlagComplex gamma_tight(int b);

/// Lexicographically first edge whose link is a 4-cycle.
std::optional<Edge> first_square_link_edge(const FlagComplex& c);

}  // namespace flagtri
