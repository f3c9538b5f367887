#include <gtest/gtest.h>

#include "flagtri/constructors.hpp"
#include "flagtri/errors.hpp"
#include "flagtri/iso.hpp"
#include "flagtri/moves.hpp"
#include "flagtri/topology.hpp"
#include "oracles.hpp"

using namespace flagtri;

namespace {

std::vector<long long> fv(const FlagComplex& c) { return f_vector(c).counts; }

long long beta1(const FlagComplex& c) { return betti(c, Field::Rational)[1]; }

Vertex first_vertex_of_degree(const FlagComplex& c, int deg) {
  for (Vertex v = 0; v < c.vertex_count(); ++v)
    if (c.degree(v) == deg) return v;
  return -1;
}

}  // namespace

TEST(Octahedral, SmallDimensions) {
  const auto o2 = octahedral_sphere(2);
  EXPECT_TRUE(is_cycle_graph(o2.complex.skeleton()));
  EXPECT_EQ(o2.complex.vertex_count(), 4);
  EXPECT_EQ(fv(octahedral_sphere(3).complex), (std::vector<long long>{1, 6, 12, 8}));
  const auto o4 = octahedral_sphere(4);
  EXPECT_EQ(fv(o4.complex), (std::vector<long long>{1, 8, 24, 32, 16}));
  EXPECT_EQ(gamma_numbers(o4.complex, 4).gamma2, 0);
  for (int i = 0; i < 4; ++i) {
    EXPECT_FALSE(o4.complex.adjacent(i, i + 4));
    EXPECT_EQ(o4.coloring.color[i], i + 1);
    EXPECT_EQ(o4.coloring.color[i + 4], i + 1);
  }
}

TEST(Octahedral, RejectsNonPositive) {
  EXPECT_THROW(octahedral_sphere(0), InvalidInput);
}

TEST(Cycle, Sizes) {
  EXPECT_EQ(cycle(4).vertex_count(), 4);
  EXPECT_TRUE(is_cycle_graph(cycle(5).skeleton()));
  EXPECT_EQ(cycle(5).edges().size(), 5u);
  EXPECT_THROW(cycle(3), InvalidInput);
}

TEST(Fixture, Facets) {
  EXPECT_EQ(fixture_facets("rp2_11_left").size(), 20u);
  EXPECT_EQ(fixture_facets("torus_12").size(), 24u);
  const auto g = fixture("grid_torus_16");
  EXPECT_EQ(g.vertex_count(), 16);
  EXPECT_EQ(classify_surface(g), (SurfaceType{SurfaceType::Kind::ConnectedSumTori, 1}));
  EXPECT_THROW(fixture("torus_13"), InvalidInput);
}

TEST(Fixture, Torus12IsSixRegular) {
  const auto t = fixture("torus_12");
  for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(t.degree(v), 6);
}

TEST(Barycentric, TriangleBoundaryIsHexagon) {
  const auto c = barycentric_subdivision(SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_EQ(c.vertex_count(), 6);
  EXPECT_TRUE(is_cycle_graph(c.skeleton()));
}

TEST(Barycentric, TetrahedronBoundary) {
  const auto c = barycentric_subdivision(
      SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  EXPECT_EQ(c.vertex_count(), 14);
  EXPECT_TRUE(is_closed_surface(c));
  EXPECT_EQ(classify_surface(c).kind, SurfaceType::Kind::Sphere);
}

TEST(Barycentric, Rp2) {
  const auto c = barycentric_subdivision(fixture("rp2_11_left").to_simplicial());
  EXPECT_EQ(c.vertex_count(), 61);
  EXPECT_EQ(classify_surface(c), (SurfaceType{SurfaceType::Kind::ConnectedSumProjectivePlanes, 1}));
}

TEST(Staircase, EdgeTimesEdge) {
  const auto e = SimplicialComplex::from_facets({{1, 2}});
  const auto p = staircase_product(e, e);
  EXPECT_EQ(p.facets(), (std::vector<Simplex>{{0, 1, 3}, {0, 2, 3}}));
}

TEST(Staircase, TorusFromCycles) {
  const auto p = staircase_product(cycle(4), cycle(4));
  EXPECT_EQ(p.vertex_count(), 16);
  EXPECT_EQ(fv(p), (std::vector<long long>{1, 16, 48, 32}));
  EXPECT_EQ(classify_surface(p), (SurfaceType{SurfaceType::Kind::ConnectedSumTori, 1}));
}

TEST(Staircase, S2xS1) {
  const auto p = staircase_product(octahedral_sphere(3).complex, cycle(4));
  EXPECT_EQ(fv(p), (std::vector<long long>{1, 24, 120, 192, 96}));
  EXPECT_TRUE(is_closed_3_manifold(p));
  EXPECT_EQ(betti(p, Field::Rational).ranks, (std::vector<long long>{1, 1, 1, 1}));
  EXPECT_EQ(gamma_numbers(p, 4).gamma2, 16);
}

TEST(Staircase, CustomOrderStillTriangulates) {
  const auto p = staircase_product(cycle(4), cycle(5), {2, 0, 1, 3}, {});
  EXPECT_EQ(p.vertex_count(), 20);
  EXPECT_TRUE(is_closed_surface(p));
  EXPECT_TRUE(orientable(p));
}

TEST(Staircase, MatchesCliqueOracle) {
  const auto p = staircase_product(cycle(4).to_simplicial(), cycle(5).to_simplicial());
  EXPECT_TRUE(oracle::is_flag(p));
  EXPECT_EQ(is_flag(p).flag, oracle::is_flag(p));
}

TEST(ConnectedSum, TwoTori) {
  const auto t = fixture("torus_12");
  const auto s = vertex_star_connected_sum(t, 0, t, 0);
  EXPECT_EQ(s.complex.vertex_count(), 16);
  EXPECT_EQ(classify_surface(s.complex), (SurfaceType{SurfaceType::Kind::ConnectedSumTori, 2}));
  EXPECT_EQ(s.map_a[0], -1);
  EXPECT_EQ(s.map_b[0], -1);
}

TEST(ConnectedSum, TwoProjectivePlanes) {
  const auto r = fixture("rp2_11_left");
  const Vertex v = first_vertex_of_degree(r, 6);
  ASSERT_GE(v, 0);
  const auto s = vertex_star_connected_sum(r, v, r, v);
  EXPECT_EQ(s.complex.vertex_count(), 14);
  EXPECT_EQ(classify_surface(s.complex), (SurfaceType{SurfaceType::Kind::ConnectedSumProjectivePlanes, 2}));
}

TEST(ConnectedSum, OctahedralSpheres) {
  const auto o = octahedral_sphere(4).complex;
  const auto s = edge_star_connected_sum(o, Edge(0, 1), o, Edge(0, 1));
  EXPECT_TRUE(is_closed_3_manifold(s.complex));
  EXPECT_EQ(gamma_numbers(s.complex, 4).gamma2, 0);
  // The boundary of an edge star contains the edge's endpoints, so no vertex
  // is removed.
  EXPECT_EQ(s.complex.vertex_count(), 8 + 8 - 6);
}

TEST(ConnectedSum, GammaTightPair) {
  const auto g = gamma_tight(1);
  const auto e = first_square_link_edge(g);
  ASSERT_TRUE(e);
  const auto s = edge_star_connected_sum(g, *e, g, *e);
  EXPECT_EQ(gamma_numbers(s.complex, 4).gamma2, 32);
  EXPECT_EQ(beta1(s.complex), 2);
}

TEST(ConnectedSum, MismatchedLinks) {
  const auto o = octahedral_sphere(4).complex;
  const auto big = subdivide_edge(o, Edge(0, 1));
  std::optional<Edge> five;
  for (const auto& e : big.edges())
    if (link_vertices(big, e.simplex()).size() == 5) five = e;
  ASSERT_TRUE(five);
  EXPECT_THROW(edge_star_connected_sum(o, Edge(0, 1), big, *five), ConnectedSumInvalid);
}

TEST(ConnectedSum, RejectsBadIsomorphism) {
  const auto t = fixture("torus_12");
  const auto w = vertex_star_vertices(t, 0);
  auto phi = vertex_star_isomorphisms(t, 0, t, 0).front();
  std::swap(phi.begin()->second, std::next(phi.begin())->second);
  EXPECT_THROW(flag_connected_sum(t, w, t, w, phi), ConnectedSumInvalid);
}

TEST(ConnectedSum, RejectsNonBall) {
  const auto t = fixture("torus_12");
  auto w = vertex_star_vertices(t, 0);
  const auto phi = vertex_star_isomorphisms(t, 0, t, 0).front();
  w.erase(std::find(w.begin(), w.end(), 0));
  EXPECT_THROW(flag_connected_sum(t, w, t, w, phi), ConnectedSumInvalid);
}

TEST(EdgeStar, IsomorphismsAreSortedAndComplete) {
  const auto o = octahedral_sphere(4).complex;
  const auto isos = edge_star_isomorphisms(o, Edge(0, 1), o, Edge(0, 1));
  EXPECT_EQ(isos.size(), 16u);
  EXPECT_TRUE(std::is_sorted(isos.begin(), isos.end()));
  EXPECT_EQ(edge_star_vertices(o, Edge(0, 1)).size(), 6u);
}

TEST(Handle, Delta16GivesGamma) {
  const auto d = delta16();
  const auto h = edge_star_handle_addition(d.complex, d.e, d.e_prime);
  EXPECT_TRUE(is_closed_3_manifold(h.complex));
  EXPECT_EQ(gamma_numbers(h.complex, 4).gamma2, 16);
  EXPECT_EQ(beta1(h.complex), 1);
  EXPECT_EQ(canonical_form(h.complex).digest, canonical_form(gamma_tight(1)).digest);
}

TEST(Handle, AdjacentStarsTooClose) {
  const auto t = fixture("torus_12");
  const Vertex w = members(t.neighbors(0)).front();
  const auto phi = vertex_star_isomorphisms(t, 0, t, w).front();
  try {
    flag_handle_addition(t, vertex_star_vertices(t, 0), vertex_star_vertices(t, w), phi);
    FAIL() << "expected HandleTooClose";
  } catch (const HandleTooClose& e) {
    EXPECT_LT(e.dist, 4);
  }
}

TEST(Handle, ThirdHandleOnSum) {
  // Gamma # Gamma has diameter 4, so a third handle goes into a copy of
  // delta16 summed on at a square-link edge away from its marked stars.
  const auto g = gamma_tight(1);
  const auto e = first_square_link_edge(g);
  ASSERT_TRUE(e);
  const auto gg = edge_star_connected_sum(g, *e, g, *e).complex;
  const auto d = delta16();
  const auto de = distances_from(d.complex.skeleton(), edge_star_vertices(d.complex, d.e));
  const auto dp = distances_from(d.complex.skeleton(), edge_star_vertices(d.complex, d.e_prime));
  std::optional<Edge> f;
  for (const auto& x : d.complex.edges()) {
    if (link_vertices(d.complex, x.simplex()).size() != 4) continue;
    int near = kUnreachable;
    for (Vertex v : edge_star_vertices(d.complex, x)) near = std::min({near, de[v], dp[v]});
    if (near >= 2) {
      f = x;
      break;
    }
  }
  ASSERT_TRUE(f);
  const auto sum = edge_star_connected_sum(gg, first_square_link_edge(gg).value(), d.complex, *f);
  const Edge h1(sum.map_b[d.e.u], sum.map_b[d.e.v]);
  const Edge h2(sum.map_b[d.e_prime.u], sum.map_b[d.e_prime.v]);
  const auto h = edge_star_handle_addition(sum.complex, h1, h2);
  EXPECT_TRUE(is_closed_3_manifold(h.complex));
  EXPECT_EQ(beta1(h.complex), 3);
  EXPECT_EQ(gamma_numbers(h.complex, 4).gamma2, 48);
}

TEST(Delta, Delta4) {
  const auto d = delta4();
  EXPECT_EQ(fv(d.complex), (std::vector<long long>{1, 14, 54, 80, 40}));
  EXPECT_EQ(betti(d.complex, Field::Rational).ranks, (std::vector<long long>{1, 0, 0, 1}));
  EXPECT_EQ(gamma_numbers(d.complex, 4).gamma2, 0);
  EXPECT_EQ(link_vertices(d.complex, d.e.simplex()).size(), 4u);
  EXPECT_EQ(link_vertices(d.complex, d.e_prime.simplex()).size(), 4u);
  const auto a = edge_star_vertices(d.complex, d.e);
  const auto b = edge_star_vertices(d.complex, d.e_prime);
  Simplex both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  EXPECT_TRUE(both.empty());
}

TEST(Delta, Delta16StarsAreFar) {
  const auto d = delta16();
  EXPECT_TRUE(is_closed_3_manifold(d.complex));
  EXPECT_EQ(gamma_numbers(d.complex, 4).gamma2, 0);
  EXPECT_EQ(beta1(d.complex), 0);
  const auto dist = distances_from(d.complex.skeleton(), edge_star_vertices(d.complex, d.e));
  for (Vertex v : edge_star_vertices(d.complex, d.e_prime)) EXPECT_GE(dist[v], 4);
}

TEST(Delta, GammaTightFamily) {
  for (int b = 1; b <= 3; ++b) {
    const auto g = gamma_tight(b);
    EXPECT_EQ(gamma_numbers(g, 4).gamma2, 16 * b);
    EXPECT_EQ(beta1(g), b);
  }
  EXPECT_THROW(gamma_tight(0), InvalidInput);
}

TEST(SurfaceMin, BaseCases) {
  EXPECT_EQ(canonical_form(surface_min(1, true)).digest, canonical_form(fixture("torus_12")).digest);
  EXPECT_EQ(surface_min(1, false).vertex_count(), 11);
  const auto s = surface_min(3, false);
  EXPECT_EQ(s.vertex_count(), 17);
  EXPECT_EQ(classify_surface(s), (SurfaceType{SurfaceType::Kind::ConnectedSumProjectivePlanes, 3}));
  EXPECT_EQ(surface_min(3, true).vertex_count(), 20);
}

TEST(SurfaceMin, KeepsDegreeSixVertex) {
  for (int k = 1; k <= 4; ++k) {
    EXPECT_GE(first_vertex_of_degree(surface_min(k, true), 6), 0) << k;
    EXPECT_GE(first_vertex_of_degree(surface_min(k, false), 6), 0) << k;
  }
}
