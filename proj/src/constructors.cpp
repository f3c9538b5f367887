#include "flagtri/constructors.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "flagtri/errors.hpp"
#include "flagtri/iso.hpp"
#include "flagtri/topology.hpp"

namespace flagtri {

namespace {

using Facets = std::vector<std::vector<Label>>;

const Facets kRp2Left = {
    {5, 6, 11}, {6, 7, 11}, {7, 8, 11}, {8, 9, 11}, {9, 10, 11},
    {5, 10, 11}, {1, 2, 9},  {2, 9, 10}, {2, 3, 10}, {3, 4, 10},
    {4, 5, 10}, {1, 4, 5},  {1, 5, 6},  {1, 2, 6},  {2, 6, 7},
    {2, 3, 7},  {3, 4, 7},  {4, 7, 8},  {1, 4, 8},  {1, 8, 9}};

const Facets kRp2Right = {
    {5, 6, 11}, {6, 7, 11}, {7, 8, 11}, {8, 9, 11}, {9, 10, 11},
    {5, 10, 11}, {1, 2, 9},  {2, 3, 9},  {3, 9, 10}, {3, 4, 10},
    {4, 5, 10}, {1, 4, 5},  {1, 5, 6},  {1, 2, 6},  {2, 6, 7},
    {2, 3, 7},  {3, 4, 7},  {4, 7, 8},  {1, 4, 8},  {1, 8, 9}};

const Facets kTorus12 = {
    {1, 2, 3},   {1, 2, 5},   {1, 3, 11}, {1, 4, 5},   {1, 4, 12},
    {1, 11, 12}, {2, 3, 8},   {2, 5, 6},  {2, 6, 7},   {2, 7, 8},
    {3, 8, 9},   {3, 9, 10},  {3, 10, 11}, {4, 5, 10}, {4, 7, 8},
    {4, 7, 10},  {4, 8, 12},  {5, 6, 9},  {5, 9, 10},  {6, 7, 11},
    {6, 9, 12},  {6, 11, 12}, {7, 10, 11}, {8, 9, 12}};

// 4x4 grid on x, y in {-2..1}; the square with lower-left corner (x, y) is
// cut by the diagonal to (x+1, y+1). Row-major 1-based labels.
Facets grid_facets(bool klein) {
  auto label = [klein](int x, int y) -> Label {
    if (x == 2) {
      x = -2;
      if (klein) y = -y;
    }
    if (y == 2) y = -2;
    return 4 * (y + 2) + (x + 2) + 1;
  };
  Facets out;
  for (int y = -2; y <= 1; ++y)
    for (int x = -2; x <= 1; ++x) {
      out.push_back({label(x, y), label(x + 1, y), label(x + 1, y + 1)});
      out.push_back({label(x, y), label(x, y + 1), label(x + 1, y + 1)});
    }
  return out;
}

Simplex sorted(Simplex s) {
  std::sort(s.begin(), s.end());
  return s;
}

void require_edge(const FlagComplex& c, Edge e) {
  if (e.u == e.v || e.u < 0 || e.v >= c.vertex_count() || !c.adjacent(e.u, e.v))
    throw EdgeNotFound(e);
}

// Cyclic order of `verts` when they induce a cycle: starts at the smallest
// vertex and continues to its smaller neighbour.
std::optional<std::vector<Vertex>> cycle_order(const FlagComplex& c,
                                               const Simplex& verts) {
  if (verts.size() < 4) return std::nullopt;
  const Skeleton g = c.skeleton().induced(verts);
  if (!is_cycle_graph(g)) return std::nullopt;
  std::vector<Vertex> order{0};
  Vertex prev = -1;
  Vertex cur = 0;
  while (order.size() < verts.size()) {
    const auto nb = members(g.neighbors(cur));
    Vertex next = (nb[0] != prev) ? nb[0] : nb[1];
    if (prev == -1) next = std::min(nb[0], nb[1]);
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  for (Vertex& v : order) v = verts[v];
  return order;
}

// Bijections between two sequences under the dihedral group (or every
// permutation of a pair), as (from, to) pairs.
std::vector<std::vector<std::pair<Vertex, Vertex>>> cycle_maps(
    const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out;
  const std::size_t m = a.size();
  if (m != b.size() || m == 0) return out;
  for (std::size_t shift = 0; shift < m; ++shift)
    for (int dir : {1, -1}) {
      std::vector<std::pair<Vertex, Vertex>> map;
      for (std::size_t i = 0; i < m; ++i) {
        const auto j = static_cast<std::size_t>(
            (static_cast<long>(shift) + dir * static_cast<long>(i) +
             2 * static_cast<long>(m)) %
            static_cast<long>(m));
        map.emplace_back(a[i], b[j]);
      }
      out.push_back(std::move(map));
    }
  return out;
}

// Link of a simplex in a pseudomanifold-like complex as an ordered sphere:
// an induced cycle, or two non-adjacent vertices.
std::optional<std::vector<Vertex>> sphere_order(const FlagComplex& c,
                                                const Simplex& verts) {
  if (verts.size() == 2 && !c.adjacent(verts[0], verts[1])) return verts;
  return cycle_order(c, verts);
}

std::vector<BoundaryIsomorphism> sort_by_image(
    std::vector<BoundaryIsomorphism> maps) {
  // std::map iterates its domain in sorted order, so comparing the value
  // sequences compares image vectors.
  auto images = [](const BoundaryIsomorphism& m) {
    std::vector<Vertex> v;
    for (const auto& [from, to] : m) v.push_back(to);
    return v;
  };
  std::sort(maps.begin(), maps.end(),
            [&](const auto& x, const auto& y) { return images(x) < images(y); });
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  return maps;
}

struct Ball {
  std::vector<Simplex> boundary;  // ridges, original ids, sorted
  Simplex boundary_vertices;
  Simplex interior_vertices;
};

std::vector<Simplex> ridges_of(const Simplex& f) {
  std::vector<Simplex> out;
  for (std::size_t skip = 0; skip < f.size(); ++skip) {
    Simplex r;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (i != skip) r.push_back(f[i]);
    out.push_back(std::move(r));
  }
  return out;
}

bool is_sphere(const SimplicialComplex& s, int dim) {
  if (!s.is_pure() || s.dim() != dim) return false;
  switch (dim) {
    case 0:
      return s.vertex_count() == 2;
    case 1:
      return is_cycle_graph(skeleton(s));
    case 2:
      return check_closed_surface(s).ok && euler_characteristic(s) == 2;
    default: {
      auto b = betti(s, Field::Rational);
      for (int i = 0; i <= dim; ++i)
        if (b[static_cast<std::size_t>(i)] != (i == 0 || i == dim ? 1 : 0))
          return false;
      return true;
    }
  }
}

// Checks that c[w] is a full-dimensional ball with a flag sphere boundary and
// that every facet outside w meets w in a boundary face. Returns an error
// message or fills `ball`.
std::optional<std::string> check_ball(const FlagComplex& c,
                                      const std::vector<Simplex>& facets,
                                      const Simplex& w, Ball& ball,
                                      const std::string& what) {
  const int n = c.vertex_count();
  for (Vertex v : w)
    if (v < 0 || v >= n) return what + ": vertex out of range";
  if (w.empty()) return what + ": empty vertex set";
  const int d = c.dim();
  std::vector<Simplex> inside;
  for (Simplex q : maximal_cliques(c.skeleton().induced(w))) {
    for (Vertex& v : q) v = w[v];
    inside.push_back(std::move(q));
  }
  for (const auto& f : inside)
    if (static_cast<int>(f.size()) != d + 1)
      return what + ": restriction is not a full-dimensional pure complex";
  std::map<Simplex, int> ridge_count;
  for (const auto& f : inside)
    for (auto& r : ridges_of(f)) ++ridge_count[r];
  for (const auto& [r, k] : ridge_count) {
    if (k > 2) return what + ": ridge " + format_simplex(r) + " lies in " +
                      std::to_string(k) + " facets";
    if (k == 1) ball.boundary.push_back(r);
  }
  const auto sub = SimplicialComplex::from_dense(n, inside);
  const auto b = betti(sub, Field::Rational);
  if (euler_characteristic(sub) != 1 || b[0] != 1)
    return what + ": restriction is not a ball";
  for (int i = 1; i <= d; ++i)
    if (b[static_cast<std::size_t>(i)] != 0)
      return what + ": restriction is not a ball";
  if (ball.boundary.empty()) return what + ": restriction has empty boundary";
  const auto bd = SimplicialComplex::from_dense(n, ball.boundary);
  if (!is_flag(bd)) return what + ": boundary is not flag";
  if (!is_sphere(bd, d - 1)) return what + ": boundary is not a sphere";
  std::set<Vertex> bv;
  for (const auto& r : ball.boundary) bv.insert(r.begin(), r.end());
  ball.boundary_vertices.assign(bv.begin(), bv.end());
  for (Vertex v : w)
    if (!bv.count(v)) ball.interior_vertices.push_back(v);

  const VertexSet in_w = make_vertex_set(n, w);
  for (const auto& f : facets) {
    Simplex part;
    for (Vertex v : f)
      if (in_w.test(v)) part.push_back(v);
    if (part.empty() || part.size() == f.size()) continue;
    bool ok = false;
    for (const auto& r : ball.boundary)
      if (is_subset(part, r)) {
        ok = true;
        break;
      }
    if (!ok)
      return what + ": facet " + format_simplex(f) +
             " meets the ball outside its boundary";
  }
  return std::nullopt;
}

std::optional<std::string> check_phi(const Ball& a, const Ball& b,
                                     const BoundaryIsomorphism& phi) {
  Simplex dom, img;
  for (const auto& [x, y] : phi) {
    dom.push_back(x);
    img.push_back(y);
  }
  std::sort(img.begin(), img.end());
  if (std::adjacent_find(img.begin(), img.end()) != img.end())
    return std::string("boundary map is not injective");
  if (dom != a.boundary_vertices)
    return std::string("boundary map domain is not the first boundary");
  if (img != b.boundary_vertices)
    return std::string("boundary map image is not the second boundary");
  std::vector<Simplex> mapped;
  for (const auto& r : a.boundary) {
    Simplex m;
    for (Vertex v : r) m.push_back(phi.at(v));
    mapped.push_back(sorted(std::move(m)));
  }
  std::sort(mapped.begin(), mapped.end());
  if (mapped != b.boundary) return std::string("boundary map is not simplicial");
  return std::nullopt;
}

Simplex unique_sorted(Simplex s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool is_square_link(const FlagComplex& c, Edge e) {
  const auto lk = link_vertices(c, e.simplex());
  return lk.size() == 4 && is_cycle_graph(c.skeleton().induced(lk));
}

Edge map_edge(const std::vector<Vertex>& map, Edge e) {
  return Edge(map[e.u], map[e.v]);
}

void invariant(bool ok, const std::string& what) {
  if (!ok) throw ConstructionInvariantViolated(what);
}

}  // namespace

ColoredComplex octahedral_sphere(int d) {
  if (d < 1) throw InvalidInput("octahedral sphere needs d >= 1");
  Skeleton g(2 * d);
  for (Vertex u = 0; u < 2 * d; ++u)
    for (Vertex v = u + 1; v < 2 * d; ++v)
      if (v != u + d) g.add_edge(u, v);
  Coloring col;
  for (Vertex v = 0; v < 2 * d; ++v) col.color.push_back(v % d + 1);
  return {FlagComplex(std::move(g)), std::move(col)};
}

FlagComplex cycle(int n) {
  if (n <= 3)
    throw InvalidInput("a flag cycle needs at least 4 vertices, got " +
                       std::to_string(n));
  Skeleton g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return FlagComplex(std::move(g));
}

std::vector<std::string> fixture_names() {
  return {"rp2_11_left", "rp2_11_right", "torus_12", "grid_torus_16",
          "grid_klein_16"};
}

std::vector<std::vector<Label>> fixture_facets(const std::string& name) {
  if (name == "rp2_11_left") return kRp2Left;
  if (name == "rp2_11_right") return kRp2Right;
  if (name == "torus_12") return kTorus12;
  if (name == "grid_torus_16") return grid_facets(false);
  if (name == "grid_klein_16") return grid_facets(true);
  throw InvalidInput("unknown fixture '" + name + "'");
}

FlagComplex fixture(const std::string& name) {
  return FlagComplex::from_simplicial(
      SimplicialComplex::from_facets(fixture_facets(name)));
}

FlagComplex barycentric_subdivision(const SimplicialComplex& c) {
  std::vector<Simplex> faces;
  for (const auto& level : c.faces())
    for (const auto& f : level)
      if (!f.empty()) faces.push_back(f);
  std::map<Simplex, Vertex> id;
  for (std::size_t i = 0; i < faces.size(); ++i)
    id[faces[i]] = static_cast<Vertex>(i);
  Skeleton g(static_cast<int>(faces.size()));
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    const std::size_t k = f.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
      Simplex sub;
      for (std::size_t j = 0; j < k; ++j)
        if (mask >> j & 1) sub.push_back(f[j]);
      g.add_edge(static_cast<Vertex>(i), id.at(sub));
    }
  }
  return FlagComplex(std::move(g));
}

SimplicialComplex staircase_product(const SimplicialComplex& a,
                                    const SimplicialComplex& b,
                                    std::vector<Vertex> order_a,
                                    std::vector<Vertex> order_b) {
  auto ranks = [](int n, std::vector<Vertex>& order) {
    if (order.empty()) {
      order.resize(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
    }
    if (static_cast<int>(order.size()) != n)
      throw InvalidInput("vertex order has the wrong length");
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Vertex v = order[i];
      if (v < 0 || v >= n || rank[v] != -1)
        throw InvalidInput("vertex order is not a permutation");
      rank[v] = static_cast<int>(i);
    }
    return rank;
  };
  const auto ra = ranks(a.vertex_count(), order_a);
  const auto rb = ranks(b.vertex_count(), order_b);
  const int nb = b.vertex_count();

  std::vector<Simplex> facets;
  for (Simplex f : a.facets()) {
    std::sort(f.begin(), f.end(), [&](Vertex x, Vertex y) { return ra[x] < ra[y]; });
    for (Simplex g : b.facets()) {
      std::sort(g.begin(), g.end(),
                [&](Vertex x, Vertex y) { return rb[x] < rb[y]; });
      Simplex path;
      std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i,
                                                                std::size_t j) {
        path.push_back(f[i] * nb + g[j]);
        if (i + 1 == f.size() && j + 1 == g.size()) {
          facets.push_back(path);
        } else {
          if (i + 1 < f.size()) walk(i + 1, j);
          if (j + 1 < g.size()) walk(i, j + 1);
        }
        path.pop_back();
      };
      walk(0, 0);
    }
  }
  return SimplicialComplex::from_dense(a.vertex_count() * nb, std::move(facets));
}

FlagComplex staircase_product(const FlagComplex& a, const FlagComplex& b,
                              std::vector<Vertex> order_a,
                              std::vector<Vertex> order_b) {
  const auto s = staircase_product(a.to_simplicial(), b.to_simplicial(),
                                   std::move(order_a), std::move(order_b));
  const auto check = is_flag(s);
  invariant(check.flag, "staircase product is not flag");
  return FlagComplex::from_simplicial(s);
}

GluedComplex flag_connected_sum(const FlagComplex& a, const Simplex& w_a_in,
                                const FlagComplex& b, const Simplex& w_b_in,
                                const BoundaryIsomorphism& phi) {
  const Simplex w_a = unique_sorted(w_a_in);
  const Simplex w_b = unique_sorted(w_b_in);
  if (a.dim() != b.dim())
    throw ConnectedSumInvalid("summands have different dimensions");
  const auto fa = a.facets();
  const auto fb = b.facets();
  Ball ba, bb;
  if (auto err = check_ball(a, fa, w_a, ba, "first summand"))
    throw ConnectedSumInvalid(*err);
  if (auto err = check_ball(b, fb, w_b, bb, "second summand"))
    throw ConnectedSumInvalid(*err);
  if (auto err = check_phi(ba, bb, phi)) throw ConnectedSumInvalid(*err);

  GluedComplex out;
  out.map_a.assign(static_cast<std::size_t>(a.vertex_count()), -1);
  out.map_b.assign(static_cast<std::size_t>(b.vertex_count()), -1);
  const VertexSet in_a = make_vertex_set(a.vertex_count(), ba.interior_vertices);
  const VertexSet in_wb = make_vertex_set(b.vertex_count(), w_b);
  Vertex next = 0;
  for (Vertex v = 0; v < a.vertex_count(); ++v)
    if (!in_a.test(v)) out.map_a[v] = next++;
  for (Vertex v = 0; v < b.vertex_count(); ++v)
    if (!in_wb.test(v)) out.map_b[v] = next++;
  for (const auto& [x, y] : phi) out.map_b[y] = out.map_a[x];

  std::vector<Simplex> facets;
  auto keep = [&](const std::vector<Simplex>& fs, const Simplex& w,
                  const std::vector<Vertex>& map) {
    for (const auto& f : fs) {
      if (is_subset(f, w)) continue;
      Simplex m;
      for (Vertex v : f) m.push_back(map[v]);
      facets.push_back(sorted(std::move(m)));
    }
  };
  keep(fa, w_a, out.map_a);
  keep(fb, w_b, out.map_b);
  const auto s = SimplicialComplex::from_dense(next, std::move(facets));
  if (s.vertex_count() != next)
    throw ConnectedSumInvalid("gluing leaves isolated vertices");
  const auto check = is_flag(s);
  if (!check)
    throw ConnectedSumInvalid("result is not flag: missing face " +
                              format_simplex(*check.witness));
  out.complex = FlagComplex::from_simplicial(s);
  return out;
}

Simplex edge_star_vertices(const FlagComplex& c, Edge e) {
  require_edge(c, e);
  Simplex w = link_vertices(c, e.simplex());
  w.push_back(e.u);
  w.push_back(e.v);
  return sorted(std::move(w));
}

Simplex vertex_star_vertices(const FlagComplex& c, Vertex v) {
  if (v < 0 || v >= c.vertex_count()) throw InvalidInput("vertex out of range");
  Simplex w = members(c.neighbors(v));
  w.push_back(v);
  return sorted(std::move(w));
}

std::vector<BoundaryIsomorphism> edge_star_isomorphisms(const FlagComplex& a,
                                                        Edge e_a,
                                                        const FlagComplex& b,
                                                        Edge e_b) {
  require_edge(a, e_a);
  require_edge(b, e_b);
  const auto la = sphere_order(a, link_vertices(a, e_a.simplex()));
  const auto lb = sphere_order(b, link_vertices(b, e_b.simplex()));
  std::vector<BoundaryIsomorphism> out;
  if (!la || !lb || la->size() != lb->size()) return out;
  for (const auto& cyc : cycle_maps(*la, *lb))
    for (bool swap : {false, true}) {
      BoundaryIsomorphism m(cyc.begin(), cyc.end());
      m[e_a.u] = swap ? e_b.v : e_b.u;
      m[e_a.v] = swap ? e_b.u : e_b.v;
      out.push_back(std::move(m));
    }
  return sort_by_image(std::move(out));
}

std::vector<BoundaryIsomorphism> vertex_star_isomorphisms(const FlagComplex& a,
                                                          Vertex v_a,
                                                          const FlagComplex& b,
                                                          Vertex v_b) {
  if (v_a < 0 || v_a >= a.vertex_count() || v_b < 0 || v_b >= b.vertex_count())
    throw InvalidInput("vertex out of range");
  const auto la = cycle_order(a, members(a.neighbors(v_a)));
  const auto lb = cycle_order(b, members(b.neighbors(v_b)));
  std::vector<BoundaryIsomorphism> out;
  if (!la || !lb || la->size() != lb->size()) return out;
  for (const auto& cyc : cycle_maps(*la, *lb))
    out.emplace_back(cyc.begin(), cyc.end());
  return sort_by_image(std::move(out));
}

GluedComplex edge_star_connected_sum(const FlagComplex& a, Edge e_a,
                                     const FlagComplex& b, Edge e_b) {
  const auto maps = edge_star_isomorphisms(a, e_a, b, e_b);
  if (maps.empty())
    throw ConnectedSumInvalid("edge star boundaries are not isomorphic");
  return flag_connected_sum(a, edge_star_vertices(a, e_a), b,
                            edge_star_vertices(b, e_b), maps.front());
}

GluedComplex vertex_star_connected_sum(const FlagComplex& a, Vertex v_a,
                                       const FlagComplex& b, Vertex v_b) {
  const auto maps = vertex_star_isomorphisms(a, v_a, b, v_b);
  if (maps.empty())
    throw ConnectedSumInvalid("vertex links are not isomorphic cycles");
  return flag_connected_sum(a, vertex_star_vertices(a, v_a), b,
                            vertex_star_vertices(b, v_b), maps.front());
}

HandleResult flag_handle_addition(const FlagComplex& c, const Simplex& w1_in,
                                  const Simplex& w2_in,
                                  const BoundaryIsomorphism& phi) {
  const Simplex w1 = unique_sorted(w1_in);
  const Simplex w2 = unique_sorted(w2_in);
  const int n = c.vertex_count();
  for (Vertex v : w1)
    if (v < 0 || v >= n) throw HandleInvalid("vertex out of range");
  for (Vertex v : w2)
    if (v < 0 || v >= n) throw HandleInvalid("vertex out of range");
  for (Vertex u : w1) {
    const auto dist = distances_from(c.skeleton(), {u});
    for (Vertex v : w2)
      if (dist[v] < 4) throw HandleTooClose(u, v, dist[v]);
  }
  const auto facets = c.facets();
  Ball b1, b2;
  if (auto err = check_ball(c, facets, w1, b1, "first ball")) throw HandleInvalid(*err);
  if (auto err = check_ball(c, facets, w2, b2, "second ball")) throw HandleInvalid(*err);
  if (auto err = check_phi(b1, b2, phi)) throw HandleInvalid(*err);

  HandleResult out;
  out.map.assign(static_cast<std::size_t>(n), -1);
  VertexSet drop = make_vertex_set(n, b1.interior_vertices);
  drop |= make_vertex_set(n, w2);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!drop.test(v)) out.map[v] = next++;
  for (const auto& [x, y] : phi) out.map[y] = out.map[x];

  std::vector<Simplex> kept;
  for (const auto& f : facets) {
    if (is_subset(f, w1) || is_subset(f, w2)) continue;
    Simplex m;
    for (Vertex v : f) m.push_back(out.map[v]);
    m = sorted(std::move(m));
    if (std::adjacent_find(m.begin(), m.end()) != m.end())
      throw HandleInvalid("identification collapses facet " + format_simplex(f));
    kept.push_back(std::move(m));
  }
  const auto s = SimplicialComplex::from_dense(next, std::move(kept));
  if (s.vertex_count() != next) throw HandleInvalid("gluing leaves isolated vertices");
  const auto check = is_flag(s);
  if (!check)
    throw HandleInvalid("result is not flag: missing face " +
                        format_simplex(*check.witness));
  out.complex = FlagComplex::from_simplicial(s);
  return out;
}

HandleResult edge_star_handle_addition(const FlagComplex& c, Edge e1, Edge e2) {
  const auto maps = edge_star_isomorphisms(c, e1, c, e2);
  if (maps.empty()) throw HandleInvalid("edge star boundaries are not isomorphic");
  return flag_handle_addition(c, edge_star_vertices(c, e1),
                              edge_star_vertices(c, e2), maps.front());
}

std::optional<Edge> first_square_link_edge(const FlagComplex& c) {
  for (const Edge& e : c.edges())
    if (is_square_link(c, e)) return e;
  return std::nullopt;
}

std::optional<std::pair<Edge, Edge>> far_edge_pair(const FlagComplex& c) {
  std::vector<Edge> cand;
  for (const Edge& e : c.edges())
    if (is_square_link(c, e)) cand.push_back(e);
  std::vector<Simplex> stars;
  std::vector<std::vector<int>> dist;  // multi-source distances from each star
  for (const Edge& e : cand) {
    stars.push_back(edge_star_vertices(c, e));
    dist.push_back(distances_from(c.skeleton(), stars.back()));
  }
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      bool far = true;
      for (Vertex v : stars[j])
        if (dist[i][v] < 4) {
          far = false;
          break;
        }
      if (far) return std::make_pair(cand[i], cand[j]);
    }
  return std::nullopt;
}

FlagComplex surface_min(int k, bool orientable_surface) {
  if (k < 1) throw InvalidInput("surface_min needs k >= 1");
  const FlagComplex piece = fixture(orientable_surface ? "torus_12" : "rp2_11_left");
  const Vertex glue = orientable_surface ? 0 : 10;
  FlagComplex cur = piece;
  for (int i = 2; i <= k; ++i) {
    Vertex v = -1;
    for (Vertex w = 0; w < cur.vertex_count() && v < 0; ++w)
      if (cur.degree(w) == 6) v = w;
    invariant(v >= 0, "no degree-6 vertex to glue along");
    cur = vertex_star_connected_sum(cur, v, piece, glue).complex;
  }
  const int want = orientable_surface ? 8 + 4 * k : 8 + 3 * k;
  invariant(cur.vertex_count() == want, "unexpected vertex count");
  const auto type = classify_surface(cur);
  invariant(type.count == k &&
                type.kind == (orientable_surface
                                  ? SurfaceType::Kind::ConnectedSumTori
                                  : SurfaceType::Kind::ConnectedSumProjectivePlanes),
            "glued surface has the wrong type");
  return cur;
}

namespace {

struct Colored {
  FlagComplex c;
  std::vector<int> color;
};

std::vector<Edge> colored_edges(const Colored& x, int c1, int c2) {
  std::vector<Edge> out;
  for (const Edge& e : x.c.edges()) {
    const int a = x.color[e.u];
    const int b = x.color[e.v];
    if ((a == c1 && b == c2) || (a == c2 && b == c1)) out.push_back(e);
  }
  return out;
}

// Colour-preserving sum along edge stars, first admissible boundary map.
std::optional<GluedComplex> colored_sum(const Colored& a, Edge e_a,
                                        const Colored& b, Edge e_b,
                                        Colored& out) {
  for (const auto& phi : edge_star_isomorphisms(a.c, e_a, b.c, e_b)) {
    bool keeps = true;
    for (const auto& [x, y] : phi)
      if (a.color[x] != b.color[y]) {
        keeps = false;
        break;
      }
    if (!keeps) continue;
    GluedComplex g;
    try {
      g = flag_connected_sum(a.c, edge_star_vertices(a.c, e_a), b.c,
                             edge_star_vertices(b.c, e_b), phi);
    } catch (const ConnectedSumInvalid&) {
      return std::nullopt;
    }
    out.c = g.complex;
    out.color.assign(static_cast<std::size_t>(g.complex.vertex_count()), 0);
    for (Vertex v = 0; v < a.c.vertex_count(); ++v)
      if (g.map_a[v] >= 0) out.color[g.map_a[v]] = a.color[v];
    for (Vertex v = 0; v < b.c.vertex_count(); ++v)
      if (g.map_b[v] >= 0) out.color[g.map_b[v]] = b.color[v];
    return g;
  }
  return std::nullopt;
}

// Vertices of the glued complex that come only from the second summand.
std::vector<Vertex> only_second(const GluedComplex& g) {
  std::vector<bool> from_a(static_cast<std::size_t>(g.complex.vertex_count()), false);
  for (Vertex v : g.map_a)
    if (v >= 0) from_a[v] = true;
  std::vector<Vertex> out;
  for (Vertex v : g.map_b)
    if (v >= 0 && !from_a[v]) out.push_back(v);
  return sorted(std::move(out));
}

std::vector<Vertex> mapped(const Simplex& s, const std::vector<Vertex>& map) {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(map[v]);
  return sorted(std::move(out));
}

bool edge_alive(const FlagComplex& c, Edge e) {
  return e.u >= 0 && e.u != e.v && c.adjacent(e.u, e.v);
}

bool disjoint_square_stars(const FlagComplex& c, Edge e, Edge f) {
  if (!edge_alive(c, e) || !edge_alive(c, f)) return false;
  if (!is_square_link(c, e) || !is_square_link(c, f)) return false;
  const auto se = edge_star_vertices(c, e);
  const auto sf = edge_star_vertices(c, f);
  Simplex common;
  std::set_intersection(se.begin(), se.end(), sf.begin(), sf.end(),
                        std::back_inserter(common));
  return common.empty();
}

Edge track(Edge e, const std::vector<Vertex>& map) {
  if (map[e.u] < 0 || map[e.v] < 0) return Edge(-1, -1);
  return map_edge(map, e);
}

}  // namespace

MarkedComplex delta4() {
  const auto oct = octahedral_sphere(4);
  const Colored gamma{oct.complex, oct.coloring.color};
  auto antipodal = [](Edge e) { return Edge((e.u + 4) % 8, (e.v + 4) % 8); };

  for (const Edge& e : colored_edges(gamma, 1, 2))
    for (const Edge& e1 : colored_edges(gamma, 1, 2)) {
      if (e1 == e) continue;
      for (const Edge& e1p : colored_edges(gamma, 1, 2)) {
        Colored d2;
        const auto g1 = colored_sum(gamma, e1, gamma, e1p, d2);
        if (!g1) continue;
        const Edge e_d2 = track(e, g1->map_a);
        const auto lk1 = mapped(link_vertices(gamma.c, e1p.simplex()), g1->map_b);
        const auto new2 = only_second(*g1);
        for (Vertex v1 : lk1) {
          if (d2.color[v1] != 3) continue;
          for (Vertex v2 : new2) {
            if (d2.color[v2] != 2 || !d2.c.adjacent(v1, v2)) continue;
            const Edge e2(v1, v2);
            for (const Edge& e2p : colored_edges(gamma, 2, 3)) {
              Colored d3;
              const auto g2 = colored_sum(d2, e2, gamma, e2p, d3);
              if (!g2) continue;
              const Edge e_d3 = track(e_d2, g2->map_a);
              const auto lk2 = mapped(link_vertices(gamma.c, e2p.simplex()), g2->map_b);
              const auto new3 = only_second(*g2);
              for (Vertex v3 : lk2) {
                if (d3.color[v3] != 4) continue;
                for (Vertex v4 : new3) {
                  if (d3.color[v4] != 3 || !d3.c.adjacent(v3, v4)) continue;
                  const Edge e3(v3, v4);
                  for (const Edge& e3p : colored_edges(gamma, 3, 4)) {
                    Colored d4;
                    const auto g3 = colored_sum(d3, e3, gamma, e3p, d4);
                    if (!g3) continue;
                    const Edge e_out = track(e_d3, g3->map_a);
                    const Edge ep_out = track(antipodal(e3p), g3->map_b);
                    if (!disjoint_square_stars(d4.c, e_out, ep_out)) continue;
                    const auto b = betti(d4.c, Field::Rational);
                    invariant(is_closed_3_manifold(d4.c) &&
                                  b.ranks == std::vector<long long>{1, 0, 0, 1},
                              "delta4 is not a 3-sphere");
                    return {d4.c, e_out, ep_out};
                  }
                }
              }
            }
          }
        }
      }
    }
  throw ConstructionInvariantViolated("no choice of edges yields delta4");
}

MarkedComplex delta16() {
  const MarkedComplex d4 = delta4();
  MarkedComplex cur = d4;
  for (int i = 1; i < 4; ++i) {
    const auto g = edge_star_connected_sum(cur.complex, cur.e_prime, d4.complex, d4.e);
    cur.complex = g.complex;
    cur.e = track(cur.e, g.map_a);
    cur.e_prime = track(d4.e_prime, g.map_b);
  }
  invariant(disjoint_square_stars(cur.complex, cur.e, cur.e_prime),
            "marked edges of delta16 lost their square links");
  invariant(is_closed_3_manifold(cur.complex), "delta16 is not a closed 3-manifold");
  return cur;
}

FlagComplex gamma_tight(int b) {
  if (b < 1) throw InvalidInput("gamma_tight needs b >= 1");
  const MarkedComplex d16 = delta16();
  const FlagComplex gamma =
      edge_star_handle_addition(d16.complex, d16.e, d16.e_prime).complex;
  const auto gamma_edge = first_square_link_edge(gamma);
  invariant(gamma_edge.has_value(), "no edge with a square link");
  FlagComplex cur = gamma;
  for (int i = 2; i <= b; ++i) {
    const auto e = first_square_link_edge(cur);
    invariant(e.has_value(), "no edge with a square link");
    cur = edge_star_connected_sum(cur, *e, gamma, *gamma_edge).complex;
  }
  invariant(is_closed_3_manifold(cur), "result is not a closed 3-manifold");
  invariant(betti(cur, Field::Rational)[1] == b, "beta_1 differs from b");
  invariant(gamma_numbers(cur, 4).gamma2 == 16LL * b, "gamma_2 differs from 16 b");
  return cur;
}

}  // namespace flagtri
