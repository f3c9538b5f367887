#include <map>
#include <queue>

#include "flagtri/errors.hpp"
#include "flagtri/topology.hpp"

namespace flagtri {

namespace {

// Graph on the vertices of `edges`, relabelled densely.
Skeleton graph_of(const std::vector<Edge>& edges) {
  std::map<Vertex, Vertex> id;
  for (const Edge& e : edges) {
    id.emplace(e.u, 0);
    id.emplace(e.v, 0);
  }
  Vertex next = 0;
  for (auto& [v, i] : id) i = next++;
  Skeleton g(next);
  for (const Edge& e : edges) g.add_edge(id[e.u], id[e.v]);
  return g;
}

ManifoldCheck fail(std::string why) { return {false, std::move(why)}; }

ManifoldCheck check_connected(const SimplicialComplex& c) {
  const int k = connected_components(skeleton(c));
  if (k != 1) return fail("disconnected: " + std::to_string(k) + " components");
  return {};
}

ManifoldCheck check_closed_curve(const SimplicialComplex& c) {
  if (!c.is_pure()) throw NotPure("complex is not pure");
  if (c.dim() != 1) return fail("dimension is not 1");
  if (!is_cycle_graph(skeleton(c))) return fail("graph is not a single cycle");
  return {};
}

}  // namespace

bool is_cycle_graph(const Skeleton& g) {
  if (g.vertex_count() < 3) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return connected_components(g) == 1;
}

ManifoldCheck check_closed_surface(const SimplicialComplex& c) {
  if (!c.is_pure()) throw NotPure("complex is not pure");
  if (c.dim() != 2) return fail("dimension is not 2");
  if (auto conn = check_connected(c); !conn) return conn;
  std::vector<std::vector<Edge>> links(static_cast<std::size_t>(c.vertex_count()));
  for (const auto& f : c.facets()) {
    links[f[0]].emplace_back(f[1], f[2]);
    links[f[1]].emplace_back(f[0], f[2]);
    links[f[2]].emplace_back(f[0], f[1]);
  }
  for (Vertex v = 0; v < c.vertex_count(); ++v)
    if (!is_cycle_graph(graph_of(links[v])))
      return fail("link of vertex " + std::to_string(v) + " is not a cycle");
  return {};
}

ManifoldCheck check_closed_3_manifold(const SimplicialComplex& c) {
  if (!c.is_pure()) throw NotPure("complex is not pure");
  if (c.dim() != 3) return fail("dimension is not 3");
  if (auto conn = check_connected(c); !conn) return conn;
  const int n = c.vertex_count();
  std::vector<std::vector<Simplex>> vertex_links(static_cast<std::size_t>(n));
  std::map<Edge, std::vector<Edge>> edge_links;
  for (const auto& f : c.facets()) {
    for (int i = 0; i < 4; ++i) {
      Simplex rest;
      for (int j = 0; j < 4; ++j)
        if (j != i) rest.push_back(f[j]);
      vertex_links[f[i]].push_back(std::move(rest));
      for (int j = i + 1; j < 4; ++j) {
        Simplex other;
        for (int k = 0; k < 4; ++k)
          if (k != i && k != j) other.push_back(f[k]);
        edge_links[Edge(f[i], f[j])].emplace_back(other[0], other[1]);
      }
    }
  }
  for (const auto& [e, edges] : edge_links)
    if (!is_cycle_graph(graph_of(edges)))
      return fail("link of edge " + format_simplex(e.simplex()) +
                  " is not a cycle");
  for (Vertex v = 0; v < n; ++v) {
    auto lk = SimplicialComplex::from_dense(n, vertex_links[v]);
    auto surf = check_closed_surface(lk);
    if (!surf)
      return fail("link of vertex " + std::to_string(v) + ": " + surf.reason);
    if (euler_characteristic(lk) != 2)
      return fail("link of vertex " + std::to_string(v) + " is not a sphere");
  }
  return {};
}

ManifoldCheck check_closed_manifold(const SimplicialComplex& c) {
  switch (c.dim()) {
    case 1: {
      auto r = check_closed_curve(c);
      return r;
    }
    case 2:
      return check_closed_surface(c);
    case 3:
      return check_closed_3_manifold(c);
    default:
      return fail("manifold checks cover dimensions 1 to 3 only");
  }
}

bool is_closed_surface(const SimplicialComplex& c) {
  return check_closed_surface(c).ok;
}
bool is_closed_surface(const FlagComplex& c) {
  return is_closed_surface(c.to_simplicial());
}
bool is_closed_3_manifold(const SimplicialComplex& c) {
  return check_closed_3_manifold(c).ok;
}
bool is_closed_3_manifold(const FlagComplex& c) {
  return is_closed_3_manifold(c.to_simplicial());
}

bool orientable(const SimplicialComplex& c) {
  if (!c.is_pure()) throw NotManifold("complex is not pure");
  auto check = check_closed_manifold(c);
  if (!check) throw NotManifold(check.reason);

  const auto& facets = c.facets();
  // ridge -> (facet, sign of the ridge inside that facet's boundary)
  std::map<Simplex, std::vector<std::pair<int, int>>> ridges;
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t skip = 0; skip < facets[f].size(); ++skip) {
      Simplex r;
      for (std::size_t i = 0; i < facets[f].size(); ++i)
        if (i != skip) r.push_back(facets[f][i]);
      ridges[r].emplace_back(static_cast<int>(f), skip % 2 == 0 ? 1 : -1);
    }

  std::vector<int> orient(facets.size(), 0);
  std::vector<std::vector<std::pair<int, int>>> adj(facets.size());
  for (const auto& [r, inc] : ridges) {
    if (inc.size() != 2) throw NotManifold("ridge not in exactly two facets");
    // Coherent orientations induce opposite signs on the shared ridge, so
    // orient[b] = -orient[a] * sa * sb.
    const int rel = -inc[0].second * inc[1].second;
    adj[inc[0].first].emplace_back(inc[1].first, rel);
    adj[inc[1].first].emplace_back(inc[0].first, rel);
  }
  std::queue<int> todo;
  orient[0] = 1;
  todo.push(0);
  bool coherent = true;
  while (!todo.empty() && coherent) {
    const int f = todo.front();
    todo.pop();
    for (const auto& [g, rel] : adj[f]) {
      const int want = orient[f] * rel;
      if (orient[g] == 0) {
        orient[g] = want;
        todo.push(g);
      } else if (orient[g] != want) {
        coherent = false;
        break;
      }
    }
  }
  // A closed connected manifold is orientable iff its top rational Betti
  // number is 1.
  const bool top = betti(c, Field::Rational)[static_cast<std::size_t>(c.dim())] == 1;
  if (top != coherent)
    throw ConstructionInvariantViolated("orientation propagation disagrees with homology");
  return coherent;
}

bool orientable(const FlagComplex& c) { return orientable(c.to_simplicial()); }

std::string SurfaceType::to_string() const {
  switch (kind) {
    case Kind::Sphere:
      return "S^2";
    case Kind::ConnectedSumTori:
      return count == 1 ? "T^2" : "#" + std::to_string(count) + " T^2";
    case Kind::ConnectedSumProjectivePlanes:
      return count == 1 ? "RP^2" : "#" + std::to_string(count) + " RP^2";
  }
  return "?";
}

SurfaceType classify_surface(const SimplicialComplex& c) {
  if (!c.is_pure()) throw NotManifold("complex is not pure");
  auto check = check_closed_surface(c);
  if (!check) throw NotManifold(check.reason);
  const long long chi = euler_characteristic(c);
  SurfaceType t;
  if (orientable(c)) {
    if (chi == 2) return t;
    t.kind = SurfaceType::Kind::ConnectedSumTori;
    t.count = static_cast<int>((2 - chi) / 2);
  } else {
    t.kind = SurfaceType::Kind::ConnectedSumProjectivePlanes;
    t.count = static_cast<int>(2 - chi);
  }
  return t;
}

SurfaceType classify_surface(const FlagComplex& c) {
  return classify_surface(c.to_simplicial());
}

GammaNumbers gamma_numbers(const FVector& f, int d) {
  GammaNumbers g;
  const long long f0 = f.f(0);
  const long long f1 = f.f(1);
  const long long dd = d;
  g.gamma1 = f0 - 2 * dd;
  g.gamma2 = f1 - (2 * dd - 3) * f0 + 2 * dd * (dd - 2);
  g.g2 = f1 - dd * f0 + (dd + 1) * dd / 2;
  g.g2_bar = 2 * f1 - 3 * (dd - 1) * f0 + 2 * dd * (dd - 1);
  return g;
}

GammaNumbers gamma_numbers(const SimplicialComplex& c, int d) {
  if (!c.is_pure() || c.dim() != d - 1)
    throw DimensionMismatch("expected a pure complex of dimension " +
                            std::to_string(d - 1) + ", got dimension " +
                            std::to_string(c.dim()));
  return gamma_numbers(f_vector(c), d);
}

GammaNumbers gamma_numbers(const FlagComplex& c, int d) {
  const auto s = c.to_simplicial();
  if (!s.is_pure() || s.dim() != d - 1)
    throw DimensionMismatch("expected a pure complex of dimension " +
                            std::to_string(d - 1) + ", got dimension " +
                            std::to_string(s.dim()));
  return gamma_numbers(f_vector(c), d);
}

ConjectureReport conjecture_check(const FlagComplex& c, Field field) {
  ConjectureReport r;
  r.gamma2 = gamma_numbers(c, 4).gamma2;
  r.beta1 = betti(c, field)[1];
  r.satisfied = r.gamma2 >= 16 * r.beta1;
  return r;
}

}  // namespace flagtri
