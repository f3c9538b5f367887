#include "flagtri/moves.hpp"

#include <set>

#include "flagtri/errors.hpp"

namespace flagtri {

namespace {

void require_edge(const FlagComplex& c, Edge e) {
  if (e.u == e.v || e.u < 0 || e.v >= c.vertex_count() || !c.adjacent(e.u, e.v))
    throw EdgeNotFound(e);
}

std::vector<Label> extend_labels(const std::vector<Label>& labels) {
  std::vector<Label> out = labels;
  Label next = 0;
  for (Label l : labels) next = std::max(next, l + 1);
  out.push_back(next);
  return out;
}

}  // namespace

SimplicialComplex stellar_subdivide(const SimplicialComplex& c,
                                    const Simplex& face) {
  if (face.empty() || !std::is_sorted(face.begin(), face.end()) ||
      !c.contains(face))
    throw FaceNotFound(face);
  const Vertex apex = c.vertex_count();
  std::vector<Simplex> out;
  for (const auto& f : c.facets()) {
    if (!is_subset(face, f)) {
      out.push_back(f);
      continue;
    }
    Simplex rest;
    std::set_difference(f.begin(), f.end(), face.begin(), face.end(),
                        std::back_inserter(rest));
    for (std::size_t skip = 0; skip < face.size(); ++skip) {
      Simplex g = rest;
      g.push_back(apex);
      for (std::size_t i = 0; i < face.size(); ++i)
        if (i != skip) g.push_back(face[i]);
      out.push_back(std::move(g));
    }
  }
  return SimplicialComplex::from_dense(apex + 1, std::move(out),
                                       extend_labels(c.labels()));
}

SimplicialComplex contract_simplicial(const SimplicialComplex& c, Edge e) {
  if (!c.contains(e.simplex())) throw EdgeNotFound(e);
  const Vertex keep = e.u;
  const Vertex drop = e.v;
  std::vector<Simplex> out;
  for (const auto& f : c.facets()) {
    Simplex g;
    for (Vertex w : f) {
      Vertex x = w == drop ? keep : w;
      if (x > drop) --x;
      g.push_back(x);
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    out.push_back(std::move(g));
  }
  std::vector<Label> labels = c.labels();
  labels.erase(labels.begin() + drop);
  return SimplicialComplex::from_dense(c.vertex_count() - 1, std::move(out),
                                       std::move(labels));
}

FlagComplex subdivide_edge(const FlagComplex& c, Edge e) {
  require_edge(c, e);
  const int n = c.vertex_count();
  Skeleton g(n + 1);
  for (const Edge& f : c.edges())
    if (f != e) g.add_edge(f.u, f.v);
  const Vertex w = n;
  g.add_edge(w, e.u);
  g.add_edge(w, e.v);
  VertexSet common = c.neighbors(e.u) & c.neighbors(e.v);
  for (auto x = common.find_first(); x != VertexSet::npos;
       x = common.find_next(x))
    g.add_edge(w, static_cast<Vertex>(x));
  return FlagComplex(std::move(g), extend_labels(c.labels()));
}

Admissibility is_admissible(const FlagComplex& c, Edge e) {
  require_edge(c, e);
  const auto& nu = c.neighbors(e.u);
  const auto& nv = c.neighbors(e.v);
  VertexSet only_u = nu - nv;
  only_u.reset(e.v);
  VertexSet only_v = nv - nu;
  only_v.reset(e.u);
  for (auto x = only_u.find_first(); x != VertexSet::npos;
       x = only_u.find_next(x)) {
    VertexSet hit = only_v & c.neighbors(static_cast<Vertex>(x));
    auto y = hit.find_first();
    if (y != VertexSet::npos)
      return {false, std::array<Vertex, 4>{e.u, e.v, static_cast<Vertex>(y),
                                           static_cast<Vertex>(x)}};
  }
  return {};
}

std::vector<Edge> admissible_edges(const FlagComplex& c) {
  std::vector<Edge> out;
  for (const Edge& e : c.edges())
    if (is_admissible(c, e)) out.push_back(e);
  return out;
}

FlagComplex contract_edge(const FlagComplex& c, Edge e) {
  auto check = is_admissible(c, e);
  if (!check) throw InadmissibleContraction(e, *check.witness);
  const int n = c.vertex_count();
  const Vertex keep = e.u;
  const Vertex drop = e.v;
  auto shift = [drop](Vertex x) { return x > drop ? x - 1 : x; };
  Skeleton g(n - 1);
  for (const Edge& f : c.edges()) {
    if (f == e) continue;
    Vertex a = f.u == drop ? keep : f.u;
    Vertex b = f.v == drop ? keep : f.v;
    if (a == b) continue;
    g.add_edge(shift(a), shift(b));
  }
  std::vector<Label> labels = c.labels();
  labels.erase(labels.begin() + drop);
  return FlagComplex(std::move(g), std::move(labels));
}

bool satisfies_link_condition(const SimplicialComplex& c, Edge e) {
  if (!c.contains(e.simplex())) throw EdgeNotFound(e);
  // Faces tau of the link of `apex`, in parent ids.
  auto link_faces = [&c](const Simplex& apex) {
    std::set<Simplex> out;
    for (const auto& f : c.facets()) {
      if (!is_subset(apex, f)) continue;
      Simplex rest;
      std::set_difference(f.begin(), f.end(), apex.begin(), apex.end(),
                          std::back_inserter(rest));
      const auto k = rest.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Simplex s;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) s.push_back(rest[i]);
        out.insert(std::move(s));
      }
    }
    return out;
  };
  const auto lu = link_faces({e.u});
  const auto lv = link_faces({e.v});
  const auto le = link_faces(e.simplex());
  std::set<Simplex> both;
  std::set_intersection(lu.begin(), lu.end(), lv.begin(), lv.end(),
                        std::inserter(both, both.begin()));
  return both == le;
}

FlagComplex apply_move(const FlagComplex& c, const Move& m) {
  if (m.kind == MoveKind::SubdivideEdge) {
    if (m.new_vertex && *m.new_vertex != c.vertex_count())
      throw InvalidInput("recorded subdivision vertex does not match replay");
    return subdivide_edge(c, m.edge);
  }
  return contract_edge(c, m.edge);
}

FlagComplex replay(const FlagComplex& seed, const MoveTrace& trace) {
  FlagComplex c = seed;
  for (const Move& m : trace.moves) c = apply_move(c, m);
  return c;
}

std::string to_string(const Move& m) {
  std::string s = m.kind == MoveKind::SubdivideEdge ? "subdivide " : "contract ";
  s += format_simplex(m.edge.simplex());
  if (m.new_vertex) s += " -> " + std::to_string(*m.new_vertex);
  return s;
}

}  // namespace flagtri
