#include "flagtri/complex.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "flagtri/errors.hpp"

namespace flagtri {

VertexSet make_vertex_set(int n, std::span<const Vertex> vertices) {
  VertexSet s(static_cast<std::size_t>(n));
  for (Vertex v : vertices) s.set(static_cast<std::size_t>(v));
  return s;
}

std::vector<Vertex> members(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Vertex>(i));
  return out;
}

bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string format_simplex(std::span<const Vertex> s, int offset) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i] + offset;
  }
  out << '}';
  return out.str();
}

std::string format_counts(std::span<const long long> counts) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out << ',';
    out << counts[i];
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex() : facets_{Simplex{}} { index(); }

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<Label>>& facets) {
  if (facets.empty()) throw InvalidInput("empty facet list");
  std::set<Label> all;
  for (const auto& f : facets) {
    std::set<Label> seen(f.begin(), f.end());
    if (seen.size() != f.size())
      throw InvalidInput("facet lists a vertex more than once");
    all.insert(f.begin(), f.end());
  }
  std::vector<Label> labels(all.begin(), all.end());
  std::map<Label, Vertex> id;
  for (std::size_t i = 0; i < labels.size(); ++i)
    id[labels[i]] = static_cast<Vertex>(i);
  std::vector<Simplex> dense;
  dense.reserve(facets.size());
  for (const auto& f : facets) {
    Simplex s;
    for (Label l : f) s.push_back(id.at(l));
    dense.push_back(std::move(s));
  }
  const int n = static_cast<int>(labels.size());
  return from_dense(n, std::move(dense), std::move(labels));
}

SimplicialComplex SimplicialComplex::from_dense(int vertex_count,
                                                std::vector<Simplex> facets,
                                                std::vector<Label> labels) {
  if (facets.empty()) throw InvalidInput("empty facet list");
  if (labels.empty()) {
    labels.resize(static_cast<std::size_t>(vertex_count));
    std::iota(labels.begin(), labels.end(), Label{0});
  }
  if (static_cast<int>(labels.size()) != vertex_count)
    throw InvalidInput("label map size does not match vertex count");
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InvalidInput("facet lists a vertex more than once");
    for (Vertex v : f)
      if (v < 0 || v >= vertex_count)
        throw InvalidInput("vertex id out of range");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  // Larger sets first so every candidate only needs to be compared with
  // already accepted facets.
  std::vector<std::size_t> order(facets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return facets[a].size() > facets[b].size();
  });
  std::vector<VertexSet> kept_bits;
  std::vector<Simplex> kept;
  for (auto i : order) {
    VertexSet bits = make_vertex_set(vertex_count, facets[i]);
    bool absorbed = false;
    for (const auto& k : kept_bits)
      if (bits.is_subset_of(k)) {
        absorbed = true;
        break;
      }
    if (!absorbed) {
      kept_bits.push_back(std::move(bits));
      kept.push_back(std::move(facets[i]));
    }
  }

  // Squeeze out unused vertices.
  std::vector<Vertex> remap(static_cast<std::size_t>(vertex_count), -1);
  for (const auto& f : kept)
    for (Vertex v : f) remap[v] = 0;
  Vertex next = 0;
  std::vector<Label> used_labels;
  for (Vertex v = 0; v < vertex_count; ++v)
    if (remap[v] == 0) {
      remap[v] = next++;
      used_labels.push_back(labels[v]);
    }
  for (auto& f : kept)
    for (Vertex& v : f) v = remap[v];
  std::sort(kept.begin(), kept.end());

  SimplicialComplex c;
  c.n_ = next;
  c.facets_ = std::move(kept);
  c.labels_ = std::move(used_labels);
  c.index();
  return c;
}

void SimplicialComplex::index() {
  dim_ = -1;
  for (const auto& f : facets_)
    dim_ = std::max(dim_, static_cast<int>(f.size()) - 1);
  facet_bits_.clear();
  vertex_facets_.assign(static_cast<std::size_t>(n_), {});
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    facet_bits_.push_back(make_vertex_set(n_, facets_[i]));
    for (Vertex v : facets_[i]) vertex_facets_[v].push_back(static_cast<int>(i));
  }
}

bool SimplicialComplex::contains(std::span<const Vertex> face) const {
  if (face.empty()) return true;
  for (Vertex v : face)
    if (v < 0 || v >= n_) return false;
  for (int i : vertex_facets_[face.front()]) {
    const auto& bits = facet_bits_[i];
    bool all = true;
    for (Vertex v : face)
      if (!bits.test(v)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets_)
    if (static_cast<int>(f.size()) != dim_ + 1) return false;
  return true;
}

std::vector<std::vector<Simplex>> SimplicialComplex::faces() const {
  std::vector<std::set<Simplex>> by_dim(static_cast<std::size_t>(dim_ + 1));
  for (const auto& f : facets_) {
    const auto k = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      by_dim[s.size() - 1].insert(std::move(s));
    }
  }
  std::vector<std::vector<Simplex>> out;
  for (auto& level : by_dim) out.emplace_back(level.begin(), level.end());
  return out;
}

// ---------------------------------------------------------------------------
// Skeleton

Skeleton::Skeleton(int vertex_count)
    : rows_(static_cast<std::size_t>(vertex_count),
            VertexSet(static_cast<std::size_t>(vertex_count))) {}

void Skeleton::add_edge(Vertex a, Vertex b) {
  if (a == b) throw InvalidInput("self-loop in skeleton");
  rows_[a].set(b);
  rows_[b].set(a);
}

void Skeleton::remove_edge(Vertex a, Vertex b) {
  rows_[a].reset(b);
  rows_[b].reset(a);
}

std::vector<Edge> Skeleton::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (auto v = rows_[u].find_next(u); v != VertexSet::npos;
         v = rows_[u].find_next(v))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

std::size_t Skeleton::edge_count() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total / 2;
}

Skeleton Skeleton::induced(const std::vector<Vertex>& keep) const {
  Skeleton g(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j]))
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

Skeleton skeleton(const SimplicialComplex& c) {
  Skeleton g(c.vertex_count());
  for (const auto& f : c.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) g.add_edge(f[i], f[j]);
  return g;
}

void for_each_clique(const Skeleton& g,
                     const std::function<bool(const Simplex&)>& visit) {
  const int n = g.vertex_count();
  Simplex clique;
  // DFS keeps lexicographic order: a clique is always visited
  // before any of its extensions and extensions are tried by increasing id.
  std::function<void(const VertexSet&)> recurse = [&](const VertexSet& cand) {
    for (auto v = cand.find_first(); v != VertexSet::npos;
         v = cand.find_next(v)) {
      clique.push_back(static_cast<Vertex>(v));
      if (visit(clique)) {
        VertexSet next = cand & g.neighbors(static_cast<Vertex>(v));
        for (auto w = next.find_first(); w != VertexSet::npos && w <= v;
             w = next.find_next(w))
          next.reset(w);
        if (next.any()) recurse(next);
      }
      clique.pop_back();
    }
  };
  VertexSet all(static_cast<std::size_t>(n));
  all.set();
  recurse(all);
}

std::vector<Simplex> maximal_cliques(const Skeleton& g) {
  const int n = g.vertex_count();
  std::vector<Simplex> out;
  Simplex r;
  std::function<void(VertexSet, VertexSet)> bron_kerbosch = [&](VertexSet p,
                                                                VertexSet x) {
    if (p.none()) {
      if (x.none()) {
        Simplex s = r;
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
      }
      return;
    }
    // Pivot on the vertex of P u X with the most neighbours in P.
    VertexSet px = p | x;
    std::size_t pivot = px.find_first();
    std::size_t best = 0;
    for (auto u = px.find_first(); u != VertexSet::npos; u = px.find_next(u)) {
      const auto k = (p & g.neighbors(static_cast<Vertex>(u))).count();
      if (k >= best) {
        best = k;
        pivot = u;
      }
    }
    VertexSet todo = p - g.neighbors(static_cast<Vertex>(pivot));
    for (auto v = todo.find_first(); v != VertexSet::npos;
         v = todo.find_next(v)) {
      const auto& nv = g.neighbors(static_cast<Vertex>(v));
      r.push_back(static_cast<Vertex>(v));
      bron_kerbosch(p & nv, x & nv);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  };
  if (n == 0) return {Simplex{}};
  VertexSet p(static_cast<std::size_t>(n));
  p.set();
  bron_kerbosch(p, VertexSet(static_cast<std::size_t>(n)));
  std::sort(out.begin(), out.end());
  return out;
}

int connected_components(const Skeleton& g, std::vector<int>* component) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      const auto& nu = g.neighbors(u);
      for (auto w = nu.find_first(); w != VertexSet::npos; w = nu.find_next(w))
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(static_cast<Vertex>(w));
        }
    }
    ++count;
  }
  if (component) *component = std::move(comp);
  return count;
}

// ---------------------------------------------------------------------------
// FlagComplex

FlagComplex::FlagComplex(Skeleton graph, std::vector<Label> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.resize(static_cast<std::size_t>(graph_.vertex_count()));
    std::iota(labels_.begin(), labels_.end(), Label{0});
  }
  if (static_cast<int>(labels_.size()) != graph_.vertex_count())
    throw InvalidInput("label map size does not match vertex count");
}

FlagComplex FlagComplex::from_simplicial(const SimplicialComplex& c) {
  auto check = is_flag(c);
  if (!check)
    throw InvalidInput("complex is not flag: missing face " +
                       format_simplex(*check.witness));
  return FlagComplex(flagtri::skeleton(c), c.labels());
}

bool FlagComplex::contains(std::span<const Vertex> face) const {
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (face[i] < 0 || face[i] >= vertex_count()) return false;
    for (std::size_t j = i + 1; j < face.size(); ++j)
      if (face[i] == face[j] || !adjacent(face[i], face[j])) return false;
  }
  return true;
}

int FlagComplex::dim() const {
  int best = -1;
  for (const auto& f : facets())
    best = std::max(best, static_cast<int>(f.size()) - 1);
  return best;
}

std::vector<Simplex> FlagComplex::facets() const {
  return maximal_cliques(graph_);
}

SimplicialComplex FlagComplex::to_simplicial() const {
  return SimplicialComplex::from_dense(vertex_count(), facets(), labels_);
}

// ---------------------------------------------------------------------------
// Queries

FlagCheck is_flag(const SimplicialComplex& c) {
  const Skeleton g = skeleton(c);
  FlagCheck result;
  for_each_clique(g, [&](const Simplex& q) {
    if (result.witness) return false;
    if (q.size() < 3 || c.contains(q)) return true;
    // A non-face clique; it is a missing face when every facet of its
    // boundary is a face. Lexicographic visiting order makes the first hit
    // the smallest.
    Simplex sub;
    for (std::size_t skip = 0; skip < q.size(); ++skip) {
      sub.clear();
      for (std::size_t i = 0; i < q.size(); ++i)
        if (i != skip) sub.push_back(q[i]);
      if (!c.contains(sub)) return false;
    }
    result.flag = false;
    result.witness = q;
    return false;
  });
  return result;
}

namespace {

void require_face(const SimplicialComplex& c, const Simplex& face) {
  if (!std::is_sorted(face.begin(), face.end()) || !c.contains(face))
    throw FaceNotFound(face);
}

void require_face(const FlagComplex& c, const Simplex& face) {
  if (!std::is_sorted(face.begin(), face.end()) || !c.contains(face))
    throw FaceNotFound(face);
}

std::vector<Label> identity_labels(int n) {
  std::vector<Label> l(static_cast<std::size_t>(n));
  std::iota(l.begin(), l.end(), Label{0});
  return l;
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& c, const Simplex& face) {
  require_face(c, face);
  std::vector<Simplex> out;
  for (const auto& f : c.facets()) {
    if (!is_subset(face, f)) continue;
    Simplex rest;
    std::set_difference(f.begin(), f.end(), face.begin(), face.end(),
                        std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return SimplicialComplex::from_dense(c.vertex_count(), std::move(out),
                                       identity_labels(c.vertex_count()));
}

SimplicialComplex star(const SimplicialComplex& c, const Simplex& face) {
  require_face(c, face);
  std::vector<Simplex> out;
  for (const auto& f : c.facets())
    if (is_subset(face, f)) out.push_back(f);
  return SimplicialComplex::from_dense(c.vertex_count(), std::move(out),
                                       identity_labels(c.vertex_count()));
}

SimplicialComplex induced(const SimplicialComplex& c, const Simplex& vertices) {
  for (Vertex v : vertices)
    if (v < 0 || v >= c.vertex_count())
      throw InvalidInput("restriction vertex out of range");
  const VertexSet keep = make_vertex_set(c.vertex_count(), vertices);
  std::vector<Simplex> out;
  for (const auto& f : c.facets()) {
    Simplex part;
    for (Vertex v : f)
      if (keep.test(v)) part.push_back(v);
    out.push_back(std::move(part));
  }
  return SimplicialComplex::from_dense(c.vertex_count(), std::move(out),
                                       identity_labels(c.vertex_count()));
}

Simplex link_vertices(const FlagComplex& c, const Simplex& face) {
  require_face(c, face);
  VertexSet common(static_cast<std::size_t>(c.vertex_count()));
  common.set();
  for (Vertex v : face) common &= c.neighbors(v);
  return members(common);
}

FlagComplex induced(const FlagComplex& c, const Simplex& vertices) {
  Simplex keep = vertices;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (Vertex v : keep)
    if (v < 0 || v >= c.vertex_count())
      throw InvalidInput("restriction vertex out of range");
  std::vector<Label> labels(keep.begin(), keep.end());
  return FlagComplex(c.skeleton().induced(keep), std::move(labels));
}

FlagComplex link(const FlagComplex& c, const Simplex& face) {
  return induced(c, link_vertices(c, face));
}

FlagComplex star(const FlagComplex& c, const Simplex& face) {
  Simplex w = link_vertices(c, face);
  w.insert(w.end(), face.begin(), face.end());
  return induced(c, w);
}

std::vector<Simplex> missing_faces(const SimplicialComplex& c, int max_card) {
  if (max_card < 2) throw InvalidInput("max_card must be at least 2");
  std::vector<Simplex> out;
  const int n = c.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!c.contains(Simplex{u, v})) out.push_back({u, v});
  if (max_card >= 3) {
    for_each_clique(skeleton(c), [&](const Simplex& q) {
      if (q.size() < 3) return true;
      if (static_cast<int>(q.size()) > max_card) return false;
      if (c.contains(q)) return true;
      Simplex sub;
      for (std::size_t skip = 0; skip < q.size(); ++skip) {
        sub.clear();
        for (std::size_t i = 0; i < q.size(); ++i)
          if (i != skip) sub.push_back(q[i]);
        if (!c.contains(sub)) return false;
      }
      out.push_back(q);
      return false;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

FVector f_vector(const SimplicialComplex& c) {
  FVector f;
  for (const auto& level : c.faces())
    f.counts.push_back(static_cast<long long>(level.size()));
  return f;
}

FVector f_vector(const FlagComplex& c) {
  FVector f;
  for_each_clique(c.skeleton(), [&](const Simplex& q) {
    if (f.counts.size() <= q.size()) f.counts.resize(q.size() + 1, 0);
    ++f.counts[q.size()];
    return true;
  });
  return f;
}

long long euler_characteristic(const FVector& f) {
  long long chi = 0;
  for (int i = 0; i <= f.dim(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f.f(i);
  return chi;
}

long long euler_characteristic(const SimplicialComplex& c) {
  return euler_characteristic(f_vector(c));
}

long long euler_characteristic(const FlagComplex& c) {
  return euler_characteristic(f_vector(c));
}

}  // namespace flagtri
