#include "flagtri/iso.hpp"

#include <openssl/sha.h>

#include <functional>
#include <numeric>
#include <queue>

#include "flagtri/errors.hpp"

namespace flagtri {

namespace {

std::string to_hex(const std::uint8_t* data, std::size_t size) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(2 * size);
  for (std::size_t i = 0; i < size; ++i) {
    s.push_back(digits[data[i] >> 4]);
    s.push_back(digits[data[i] & 15]);
  }
  return s;
}

// Individualisation-refinement search for the canonical labelling.
//
// Colours are cell start positions in the ordered partition, so a discrete
// partition is directly a labelling. The canonical leaf is the maximum over
// all leaves of (node invariants along the path, adjacency bits).
class Canonizer {
 public:
  explicit Canonizer(const Skeleton& g) : g_(g), n_(g.vertex_count()) {}

  CanonicalForm run() {
    std::vector<int> color(static_cast<std::size_t>(n_), 0);
    visit(std::move(color), 0);
    CanonicalForm out;
    out.canonical_labeling = best_labeling_;
    out.digest = {static_cast<std::uint8_t>(n_ >> 24),
                  static_cast<std::uint8_t>(n_ >> 16),
                  static_cast<std::uint8_t>(n_ >> 8),
                  static_cast<std::uint8_t>(n_)};
    std::uint8_t byte = 0;
    int filled = 0;
    for (bool b : best_bits_) {
      byte = static_cast<std::uint8_t>(byte << 1 | (b ? 1 : 0));
      if (++filled == 8) {
        out.digest.push_back(byte);
        byte = 0;
        filled = 0;
      }
    }
    if (filled) out.digest.push_back(static_cast<std::uint8_t>(byte << (8 - filled)));
    return out;
  }

 private:
  void refine(std::vector<int>& color) const {
    std::vector<std::pair<std::vector<int>, Vertex>> sig(static_cast<std::size_t>(n_));
    std::size_t cells = count_cells(color);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[v].first;
        s.clear();
        s.push_back(color[v]);
        const auto& nv = g_.neighbors(v);
        for (auto w = nv.find_first(); w != VertexSet::npos; w = nv.find_next(w))
          s.push_back(color[w]);
        std::sort(s.begin() + 1, s.end());
        sig[v].second = v;
      }
      std::sort(sig.begin(), sig.end());
      for (std::size_t i = 0; i < sig.size(); ++i) {
        const bool same = i > 0 && sig[i].first == sig[i - 1].first;
        color[sig[i].second] = same ? color[sig[i - 1].second] : static_cast<int>(i);
      }
      const std::size_t now = count_cells(color);
      if (now == cells) return;
      cells = now;
    }
  }

  static std::size_t count_cells(const std::vector<int>& color) {
    std::vector<int> c = color;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  // Quotient of the equitable partition: cell sizes and cell-to-cell degrees.
  std::vector<int> invariant(const std::vector<int>& color) const {
    std::vector<int> size(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> rep(static_cast<std::size_t>(n_), -1);
    for (Vertex v = 0; v < n_; ++v) {
      ++size[color[v]];
      if (rep[color[v]] < 0) rep[color[v]] = v;
    }
    std::vector<int> inv;
    for (int c = 0; c < n_; ++c) {
      if (!size[c]) continue;
      inv.push_back(c);
      inv.push_back(size[c]);
      std::vector<int> nb;
      const auto& nv = g_.neighbors(rep[c]);
      for (auto w = nv.find_first(); w != VertexSet::npos; w = nv.find_next(w))
        nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      inv.insert(inv.end(), nb.begin(), nb.end());
      inv.push_back(-1);
    }
    return inv;
  }

  void visit(std::vector<int> color, std::size_t depth) {
    refine(color);
    auto inv = invariant(color);
    if (have_leaf_ || best_path_.size() > depth) {
      if (depth < best_path_.size()) {
        if (inv < best_path_[depth]) return;
        if (inv > best_path_[depth]) {
          best_path_.resize(depth);
          have_leaf_ = false;
        }
      }
    }
    if (best_path_.size() == depth) best_path_.push_back(inv);

    // Target cell: smallest non-singleton, then smallest colour.
    std::vector<int> size(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) ++size[color[v]];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    if (target < 0) {
      leaf(color);
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      std::vector<int> child = color;
      for (Vertex w = 0; w < n_; ++w)
        if (color[w] == target && w != v) child[w] = target + 1;
      visit(std::move(child), depth + 1);
    }
  }

  void leaf(const std::vector<int>& color) {
    std::vector<Vertex> inv(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) inv[color[v]] = v;
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) bits.push_back(g_.adjacent(inv[i], inv[j]));
    if (!have_leaf_ || bits > best_bits_) {
      best_bits_ = std::move(bits);
      best_labeling_ = color;
      have_leaf_ = true;
    }
  }

  const Skeleton& g_;
  int n_;
  std::vector<std::vector<int>> best_path_;
  bool have_leaf_ = false;
  std::vector<bool> best_bits_;
  std::vector<Vertex> best_labeling_;
};

}  // namespace

std::string CanonicalForm::hex() const {
  return to_hex(digest.data(), digest.size());
}

std::string CanonicalForm::short_id() const {
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(digest.data(), digest.size(), md);
  return to_hex(md, SHA256_DIGEST_LENGTH);
}

CanonicalForm canonical_form(const FlagComplex& c) {
  return Canonizer(c.skeleton()).run();
}

std::optional<std::vector<Vertex>> are_isomorphic(const FlagComplex& a,
                                                  const FlagComplex& b) {
  if (a.vertex_count() != b.vertex_count()) return std::nullopt;
  if (a.skeleton().edge_count() != b.skeleton().edge_count()) return std::nullopt;
  const auto ca = canonical_form(a);
  const auto cb = canonical_form(b);
  if (ca.digest != cb.digest) return std::nullopt;
  const int n = a.vertex_count();
  std::vector<Vertex> inv_b(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) inv_b[cb.canonical_labeling[v]] = v;
  std::vector<Vertex> map(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) map[v] = inv_b[ca.canonical_labeling[v]];
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (a.adjacent(u, v) != b.adjacent(map[u], map[v]))
        throw ConstructionInvariantViolated("canonical labelling is not an isomorphism");
  return map;
}

FlagComplex permute(const FlagComplex& c, const std::vector<Vertex>& perm) {
  const int n = c.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw InvalidInput("permutation size mismatch");
  Skeleton g(n);
  for (const Edge& e : c.edges()) g.add_edge(perm[e.u], perm[e.v]);
  std::vector<Label> labels(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) labels[perm[v]] = c.labels()[v];
  return FlagComplex(std::move(g), std::move(labels));
}

std::vector<int> distances_from(const Skeleton& g, const Simplex& sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::queue<Vertex> todo;
  for (Vertex s : sources) {
    if (dist[s] == 0) continue;
    dist[s] = 0;
    todo.push(s);
  }
  while (!todo.empty()) {
    const Vertex u = todo.front();
    todo.pop();
    const auto& nu = g.neighbors(u);
    for (auto w = nu.find_first(); w != VertexSet::npos; w = nu.find_next(w))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        todo.push(static_cast<Vertex>(w));
      }
  }
  return dist;
}

int graph_distance(const FlagComplex& c, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= c.vertex_count() || v >= c.vertex_count())
    throw InvalidInput("vertex out of range");
  return distances_from(c.skeleton(), {u})[v];
}

}  // namespace flagtri
