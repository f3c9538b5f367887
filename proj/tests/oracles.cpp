#include "oracles.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

std::set<Simplex> all_faces(const flagtri::SimplicialComplex& c) {
  std::set<Simplex> out;
  for (const auto& f : c.facets()) {
    const std::size_t k = f.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      out.insert(s);
    }
  }
  return out;
}

std::set<Simplex> all_cliques(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::set<Simplex> out;
  std::vector<Simplex> frontier;
  for (int v = 0; v < n; ++v) frontier.push_back({v});
  while (!frontier.empty()) {
    std::vector<Simplex> next;
    for (const auto& q : frontier) {
      out.insert(q);
      for (int w = q.back() + 1; w < n; ++w) {
        bool ok = true;
        for (int u : q) ok = ok && adj[u][w];
        if (ok) {
          Simplex r = q;
          r.push_back(w);
          next.push_back(r);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<std::vector<bool>> adjacency(const flagtri::SimplicialComplex& c) {
  const int n = c.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& f : c.facets())
    for (int u : f)
      for (int v : f)
        if (u != v) adj[u][v] = true;
  return adj;
}

std::vector<std::vector<bool>> adjacency(const flagtri::FlagComplex& c) {
  const int n = c.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) adj[u][v] = c.adjacent(u, v);
  return adj;
}

std::vector<long long> f_vector(const std::set<Simplex>& faces) {
  std::vector<long long> f{1};
  for (const auto& s : faces) {
    if (f.size() <= s.size()) f.resize(s.size() + 1, 0);
    ++f[s.size()];
  }
  return f;
}

bool is_flag(const flagtri::SimplicialComplex& c) {
  return all_faces(c) == all_cliques(adjacency(c));
}

namespace {

std::vector<std::vector<Simplex>> faces_by_dim(const flagtri::SimplicialComplex& c) {
  std::vector<std::vector<Simplex>> out;
  for (const auto& s : all_faces(c)) {
    if (out.size() < s.size()) out.resize(s.size());
    out[s.size() - 1].push_back(s);
  }
  return out;
}

long long rank_q(std::vector<std::vector<mpq_class>> m) {
  long long rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

long long rank_2(std::vector<std::vector<bool>> m) {
  long long rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && !m[p][c]) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && m[i][c])
        for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] != m[r][j];
    ++r;
    ++rank;
  }
  return rank;
}

template <typename Rank>
std::vector<long long> betti_with(const flagtri::SimplicialComplex& c, Rank rank) {
  const auto faces = faces_by_dim(c);
  std::vector<long long> ranks(faces.size() + 1, 0);
  for (std::size_t k = 1; k < faces.size(); ++k) {
    std::map<Simplex, std::size_t> row;
    for (std::size_t i = 0; i < faces[k - 1].size(); ++i) row[faces[k - 1][i]] = i;
    std::vector<std::vector<int>> m(faces[k - 1].size(),
                                    std::vector<int>(faces[k].size(), 0));
    for (std::size_t j = 0; j < faces[k].size(); ++j) {
      const auto& s = faces[k][j];
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        Simplex sub;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != skip) sub.push_back(s[i]);
        m[row.at(sub)][j] = skip % 2 ? -1 : 1;
      }
    }
    ranks[k] = rank(m);
  }
  std::vector<long long> b;
  for (std::size_t k = 0; k < faces.size(); ++k)
    b.push_back(static_cast<long long>(faces[k].size()) - ranks[k] - ranks[k + 1]);
  return b;
}

}  // namespace

std::vector<long long> betti_q(const flagtri::SimplicialComplex& c) {
  return betti_with(c, [](const std::vector<std::vector<int>>& m) {
    std::vector<std::vector<mpq_class>> q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int v : m[i]) q[i].emplace_back(v);
    return rank_q(std::move(q));
  });
}

std::vector<long long> betti_gf2(const flagtri::SimplicialComplex& c) {
  return betti_with(c, [](const std::vector<std::vector<int>>& m) {
    std::vector<std::vector<bool>> b(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int v : m[i]) b[i].push_back(v != 0);
    return rank_2(std::move(b));
  });
}

std::vector<flagtri::Edge> admissible_edges(const flagtri::FlagComplex& c) {
  const auto adj = adjacency(c);
  const int n = c.vertex_count();
  std::set<flagtri::Edge> bad;
  std::vector<int> q(4);
  for (q[0] = 0; q[0] < n; ++q[0])
    for (q[1] = q[0] + 1; q[1] < n; ++q[1])
      for (q[2] = q[1] + 1; q[2] < n; ++q[2])
        for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
          int edges = 0;
          bool all_deg2 = true;
          for (int i = 0; i < 4; ++i) {
            int deg = 0;
            for (int j = 0; j < 4; ++j)
              if (i != j && adj[q[i]][q[j]]) ++deg;
            all_deg2 = all_deg2 && deg == 2;
            edges += deg;
          }
          if (!all_deg2 || edges != 8) continue;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (adj[q[i]][q[j]]) bad.insert(flagtri::Edge(q[i], q[j]));
        }
  std::vector<flagtri::Edge> out;
  for (const auto& e : c.edges())
    if (!bad.count(e)) out.push_back(e);
  return out;
}

bool isomorphic(const std::vector<std::vector<bool>>& a,
                const std::vector<std::vector<bool>>& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) ok = a[i][j] == b[p[i]][p[j]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace oracle
