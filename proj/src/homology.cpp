#include <gmpxx.h>

#include <map>

#include "flagtri/errors.hpp"
#include "flagtri/topology.hpp"

namespace flagtri {

std::string to_string(Field f) { return f == Field::GF2 ? "GF2" : "Q"; }

std::vector<BoundaryMatrix> boundary_matrices(
    const std::vector<std::vector<Simplex>>& faces) {
  std::vector<BoundaryMatrix> out;
  for (std::size_t k = 1; k < faces.size(); ++k) {
    const auto& lower = faces[k - 1];
    BoundaryMatrix m;
    m.rows = static_cast<int>(lower.size());
    m.columns.reserve(faces[k].size());
    Simplex sub;
    for (const auto& s : faces[k]) {
      std::vector<std::pair<int, int>> col;
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        sub.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != skip) sub.push_back(s[i]);
        auto it = std::lower_bound(lower.begin(), lower.end(), sub);
        if (it == lower.end() || *it != sub)
          throw InvalidInput("face list is not closed under taking faces");
        col.emplace_back(static_cast<int>(it - lower.begin()),
                         skip % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
      m.columns.push_back(std::move(col));
    }
    out.push_back(std::move(m));
  }
  return out;
}

long long rank_gf2(const BoundaryMatrix& m) {
  const auto rows = static_cast<std::size_t>(m.rows);
  std::vector<VertexSet> pivots(rows);
  std::vector<bool> has_pivot(rows, false);
  long long rank = 0;
  for (const auto& col : m.columns) {
    VertexSet v(rows);
    for (const auto& [r, sign] : col) v.flip(static_cast<std::size_t>(r));
    for (auto lead = v.find_first(); lead != VertexSet::npos;
         lead = v.find_first()) {
      if (!has_pivot[lead]) {
        has_pivot[lead] = true;
        pivots[lead] = std::move(v);
        ++rank;
        break;
      }
      v ^= pivots[lead];
    }
  }
  return rank;
}

namespace {

using SparseColumn = std::vector<std::pair<int, mpz_class>>;

// a * x - b * y on sorted sparse columns.
SparseColumn combine(const mpz_class& a, const SparseColumn& x,
                     const mpz_class& b, const SparseColumn& y) {
  SparseColumn out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      mpz_class v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize(SparseColumn& c) {
  if (c.empty()) return;
  mpz_class g = 0;
  for (const auto& [r, v] : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [r, v] : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

long long rank_rational(const BoundaryMatrix& m) {
  std::map<int, SparseColumn> pivots;
  long long rank = 0;
  for (const auto& col : m.columns) {
    SparseColumn c;
    c.reserve(col.size());
    for (const auto& [r, sign] : col) c.emplace_back(r, mpz_class(sign));
    while (!c.empty()) {
      auto it = pivots.find(c.front().first);
      if (it == pivots.end()) {
        const int lead = c.front().first;
        pivots.emplace(lead, std::move(c));
        ++rank;
        break;
      }
      const SparseColumn& p = it->second;
      mpz_class pv = p.front().second;
      mpz_class cv = c.front().second;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), pv.get_mpz_t(), cv.get_mpz_t());
      pv /= g;
      cv /= g;
      c = combine(pv, c, cv, p);
      normalize(c);
    }
  }
  return rank;
}

namespace {

BettiVector betti_from_faces(const std::vector<std::vector<Simplex>>& faces,
                             Field field) {
  BettiVector b;
  b.field = field;
  const auto mats = boundary_matrices(faces);
  std::vector<long long> ranks(faces.size() + 1, 0);
  for (std::size_t k = 0; k < mats.size(); ++k)
    ranks[k + 1] = field == Field::GF2 ? rank_gf2(mats[k]) : rank_rational(mats[k]);
  for (std::size_t k = 0; k < faces.size(); ++k)
    b.ranks.push_back(static_cast<long long>(faces[k].size()) - ranks[k] -
                      ranks[k + 1]);
  return b;
}

}  // namespace

BettiVector betti(const SimplicialComplex& c, Field field) {
  return betti_from_faces(c.faces(), field);
}

BettiVector betti(const FlagComplex& c, Field field) {
  std::vector<std::vector<Simplex>> faces;
  for_each_clique(c.skeleton(), [&](const Simplex& q) {
    if (faces.size() < q.size()) faces.resize(q.size());
    faces[q.size() - 1].push_back(q);
    return true;
  });
  return betti_from_faces(faces, field);
}

}  // namespace flagtri
