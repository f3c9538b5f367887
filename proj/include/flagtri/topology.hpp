#pragma once

#include <string>
#include <vector>

#include "flagtri/complex.hpp"

namespace flagtri {

enum class Field { GF2, Rational };

std::string to_string(Field f);

struct BettiVector {
  Field field = Field::Rational;
  /// ranks[i] = beta_i for i = 0..dim.
  std::vector<long long> ranks;

  long long operator[](std::size_t i) const {
    return i < ranks.size() ? ranks[i] : 0;
  }
  std::string to_string() const { return format_counts(ranks); }
  bool operator==(const BettiVector&) const = default;
};

/// Sparse boundary matrix of C_k -> C_{k-1}; column j lists the (row, sign)
/// pairs of the j-th k-face.
struct BoundaryMatrix {
  int rows = 0;
  std::vector<std::vector<std::pair<int, int>>> columns;
};

/// Boundary matrices d_1..d_dim over the given face lists (faces[k] sorted).
std::vector<BoundaryMatrix> boundary_matrices(
    const std::vector<std::vector<Simplex>>& faces);

long long rank_gf2(const BoundaryMatrix& m);
/// Exact rank over Q (fraction-free elimination on big integers).
long long rank_rational(const BoundaryMatrix& m);

BettiVector betti(const SimplicialComplex& c, Field field);
BettiVector betti(const FlagComplex& c, Field field);

/// Outcome of a manifold test; `reason` names the first failing check.
struct ManifoldCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Connected graph in which every vertex has degree two.
bool is_cycle_graph(const Skeleton& g);

/// Throws NotPure for non-pure input; other failures are reported.
ManifoldCheck check_closed_surface(const SimplicialComplex& c);
ManifoldCheck check_closed_3_manifold(const SimplicialComplex& c);
bool is_closed_surface(const SimplicialComplex& c);
bool is_closed_surface(const FlagComplex& c);
bool is_closed_3_manifold(const SimplicialComplex& c);
bool is_closed_3_manifold(const FlagComplex& c);

/// Closed manifold check for dimension 1, 2 or 3.
ManifoldCheck check_closed_manifold(const SimplicialComplex& c);

/// Consistent facet orientation by propagation across ridges. Throws
/// NotManifold unless `c` is a closed manifold of dimension 1..3.
bool orientable(const SimplicialComplex& c);
bool orientable(const FlagComplex& c);

struct SurfaceType {
  enum class Kind { Sphere, ConnectedSumTori, ConnectedSumProjectivePlanes };
  Kind kind = Kind::Sphere;
  int count = 0;

  std::string to_string() const;
  bool operator==(const SurfaceType&) const = default;
};

SurfaceType classify_surface(const SimplicialComplex& c);
SurfaceType classify_surface(const FlagComplex& c);

struct GammaNumbers {
  long long gamma1 = 0;
  long long gamma2 = 0;
  long long g2 = 0;
  long long g2_bar = 0;
  bool operator==(const GammaNumbers&) const = default;
};

/// gamma_1 = f0 - 2d, gamma_2 = f1 - (2d-3) f0 + 2d(d-2),
/// g_2 = f1 - d f0 + C(d+1,2), g2_bar = 2 f1 - 3(d-1) f0 + 2d(d-1).
GammaNumbers gamma_numbers(const FVector& f, int d);
/// Throws DimensionMismatch unless `c` is pure of dimension d-1.
GammaNumbers gamma_numbers(const SimplicialComplex& c, int d);
GammaNumbers gamma_numbers(const FlagComplex& c, int d);

struct ConjectureReport {
  long long gamma2 = 0;
  long long beta1 = 0;
  bool satisfied = true;  // gamma2 >= 16 beta1
};

/// Evaluates gamma_2 >= 16 beta_1 for a flag 3-manifold.
ConjectureReport conjecture_check(const FlagComplex& c,
                                  Field field = Field::Rational);

}  // namespace flagtri
