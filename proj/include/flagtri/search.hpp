#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "flagtri/complex.hpp"
#include "flagtri/iso.hpp"
#include "flagtri/moves.hpp"
#include "flagtri/topology.hpp"

namespace flagtri {

enum class Objective { MinVertices, MinGamma2 };

std::string to_string(Objective o);

struct SearchConfig {
  std::uint64_t rng_seed = 1;
  int rounds = 1;
  int blowup_target = 0;
  Objective objective = Objective::MinVertices;
  long long max_moves_per_round = 10000;
  /// 0 = FLAGTRI_THREADS from the environment, else 1.
  int threads = 0;
  std::size_t max_per_tier = 100;
  /// Progress lines go here when set.
  std::ostream* progress = nullptr;
};

/// Thread count from FLAGTRI_THREADS (at least 1).
int default_thread_count();

/// Seed of round `round`: splitmix64 of the master seed plus the counter.
std::uint64_t round_seed(std::uint64_t master, std::uint64_t round);

/// Subdivides uniformly random edges until the complex has `target_f0`
/// vertices. Moves are appended to `trace` when given.
FlagComplex blow_up(const FlagComplex& c, int target_f0, std::mt19937_64& rng,
                    MoveTrace* trace = nullptr);

/// Contracts uniformly random admissible edges until none is left. Throws
/// RoundAborted after `max_moves` contractions.
FlagComplex contract_to_minimum(const FlagComplex& c, std::mt19937_64& rng,
                                MoveTrace* trace = nullptr,
                                long long max_moves = 10000);

struct LocalMinimumCertificate {
  bool minimum = true;
  std::vector<Edge> admissible;
  explicit operator bool() const { return minimum; }
};

LocalMinimumCertificate local_minimum_certificate(const FlagComplex& c);

struct ArchiveEntry {
  FlagComplex complex;
  CanonicalForm form;
  FVector f;
  BettiVector betti_q;
  BettiVector betti_gf2;
  /// gamma numbers for d = dim + 1.
  GammaNumbers gamma;
  std::optional<ConjectureReport> conjecture;
  long long objective_value = 0;
  int round = 0;
  /// Moves from the seed complex to `complex`.
  MoveTrace trace;
};

/// Local minima deduplicated by canonical form. Per digest the entry from
/// the lowest round is kept; per objective value at most `max_per_tier`
/// entries survive, those with the smallest digests. The stored set does not
/// depend on insertion order.
class MinimaArchive {
 public:
  explicit MinimaArchive(std::size_t max_per_tier = 100)
      : max_per_tier_(max_per_tier) {}

  /// Returns true if the entry is stored after the call.
  bool insert(ArchiveEntry entry);

  /// Entries ordered by (objective value, digest).
  std::vector<const ArchiveEntry*> entries() const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::optional<long long> best() const;
  std::size_t count_at(long long objective_value) const;
  const ArchiveEntry* find(const CanonicalForm& form) const;

  std::vector<int> aborted_rounds;
  std::vector<int> conjecture_violations;
  int rounds_run = 0;

 private:
  std::size_t max_per_tier_;
  std::map<std::vector<std::uint8_t>, ArchiveEntry> entries_;
  std::map<long long, std::vector<std::vector<std::uint8_t>>> tiers_;
};

/// Invariants recorded for a complex (archive entries, CLI sidecars).
ArchiveEntry describe(const FlagComplex& c, Objective objective);

/// The blow-up / contraction loop. Deterministic in (seed, config)
/// regardless of the thread count.
MinimaArchive run_search(const FlagComplex& seed, const SearchConfig& config);

}  // namespace flagtri
