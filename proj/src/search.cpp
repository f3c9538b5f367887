#include "flagtri/search.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "flagtri/errors.hpp"

namespace flagtri {

std::string to_string(Objective o) {
  return o == Objective::MinVertices ? "vertices" : "gamma2";
}

int default_thread_count() {
  if (const char* env = std::getenv("FLAGTRI_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

std::uint64_t round_seed(std::uint64_t master, std::uint64_t round) {
  std::uint64_t z = master + round * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

FlagComplex blow_up(const FlagComplex& c, int target_f0, std::mt19937_64& rng,
                    MoveTrace* trace) {
  if (target_f0 < c.vertex_count())
    throw InvalidInput("blow-up target " + std::to_string(target_f0) +
                       " is below f0 = " + std::to_string(c.vertex_count()));
  FlagComplex cur = c;
  while (cur.vertex_count() < target_f0) {
    const auto edges = cur.edges();
    if (edges.empty()) throw InvalidInput("cannot subdivide a complex without edges");
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    const Edge e = edges[pick(rng)];
    const Vertex fresh = cur.vertex_count();
    cur = subdivide_edge(cur, e);
    if (trace) trace->moves.push_back({MoveKind::SubdivideEdge, e, fresh});
  }
  return cur;
}

FlagComplex contract_to_minimum(const FlagComplex& c, std::mt19937_64& rng,
                                MoveTrace* trace, long long max_moves) {
  FlagComplex cur = c;
  long long moves = 0;
  while (true) {
    const auto edges = admissible_edges(cur);
    if (edges.empty()) return cur;
    if (++moves > max_moves) throw RoundAborted(max_moves);
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    const Edge e = edges[pick(rng)];
    cur = contract_edge(cur, e);
    if (trace) trace->moves.push_back({MoveKind::ContractEdge, e, std::nullopt});
  }
}

LocalMinimumCertificate local_minimum_certificate(const FlagComplex& c) {
  LocalMinimumCertificate cert;
  cert.admissible = admissible_edges(c);
  cert.minimum = cert.admissible.empty();
  return cert;
}

bool MinimaArchive::insert(ArchiveEntry entry) {
  const auto key = entry.form.digest;
  if (auto it = entries_.find(key); it != entries_.end()) {
    if (entry.round < it->second.round) it->second = std::move(entry);
    return true;
  }
  auto& tier = tiers_[entry.objective_value];
  const auto pos = std::lower_bound(tier.begin(), tier.end(), key);
  if (tier.size() >= max_per_tier_ && pos == tier.end()) return false;
  tier.insert(pos, key);
  entries_.emplace(key, std::move(entry));
  if (tier.size() > max_per_tier_) {
    entries_.erase(tier.back());
    tier.pop_back();
  }
  return entries_.count(key) > 0;
}

std::vector<const ArchiveEntry*> MinimaArchive::entries() const {
  std::vector<const ArchiveEntry*> out;
  for (const auto& [value, keys] : tiers_)
    for (const auto& k : keys) out.push_back(&entries_.at(k));
  return out;
}

std::optional<long long> MinimaArchive::best() const {
  for (const auto& [value, keys] : tiers_)
    if (!keys.empty()) return value;
  return std::nullopt;
}

std::size_t MinimaArchive::count_at(long long objective_value) const {
  auto it = tiers_.find(objective_value);
  return it == tiers_.end() ? 0 : it->second.size();
}

const ArchiveEntry* MinimaArchive::find(const CanonicalForm& form) const {
  auto it = entries_.find(form.digest);
  return it == entries_.end() ? nullptr : &it->second;
}

ArchiveEntry describe(const FlagComplex& c, Objective objective) {
  ArchiveEntry e;
  e.complex = c;
  e.form = canonical_form(c);
  e.f = f_vector(c);
  e.betti_q = betti(c, Field::Rational);
  e.betti_gf2 = betti(c, Field::GF2);
  e.gamma = gamma_numbers(e.f, e.f.dim() + 1);
  if (e.f.dim() == 3) e.conjecture = conjecture_check(c);
  e.objective_value =
      objective == Objective::MinVertices ? e.f.f(0) : e.gamma.gamma2;
  return e;
}

namespace {

void check_seed(const FlagComplex& seed, const SearchConfig& config) {
  if (config.rounds < 1) throw InvalidInput("rounds must be at least 1");
  if (config.blowup_target < seed.vertex_count())
    throw InvalidInput("blow-up target is below the seed's vertex count");
  const auto s = seed.to_simplicial();
  if (!s.is_pure()) throw NotPure("seed is not pure");
  if (config.objective == Objective::MinGamma2) {
    if (s.dim() == 3) {
      const auto check = check_closed_3_manifold(s);
      if (!check) throw NotManifold("seed: " + check.reason);
    } else if (s.dim() != 4) {
      throw DimensionMismatch("the gamma2 objective needs a 3- or 4-dimensional seed");
    }
  }
}

}  // namespace

MinimaArchive run_search(const FlagComplex& seed, const SearchConfig& config) {
  check_seed(seed, config);
  MinimaArchive archive(config.max_per_tier);
  const std::string seed_id = canonical_form(seed).short_id();
  const int threads = std::max(
      1, std::min(config.threads > 0 ? config.threads : default_thread_count(),
                  config.rounds));

  std::mutex lock;
  std::atomic<int> next{0};
  auto worker = [&] {
    while (true) {
      const int round = next.fetch_add(1);
      if (round >= config.rounds) return;
      MoveTrace trace;
      trace.seed_complex_id = seed_id;
      trace.rng_seed = round_seed(config.rng_seed, static_cast<std::uint64_t>(round));
      std::mt19937_64 rng(trace.rng_seed);
      std::optional<ArchiveEntry> entry;
      int big = 0;
      try {
        const FlagComplex blown = blow_up(seed, config.blowup_target, rng, &trace);
        big = blown.vertex_count();
        const FlagComplex min =
            contract_to_minimum(blown, rng, &trace, config.max_moves_per_round);
        entry = describe(min, config.objective);
        entry->round = round;
        entry->trace = std::move(trace);
      } catch (const RoundAborted&) {
      }
      std::lock_guard<std::mutex> guard(lock);
      ++archive.rounds_run;
      if (!entry) {
        archive.aborted_rounds.push_back(round);
        if (config.progress)
          *config.progress << "round " << round << ": aborted after "
                           << config.max_moves_per_round << " moves\n";
        continue;
      }
      if (entry->conjecture && !entry->conjecture->satisfied) {
        archive.conjecture_violations.push_back(round);
        if (config.progress)
          *config.progress << "RESEARCH FINDING: round " << round
                           << " minimum has gamma2 = " << entry->conjecture->gamma2
                           << " < 16 * beta1 = " << 16 * entry->conjecture->beta1
                           << " (" << entry->form.short_id() << ")\n";
      }
      const long long f0 = entry->f.f(0);
      const long long g2 = entry->gamma.gamma2;
      archive.insert(std::move(*entry));
      if (config.progress)
        *config.progress << "round " << round << ": blow-up f0=" << big
                         << " minimum f0=" << f0 << " gamma2=" << g2
                         << " archive=" << archive.size() << "\n";
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(archive.aborted_rounds.begin(), archive.aborted_rounds.end());
  std::sort(archive.conjecture_violations.begin(), archive.conjecture_violations.end());
  return archive;
}

}  // namespace flagtri
