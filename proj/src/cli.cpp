#include "flagtri/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "flagtri/constructors.hpp"
#include "flagtri/errors.hpp"
#include "flagtri/facet_io.hpp"

namespace flagtri {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_labels(const Simplex& s, const std::vector<Label>& labels) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << labels[s[i]];
  out << '}';
  return out.str();
}

std::string format_gamma(const GammaNumbers& g) {
  std::ostringstream out;
  out << "gamma1=" << g.gamma1 << " gamma2=" << g.gamma2 << " g2=" << g.g2
      << " g2_bar=" << g.g2_bar;
  return out.str();
}

SimplicialComplex boundary_of_simplex(int n) {
  std::vector<Simplex> facets;
  for (Vertex skip = 0; skip <= n; ++skip) {
    Simplex f;
    for (Vertex v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_dense(n + 1, std::move(facets));
}

std::optional<int> suffix_number(const std::string& s, const std::string& prefix) {
  if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  const std::string rest = s.substr(prefix.size());
  if (rest.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  return std::stoi(rest);
}

/// Named complexes (oct3, cycle5, edge, simplex-boundary2, fixtures) or a
/// facet file path.
SimplicialComplex resolve(const std::string& source) {
  if (source == "edge") return SimplicialComplex::from_dense(2, {{0, 1}});
  if (auto d = suffix_number(source, "oct")) return octahedral_sphere(*d).complex.to_simplicial();
  if (auto n = suffix_number(source, "cycle")) return cycle(*n).to_simplicial();
  if (auto n = suffix_number(source, "simplex-boundary")) {
    if (*n < 1) throw InvalidInput("simplex-boundary needs n >= 1");
    return boundary_of_simplex(*n);
  }
  for (const auto& name : fixture_names())
    if (source == name) return fixture(name).to_simplicial();
  return to_complex(read_facet_file(source));
}

FlagComplex resolve_flag(const std::string& source) {
  return FlagComplex::from_simplicial(resolve(source));
}

Edge parse_edge(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  long long a = 0, b = 0;
  if (!(in >> a >> b) || a < 1 || b < 1 || a == b)
    throw InvalidInput("edge '" + text + "' is not two distinct 1-based labels");
  return Edge(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
}

json sidecar(const ArchiveEntry& e, const std::string& label,
             const std::string& objective) {
  json j;
  j["label"] = label;
  j["digest"] = e.form.hex();
  j["short_id"] = e.form.short_id();
  j["dim"] = e.f.dim();
  j["f_vector"] = e.f.counts;
  j["betti_q"] = e.betti_q.ranks;
  j["betti_gf2"] = e.betti_gf2.ranks;
  j["gamma"] = {{"d", e.f.dim() + 1},
                {"gamma1", e.gamma.gamma1},
                {"gamma2", e.gamma.gamma2},
                {"g2", e.gamma.g2},
                {"g2_bar", e.gamma.g2_bar}};
  j["objective"] = objective;
  j["objective_value"] = e.objective_value;
  j["round"] = e.round;
  j["rng_seed"] = e.trace.rng_seed;
  j["seed_complex_id"] = e.trace.seed_complex_id;
  auto moves = json::array();
  for (const Move& m : e.trace.moves) {
    json mv;
    mv["kind"] = m.kind == MoveKind::SubdivideEdge ? "subdivide" : "contract";
    mv["edge"] = {m.edge.u, m.edge.v};
    if (m.new_vertex) mv["new_vertex"] = *m.new_vertex;
    moves.push_back(mv);
  }
  j["trace"] = moves;
  if (e.conjecture)
    j["conjecture"] = {{"gamma2", e.conjecture->gamma2},
                       {"beta1", e.conjecture->beta1},
                       {"satisfied", e.conjecture->satisfied}};
  else
    j["conjecture"] = nullptr;
  return j;
}

std::string default_label(const std::string& path, const FacetFile& file) {
  if (!file.name.empty()) return file.name;
  return fs::path(path).stem().string();
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string path;
  std::vector<std::string> require;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const FacetFile file = read_facet_file(opt.path);
  const SimplicialComplex s = to_complex(file);
  const auto& labels = s.labels();
  const FVector f = f_vector(s);
  const int dim = s.dim();

  const FlagCheck flag = is_flag(s);
  std::optional<FlagComplex> fc;
  if (flag) fc = FlagComplex::from_simplicial(s);

  const bool pure = s.is_pure();
  std::optional<bool> manifold;  // unset: not checked (dimension > 3)
  std::string manifold_reason;
  if (!pure) {
    manifold = false;
    manifold_reason = "not pure";
  } else if (dim >= 1 && dim <= 3) {
    const auto check = check_closed_manifold(s);
    manifold = check.ok;
    manifold_reason = check.reason;
  }
  std::optional<bool> orient;
  if (manifold.value_or(false)) orient = orientable(s);
  std::optional<SurfaceType> type;
  if (dim == 2 && manifold.value_or(false)) type = classify_surface(s);
  const BettiVector bq = betti(s, Field::Rational);
  const BettiVector b2 = betti(s, Field::GF2);
  std::optional<GammaNumbers> gamma;
  if (pure) gamma = gamma_numbers(f, dim + 1);
  std::optional<LocalMinimumCertificate> cert;
  if (fc) cert = local_minimum_certificate(*fc);
  std::optional<ConjectureReport> conj;
  if (fc && dim == 3 && manifold.value_or(false)) conj = conjecture_check(*fc);

  std::string kind = "complex";
  if (manifold.value_or(false))
    kind = dim == 2 ? "surface" : dim == 3 ? "3-manifold" : dim == 1 ? "curve" : kind;
  std::string summary = std::string(flag ? "flag " : "non-flag ") + kind;
  if (type) summary += ", " + type->to_string();
  summary += ", f=" + f.to_string();
  if (cert) summary += ", local minimum: " + yes_no(cert->minimum);

  if (!file.name.empty()) out << "name: " << file.name << "\n";
  out << "summary: " << summary << "\n";
  out << "f-vector: " << f.to_string() << "\n";
  out << "flag: " << yes_no(flag.flag);
  if (!flag) out << " (missing face " << format_labels(*flag.witness, labels) << ")";
  out << "\n";
  out << "manifold: ";
  if (!manifold)
    out << "unchecked (dimension " << dim << ")";
  else if (*manifold)
    out << "closed " << kind;
  else
    out << "no (" << manifold_reason << ")";
  out << "\n";
  if (orient) out << "orientable: " << yes_no(*orient) << "\n";
  if (type) out << "classification: " << type->to_string() << "\n";
  out << "betti GF2: " << b2.to_string() << "\n";
  out << "betti Q: " << bq.to_string() << "\n";
  if (gamma) out << "gamma (d=" << dim + 1 << "): " << format_gamma(*gamma) << "\n";
  if (cert) {
    out << "local minimum: " << yes_no(cert->minimum);
    if (!cert->minimum) {
      out << " (" << cert->admissible.size() << " admissible edges, first "
          << format_labels(cert->admissible.front().simplex(), labels) << ")";
    }
    out << "\n";
  }
  if (conj)
    out << "conjecture gamma2 >= 16 beta1: " << yes_no(conj->satisfied) << " ("
        << conj->gamma2 << " >= " << 16 * conj->beta1 << ")\n";

  std::vector<std::pair<std::string, std::string>> failures;
  int checked = 0;
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    ++checked;
    out << "check " << name << ": " << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) out << " (" << detail << ")";
    out << "\n";
    if (!ok) failures.emplace_back(name, detail);
  };
  for (const auto& r : opt.require) {
    if (r == "flag") check(r, flag.flag, "");
    if (r == "manifold") check(r, manifold.value_or(false), manifold_reason);
    if (r == "orientable") check(r, orient.value_or(false), "");
    if (r == "non-orientable") check(r, orient.has_value() && !*orient, "");
    if (r == "local-minimum") check(r, cert.has_value() && cert->minimum, "");
    if (r == "conjecture") check(r, conj.has_value() && conj->satisfied, "");
  }
  const auto& x = file.expected;
  auto counts = [](const std::vector<long long>& v) { return format_counts(v); };
  if (x.f_vector)
    check("expected f_vector", *x.f_vector == f.counts,
          "expected " + counts(*x.f_vector) + ", got " + f.to_string());
  if (x.betti_q)
    check("expected betti_q", *x.betti_q == bq.ranks,
          "expected " + counts(*x.betti_q) + ", got " + bq.to_string());
  if (x.betti_gf2)
    check("expected betti_gf2", *x.betti_gf2 == b2.ranks,
          "expected " + counts(*x.betti_gf2) + ", got " + b2.to_string());
  if (x.flag) check("expected flag", *x.flag == flag.flag, "");
  if (x.manifold) check("expected manifold", *x.manifold == manifold.value_or(false), "");
  if (x.orientable)
    check("expected orientable", orient.has_value() && *x.orientable == *orient, "");
  if (x.classification)
    check("expected classification",
          type.has_value() && type->to_string() == *x.classification,
          "expected " + *x.classification +
              (type ? ", got " + type->to_string() : std::string(", not a surface")));
  if (x.local_minimum)
    check("expected local_minimum",
          cert.has_value() && cert->minimum == *x.local_minimum, "");
  if (x.gamma2)
    check("expected gamma2", gamma.has_value() && gamma->gamma2 == *x.gamma2,
          "expected " + std::to_string(*x.gamma2));
  if (checked) out << "checks: " << checked - failures.size() << "/" << checked << " passed\n";
  return failures.empty() ? kExitOk : kExitDomain;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructOptions {
  std::string kind;
  int d = 3;
  int n = 4;
  std::string name;
  std::string in;
  std::string a;
  std::string b;
  std::string ea;
  std::string eb;
  int k = 1;
  bool non_orientable = false;
  std::string out;
  std::string format = "plain";
  std::string archive_dir;
  std::string label;
};

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw InvalidInput(what + " must be an integer, got '" + s + "'");
  return v;
}

int cmd_construct(const ConstructOptions& opt, std::ostream& out) {
  std::optional<FlagComplex> result;
  std::optional<SimplicialComplex> general;
  const std::string& kind = opt.kind;
  if (kind == "octahedral") {
    result = octahedral_sphere(opt.d).complex;
  } else if (kind == "cycle") {
    result = cycle(opt.n);
  } else if (kind == "fixture") {
    result = fixture(opt.name);
  } else if (kind == "barycentric") {
    result = barycentric_subdivision(resolve(opt.in));
  } else if (kind == "staircase") {
    const auto a = resolve(opt.a);
    const auto b = resolve(opt.b);
    if (is_flag(a) && is_flag(b))
      result = staircase_product(FlagComplex::from_simplicial(a),
                                 FlagComplex::from_simplicial(b));
    else
      general = staircase_product(a, b);
  } else if (kind == "edge-sum") {
    const auto a = resolve_flag(opt.a);
    const auto b = resolve_flag(opt.b);
    auto pick = [](const FlagComplex& c, const std::string& e) {
      if (!e.empty()) return parse_edge(e);
      auto first = first_square_link_edge(c);
      if (!first) throw ConnectedSumInvalid("no edge with a 4-cycle link");
      return *first;
    };
    result = edge_star_connected_sum(a, pick(a, opt.ea), b, pick(b, opt.eb)).complex;
  } else if (kind == "handle") {
    const auto a = resolve_flag(opt.a);
    std::pair<Edge, Edge> edges;
    if (!opt.ea.empty() && !opt.eb.empty()) {
      edges = {parse_edge(opt.ea), parse_edge(opt.eb)};
    } else {
      auto far = far_edge_pair(a);
      if (!far) throw HandleInvalid("no pair of far edges with 4-cycle links");
      edges = *far;
    }
    result = edge_star_handle_addition(a, edges.first, edges.second).complex;
  } else if (kind == "surface") {
    result = surface_min(opt.k, !opt.non_orientable);
  } else if (kind == "delta4") {
    result = delta4().complex;
  } else if (kind == "delta16") {
    result = delta16().complex;
  } else if (kind == "gamma-tight") {
    result = gamma_tight(parse_int(opt.b.empty() ? "1" : opt.b, "--b"));
  } else {
    throw InvalidInput("unknown construction '" + kind + "'");
  }

  const SimplicialComplex s = result ? result->to_simplicial() : *general;
  const FVector f = f_vector(s);
  const auto bq = betti(s, Field::Rational);
  out << "construction: " << kind << "\n";
  out << "f-vector: " << f.to_string() << "\n";
  const auto flag = is_flag(s);
  out << "flag: " << yes_no(flag.flag) << "\n";
  out << "betti Q: " << bq.to_string() << "\n";
  if (s.is_pure()) {
    const auto g = gamma_numbers(f, s.dim() + 1);
    out << "gamma (d=" << s.dim() + 1 << "): " << format_gamma(g) << "\n";
    if (s.dim() == 3) out << "gamma2=" << g.gamma2 << " beta1=" << bq[1] << "\n";
  }
  if (s.dim() == 2 && s.is_pure() && check_closed_surface(s))
    out << "classification: " << classify_surface(s).to_string() << "\n";

  const std::string label =
      !opt.label.empty() ? opt.label : kind == "fixture" ? opt.name : kind;
  if (!opt.out.empty()) {
    write_file(opt.out, opt.format == "json" ? write_json(s, label) : write_plain(s, label));
    out << "wrote " << opt.out << "\n";
  }
  if (!opt.archive_dir.empty()) {
    if (!result) throw InvalidInput("only flag complexes can be archived");
    ArchiveEntry e = describe(*result, s.dim() == 3 ? Objective::MinGamma2
                                                    : Objective::MinVertices);
    out << "archived " << write_archive_entry(opt.archive_dir, e, label, "construct")
        << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// search

struct SearchOptions {
  std::string path;
  std::string objective = "vertices";
  int rounds = 100;
  int blowup = 0;
  std::uint64_t seed = 1;
  std::string archive_dir;
  int threads = 0;
  std::string label;
  long long max_moves = 10000;
  bool quiet = false;
};

int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err) {
  const FacetFile file = read_facet_file(opt.path);
  const FlagComplex seed = FlagComplex::from_simplicial(to_complex(file));
  SearchConfig config;
  config.rng_seed = opt.seed;
  config.rounds = opt.rounds;
  config.blowup_target = opt.blowup > 0 ? opt.blowup : seed.vertex_count() + 4;
  config.objective =
      opt.objective == "gamma2" ? Objective::MinGamma2 : Objective::MinVertices;
  config.max_moves_per_round = opt.max_moves;
  config.threads = opt.threads;
  if (!opt.quiet) config.progress = &err;
  const MinimaArchive archive = run_search(seed, config);
  const std::string label = opt.label.empty() ? default_label(opt.path, file) : opt.label;

  out << "seed: " << label << " f0=" << seed.vertex_count() << "\n";
  out << "objective: " << to_string(config.objective) << "\n";
  out << "rounds: " << archive.rounds_run << " (aborted: " << archive.aborted_rounds.size()
      << ")\n";
  if (const auto best = archive.best())
    out << "best: " << *best << " (" << archive.count_at(*best)
        << " non-isomorphic minima)\n";
  out << "archive entries: " << archive.size() << "\n";
  out << "value  f_vector  betti_q  gamma2  conjecture  id\n";
  for (const ArchiveEntry* e : archive.entries()) {
    out << e->objective_value << "  " << e->f.to_string() << "  " << e->betti_q.to_string()
        << "  " << e->gamma.gamma2 << "  "
        << (e->conjecture ? (e->conjecture->satisfied ? "ok" : "VIOLATED") : "-") << "  "
        << e->form.short_id().substr(0, 16) << "\n";
    if (!opt.archive_dir.empty())
      write_archive_entry(opt.archive_dir, *e, label, to_string(config.objective));
  }
  if (!archive.conjecture_violations.empty())
    out << "RESEARCH FINDING: " << archive.conjecture_violations.size()
        << " minima violate gamma2 >= 16 beta1\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// report

struct ReportRow {
  int dim = 0;
  long long beta1 = 0;
  long long min_gamma2 = 0;
  long long min_f0 = 0;
  int count = 0;
};

int cmd_report(const std::string& dir, const std::string& format, std::ostream& out,
               std::ostream& err) {
  if (!fs::is_directory(dir)) {
    err << "error: '" << dir << "' is not a directory\n";
    return kExitUsage;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::map<std::pair<std::string, long long>, ReportRow> rows;
  for (const auto& p : files) {
    std::ifstream in(p);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError(1, p.string() + ": " + e.what());
    }
    if (!j.contains("f_vector") || !j.contains("betti_q")) continue;
    const std::string label = j.value("label", std::string("?"));
    const auto f = j.at("f_vector").get<std::vector<long long>>();
    const auto b = j.at("betti_q").get<std::vector<long long>>();
    const long long beta1 = b.size() > 1 ? b[1] : 0;
    const long long g2 = j.at("gamma").at("gamma2").get<long long>();
    auto [it, fresh] = rows.try_emplace({label, beta1});
    ReportRow& r = it->second;
    if (fresh || g2 < r.min_gamma2) r.min_gamma2 = g2;
    if (fresh || f[1] < r.min_f0) r.min_f0 = f[1];
    r.dim = j.value("dim", 0);
    r.beta1 = beta1;
    ++r.count;
  }
  if (rows.empty()) {
    err << "error: no archive entries in '" << dir << "'\n";
    return kExitUsage;
  }
  if (format == "csv") {
    out << "label,dim,beta1,min_gamma2,min_f0,entries\n";
    for (const auto& [key, r] : rows)
      out << key.first << "," << r.dim << "," << r.beta1 << "," << r.min_gamma2 << ","
          << r.min_f0 << "," << r.count << "\n";
  } else {
    out << std::left << std::setw(24) << "label" << std::setw(5) << "dim" << std::setw(7)
        << "beta1" << std::setw(12) << "min_gamma2" << std::setw(8) << "min_f0"
        << "entries\n";
    for (const auto& [key, r] : rows)
      out << std::left << std::setw(24) << key.first << std::setw(5) << r.dim
          << std::setw(7) << r.beta1 << std::setw(12) << r.min_gamma2 << std::setw(8)
          << r.min_f0 << r.count << "\n";
  }
  return kExitOk;
}

}  // namespace

std::string write_archive_entry(const std::string& dir, const ArchiveEntry& entry,
                                const std::string& label, const std::string& objective) {
  fs::create_directories(dir);
  const std::string base = (fs::path(dir) / entry.form.short_id()).string();
  write_file(base + ".txt", write_plain(entry.complex.to_simplicial(), label));
  write_file(base + ".json", sidecar(entry, label, objective).dump(2) + "\n");
  return base;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flag triangulations of 2- and 3-manifolds"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Report invariants of a facet file");
  verify->add_option("path", vopt.path, "Facet file (.json or plain)")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--require", vopt.require, "Checks that must pass")
      ->check(CLI::IsMember(
          {"flag", "manifold", "orientable", "non-orientable", "local-minimum", "conjecture"}));

  ConstructOptions copt;
  auto* construct = app.add_subcommand("construct", "Build a complex");
  construct
      ->add_option("kind", copt.kind,
                   "octahedral, cycle, fixture, barycentric, staircase, edge-sum, "
                   "handle, surface, delta4, delta16, gamma-tight")
      ->required()
      ->check(CLI::IsMember({"octahedral", "cycle", "fixture", "barycentric", "staircase",
                             "edge-sum", "handle", "surface", "delta4", "delta16",
                             "gamma-tight"}));
  construct->add_option("--d", copt.d, "Octahedral sphere dimension parameter");
  construct->add_option("--n", copt.n, "Cycle length");
  construct->add_option("--name", copt.name, "Fixture name");
  construct->add_option("--in", copt.in, "Input complex (name or file)");
  construct->add_option("--a", copt.a, "First input (name or file)");
  construct->add_option("--b", copt.b, "Second input, or b for gamma-tight");
  construct->add_option("--ea", copt.ea, "Edge of the first input, e.g. 1,2");
  construct->add_option("--eb", copt.eb, "Edge of the second input");
  construct->add_option("--k", copt.k, "Number of summands for surface");
  auto* orient_flag = construct->add_flag("--orientable", "Orientable surface (default)");
  construct->add_flag("--non-orientable", copt.non_orientable, "Non-orientable surface")
      ->excludes(orient_flag);
  construct->add_option("--out", copt.out, "Output facet file");
  construct->add_option("--format", copt.format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));
  construct->add_option("--archive-dir", copt.archive_dir, "Also store as archive entry");
  construct->add_option("--label", copt.label, "Manifold label for files and reports");

  SearchOptions sopt;
  auto* search = app.add_subcommand("search", "Blow-up / contraction search");
  search->add_option("path", sopt.path, "Seed facet file")->required()->check(CLI::ExistingFile);
  search->add_option("--objective", sopt.objective, "vertices or gamma2")
      ->check(CLI::IsMember({"vertices", "gamma2"}));
  search->add_option("--rounds", sopt.rounds, "Number of rounds")->check(CLI::PositiveNumber);
  search->add_option("--blowup", sopt.blowup, "Vertex count after blow-up (default f0+4)")
      ->check(CLI::NonNegativeNumber);
  search->add_option("--seed", sopt.seed, "Master RNG seed");
  search->add_option("--archive-dir", sopt.archive_dir, "Directory for minima");
  search->add_option("--threads", sopt.threads, "Worker threads (default FLAGTRI_THREADS)")
      ->check(CLI::NonNegativeNumber);
  search->add_option("--label", sopt.label, "Manifold label (default: file name)");
  search->add_option("--max-moves", sopt.max_moves, "Move cap per round")
      ->check(CLI::PositiveNumber);
  search->add_flag("--quiet", sopt.quiet, "No progress lines");

  std::string report_dir;
  std::string report_format = "text";
  auto* report = app.add_subcommand("report", "Summarise an archive directory");
  report->add_option("dir", report_dir, "Archive directory")->required();
  report->add_option("--format", report_format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(vopt, out);
    if (*construct) return cmd_construct(copt, out);
    if (*search) return cmd_search(sopt, out, err);
    if (*report) return cmd_report(report_dir, report_format, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace flagtri
