#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "flagtri/cli.hpp"
#include "flagtri/constructors.hpp"
#include "flagtri/errors.hpp"
#include "flagtri/facet_io.hpp"
#include "flagtri/iso.hpp"

using namespace flagtri;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "flagtri");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("flagtri_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& contents) const {
    std::ofstream(path(name)) << contents;
    return path(name);
  }
  fs::path dir_;
};

std::string fixture_path(const std::string& name) {
  return std::string(FLAGTRI_FIXTURE_DIR) + "/" + name + ".txt";
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_F(CliTest, VerifyRp2Summary) {
  const auto r = run({"verify", fixture_path("rp2_11_left")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "summary: flag surface, RP^2, f=(1,11,30,20), local minimum: yes")) << r.out;
}

TEST_F(CliTest, VerifyTorusSummary) {
  const auto r = run({"verify", fixture_path("torus_12"), "--require", "orientable"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "summary: flag surface, T^2, f=(1,12,36,24)")) << r.out;
  EXPECT_TRUE(contains(r.out, "check orientable: PASS")) << r.out;
}

TEST_F(CliTest, VerifyFailedRequirementIsDomainError) {
  const auto r = run({"verify", fixture_path("torus_12"), "--require", "non-orientable"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(contains(r.out, "check non-orientable: FAIL")) << r.out;
}

TEST_F(CliTest, VerifyNonFlagReportsWitness) {
  const auto p = write("tri.txt", "1 2\n2 3\n1 3\n");
  const auto r = run({"verify", p});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "flag: no (missing face {1,2,3})")) << r.out;
  EXPECT_EQ(run({"verify", p, "--require", "flag"}).code, 3);
}

TEST_F(CliTest, VerifyJsonExpectations) {
  const auto good = write("good.json", R"({"name": "t", "facets": )" +
                                           std::string("[[1,2,3],[1,2,4],[1,3,4],[2,3,4]]") +
                                           R"(, "expected": {"f_vector": [1,4,6,4], "flag": false}})");
  auto r = run({"verify", good});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "check expected f_vector: PASS")) << r.out;
  const auto bad = write("bad.json", R"({"facets": [[1,2,3],[1,2,4],[1,3,4],[2,3,4]], "expected": {"betti_q": [1,0,0]}})");
  r = run({"verify", bad});
  EXPECT_EQ(r.code, 3) << r.out;
}

TEST_F(CliTest, DuplicateVertexIsParseError) {
  const auto p = write("dup.txt", "1 2 3\n1 2 2\n");
  const auto r = run({"verify", p});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "line 2")) << r.err;
  EXPECT_TRUE(contains(r.err, "duplicate vertex")) << r.err;
}

TEST_F(CliTest, MalformedFiles) {
  EXPECT_EQ(run({"verify", write("x.json", "{\"facets\": [[1,2],")}).code, 2);
  EXPECT_EQ(run({"verify", write("y.txt", "1 a 3\n")}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"verify", fixture_path("nope")}).code, 1);
  EXPECT_EQ(run({"search", fixture_path("torus_12"), "--rounds", "0"}).code, 1);
  EXPECT_EQ(run({"construct", "teapot"}).code, 1);
}

TEST_F(CliTest, ConstructGammaTight) {
  const auto out = path("g2.txt");
  const auto r = run({"construct", "gamma-tight", "--b", "2", "--out", out});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "gamma2=32 beta1=2")) << r.out;
  const auto c = FlagComplex::from_simplicial(to_complex(read_facet_file(out)));
  EXPECT_EQ(canonical_form(c).digest, canonical_form(gamma_tight(2)).digest);
}

TEST_F(CliTest, ConstructSurfaceAndStaircase) {
  auto r = run({"construct", "surface", "--k", "3", "--orientable"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "f-vector: (1,20,")) << r.out;
  EXPECT_TRUE(contains(r.out, "classification: #3 T^2")) << r.out;
  r = run({"construct", "staircase", "--a", "oct3", "--b", "cycle4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "f-vector: (1,24,120,192,96)")) << r.out;
  EXPECT_TRUE(contains(r.out, "betti Q: (1,1,1,1)")) << r.out;
}

TEST_F(CliTest, ConstructorErrorsAreDomainErrors) {
  EXPECT_EQ(run({"construct", "cycle", "--n", "3"}).code, 3);
  EXPECT_EQ(run({"construct", "fixture", "--name", "nope"}).code, 3);
}

TEST_F(CliTest, WriteReadRoundTripKeepsCanonicalForm) {
  for (const auto& fmt : {"plain", "json"}) {
    const auto out = path(std::string("k.") + (std::string(fmt) == "json" ? "json" : "txt"));
    ASSERT_EQ(run({"construct", "fixture", "--name", "grid_klein_16", "--out", out, "--format", fmt}).code, 0);
    const auto c = FlagComplex::from_simplicial(to_complex(read_facet_file(out)));
    EXPECT_EQ(canonical_form(c).digest, canonical_form(fixture("grid_klein_16")).digest);
  }
}

TEST_F(CliTest, SearchTorusWritesArchive) {
  const auto arch = path("arch");
  const auto r = run({"search", fixture_path("grid_torus_16"), "--rounds", "40", "--blowup", "18",
                      "--seed", "2", "--archive-dir", arch, "--quiet"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "best: ")) << r.out;
  std::size_t txt = 0, json = 0;
  for (const auto& e : fs::directory_iterator(arch)) {
    txt += e.path().extension() == ".txt";
    json += e.path().extension() == ".json";
  }
  EXPECT_GT(txt, 0u);
  EXPECT_EQ(txt, json);
}

TEST_F(CliTest, SearchNonFlagSeedIsDomainError) {
  const auto p = write("tri.txt", "1 2\n2 3\n1 3\n");
  EXPECT_EQ(run({"search", p, "--rounds", "2"}).code, 3);
}

TEST_F(CliTest, ReportTextAndCsvAgree) {
  const auto arch = path("arch");
  for (int b = 1; b <= 2; ++b)
    ASSERT_EQ(run({"construct", "gamma-tight", "--b", std::to_string(b), "--archive-dir", arch,
                   "--label", "S2xS1#" + std::to_string(b)})
                  .code,
              0);
  ASSERT_EQ(run({"construct", "octahedral", "--d", "4", "--archive-dir", arch, "--label", "S3"}).code, 0);
  const auto csv = run({"report", arch, "--format", "csv"});
  EXPECT_EQ(csv.code, 0) << csv.err;
  EXPECT_TRUE(contains(csv.out, "label,dim,beta1,min_gamma2,min_f0,entries\n")) << csv.out;
  EXPECT_TRUE(contains(csv.out, "S2xS1#1,3,1,16,32,1\n")) << csv.out;
  EXPECT_TRUE(contains(csv.out, "S2xS1#2,3,2,32,")) << csv.out;
  EXPECT_TRUE(contains(csv.out, "S3,3,0,0,8,1\n")) << csv.out;
  const auto text = run({"report", arch});
  EXPECT_EQ(text.code, 0);
  std::istringstream rows(csv.out);
  std::string line;
  std::getline(rows, line);
  while (std::getline(rows, line)) {
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) EXPECT_TRUE(contains(text.out, field)) << field;
  }
}

TEST_F(CliTest, ReportEmptyDir) {
  EXPECT_EQ(run({"report", dir_.string()}).code, 1);
  EXPECT_EQ(run({"report", path("missing")}).code, 1);
}

TEST_F(CliTest, ArchiveSidecarFields) {
  const auto e = describe(gamma_tight(1), Objective::MinGamma2);
  const auto base = write_archive_entry(path("a"), e, "S2xS1", "gamma2");
  std::ifstream in(base + ".json");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto s = ss.str();
  for (const char* key : {"\"digest\"", "\"short_id\"", "\"f_vector\"", "\"betti_q\"", "\"gamma2\"",
                          "\"trace\"", "\"rng_seed\"", "\"conjecture\""})
    EXPECT_TRUE(contains(s, key)) << key;
  EXPECT_EQ(fs::path(base).filename().string(), e.form.short_id());
  const auto c = FlagComplex::from_simplicial(to_complex(read_facet_file(base + ".txt")));
  EXPECT_EQ(canonical_form(c).digest, e.form.digest);
}
