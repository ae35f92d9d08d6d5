#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cateval/data_model.hpp"
#include "cli.hpp"
#include "support/fixtures.hpp"

namespace cateval {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cateval");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("cateval_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const auto path = (dir_ / name).string();
    std::ofstream(path, std::ios::binary) << content;
    return path;
  }

  std::string test_set_file() {
    return write("test.csv", serialize_dataset(testing::one_test_per_tester(testing::test_set_counts())));
  }

  static std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  static std::size_t lines(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, EvalTestSet) {
  const auto r = run({"eval", test_set_file(), "--alpha", "0.7", "--beta", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("cat_spe,0.827163\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("sensitivity,0.517857\n"), std::string::npos);
  EXPECT_NE(r.out.find("G14,negative,0,21,21,9,0.428571\n"), std::string::npos);
}

TEST_F(CliTest, EvalJson) {
  const auto r = run({"eval", test_set_file(), "--format", "json", "--sig", "G13,G15"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"cat_spe\":"), std::string::npos);
  EXPECT_NE(r.out.find("\"sig\": [\n    \"G13\",\n    \"G15\"\n  ]"), std::string::npos) << r.out;
}

TEST_F(CliTest, EvalFlagAndDataErrors) {
  const auto file = test_set_file();
  EXPECT_EQ(run({"eval", file, "--alpha", "1.5"}).code, 2);
  EXPECT_EQ(run({"eval", file, "--beta", "0"}).code, 2);
  EXPECT_EQ(run({"eval", file, "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"eval"}).code, 2);
  EXPECT_EQ(run({}).code, 2);

  const auto empty = run({"eval", write("empty.csv", "")});
  EXPECT_EQ(empty.code, 1);
  EXPECT_NE(empty.err.find("EmptyInput"), std::string::npos);

  const auto conflict = run({"eval", write("bad.csv", std::string(kDatasetHeader) +
                                                          "\na,T1,C,1,1,0.5\nb,T1,C,0,0,0.5\n")});
  EXPECT_EQ(conflict.code, 1);
  EXPECT_NE(conflict.err.find("ConflictingLabel: row 2"), std::string::npos) << conflict.err;

  EXPECT_EQ(run({"eval", (dir_ / "missing.csv").string()}).code, 1);
}

TEST_F(CliTest, SweepAlpha) {
  const auto r = run({"sweep", test_set_file(), "--param", "alpha", "--grid", "0:1:11", "--sig", "G14"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), 12u);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "param,value,fixed,accuracy,sensitivity,specificity,auc,cat_sen,cat_spe,cat_mean");
  std::set<std::string> sens;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    sens.insert(cells.at(4));
  }
  EXPECT_EQ(sens.size(), 1u);
}

TEST_F(CliTest, SweepBetaSinglePointMatchesEval) {
  const auto file = test_set_file();
  const auto s = run({"sweep", file, "--param", "beta", "--grid", "1:1:1"});
  const auto e = run({"eval", file, "--beta", "1"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(lines(s.out), 2u);
  const auto mean_line = e.out.substr(e.out.find("cat_mean,") + 9);
  const auto cat_mean = mean_line.substr(0, mean_line.find('\n'));
  EXPECT_TRUE(s.out.ends_with("," + cat_mean + "\n")) << s.out << " vs " << cat_mean;
}

TEST_F(CliTest, SweepBadGrid) {
  const auto file = test_set_file();
  EXPECT_EQ(run({"sweep", file, "--param", "alpha", "--grid", "1:0:5"}).code, 2);
  EXPECT_EQ(run({"sweep", file, "--param", "alpha", "--grid", "0:2:5"}).code, 2);
  EXPECT_EQ(run({"sweep", file, "--param", "beta", "--grid", "0:2:5"}).code, 2);
  EXPECT_EQ(run({"sweep", file, "--param", "beta", "--grid", "1:2"}).code, 2);
  EXPECT_EQ(run({"sweep", file, "--param", "gamma", "--grid", "0:1:2"}).code, 2);
}

TEST_F(CliTest, Curves) {
  const auto v = run({"curves", "--which", "variance", "--rhos", "0,0.3,0.7", "--nmax", "20"});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(lines(v.out), 61u);
  EXPECT_NE(v.out.find("rho=0.300,5.000000,0.440000\n"), std::string::npos);

  const auto e = run({"curves", "--which", "entropy", "--points", "1000"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(lines(e.out), 1001u);
  EXPECT_NE(e.out.find("entropy,0.368000,0.367879\n"), std::string::npos);

  EXPECT_EQ(run({"curves", "--which", "entropy", "--points", "1"}).code, 2);
  EXPECT_EQ(run({"curves", "--which", "variance", "--rhos", "2"}).code, 2);
  EXPECT_EQ(run({"curves", "--which", "variance", "--nmax", "0"}).code, 2);
  EXPECT_EQ(run({"curves", "--which", "other"}).code, 2);
}

TEST_F(CliTest, SynthPresets) {
  const auto a1 = (dir_ / "a1.csv").string();
  const auto a2 = (dir_ / "a2.csv").string();
  ASSERT_EQ(run({"synth", "--preset", "A", "--seed", "42", "--out", a1}).code, 0);
  const auto r = run({"synth", "--preset", "A", "--seed", "42", "--out", a2});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(slurp(a1), slurp(a2));
  EXPECT_NE(r.out.find("positive_fraction,"), std::string::npos);
  EXPECT_NE(r.out.find("correctness_rate,"), std::string::npos);
  EXPECT_EQ(parse_dataset(slurp(a1)).size(), 100u);

  const auto b = run({"synth", "--preset", "B"});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(lines(b.out), 51u);
  EXPECT_NE(b.err.find("records,50"), std::string::npos);
}

TEST_F(CliTest, SynthExplicitAndErrors) {
  const auto r = run({"synth", "--n-items", "40", "--n-testers", "12", "--n-cohorts", "3",
                      "--pos-ratio", "0.25", "--precision", "0.7:0.8", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto d = parse_dataset(r.out);
  EXPECT_EQ(d.size(), 40u);
  EXPECT_EQ(d.tester_count(), 12u);
  EXPECT_EQ(d.cohort_count(), 3u);

  EXPECT_EQ(run({"synth", "--n-testers", "200", "--n-items", "100"}).code, 2);
  EXPECT_EQ(run({"synth", "--precision", "0.9:0.8"}).code, 2);
  EXPECT_EQ(run({"synth", "--precision", "0.9"}).code, 2);
  EXPECT_EQ(run({"synth", "--pos-ratio", "0"}).code, 2);
  EXPECT_EQ(run({"synth", "--preset", "Z"}).code, 2);
}

TEST_F(CliTest, Compare) {
  const auto test = test_set_file();
  const auto val = write("val.csv", serialize_dataset(testing::one_test_per_tester(
                                        testing::validation_counts_column_corrected())));
  const auto r = run({"compare", "validation=" + val, "test=" + test, "--sig", "G4,G8,G11", "--verbose"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("validation,0.857143,0.841121,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("test,0.517857,0.903030,"), std::string::npos);
  EXPECT_NE(r.out.find("validation Overall,validation,432/504 (0.857),180/214 (0.841)\n"), std::string::npos);
  EXPECT_NE(r.out.find("G4,validation,1/3 (0.333),70/97 (0.722)\n"), std::string::npos);
  EXPECT_NE(r.out.find("CATSensitivity,validation,0.686,-\n"), std::string::npos);
  EXPECT_NE(r.out.find("CATSpecificity,validation,-,0.847\n"), std::string::npos);

  const auto single = run({"compare", "only=" + test});
  ASSERT_EQ(single.code, 0);
  EXPECT_EQ(lines(single.out), 2u);

  EXPECT_EQ(run({"compare", "x=" + test, "x=" + val}).code, 2);
  EXPECT_EQ(run({"compare", test}).code, 2);
  EXPECT_EQ(run({"compare", "x=" + (dir_ / "nope.csv").string()}).code, 1);
}

TEST_F(CliTest, InputsAreNotModified) {
  const auto file = test_set_file();
  const auto before = slurp(file);
  run({"eval", file});
  run({"sweep", file, "--param", "beta", "--grid", "0.5:2:4"});
  run({"compare", "t=" + file});
  EXPECT_EQ(slurp(file), before);
}

TEST_F(CliTest, Help) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"eval", "--help"}).code, 0);
}

}  // namespace
}  // namespace cateval
