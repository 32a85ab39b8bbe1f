#include "pptdata/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "pptdata/corpus_io.hpp"

namespace pptdata {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("pptdata_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream out(dir_ / name);
    out << text;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(CliTest, CheckShuffleAcceptsCrossingBrackets) {
  const auto r = run({"check", "--family", "shuffle"}, "( [ { ] ) }\n");
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "accept\n");
  EXPECT_EQ(run({"check", "--family", "nested"}, "( [ { ] ) }\n").out, "reject\n");
}

TEST_F(CliTest, CheckAllPrintsVerdictJson) {
  const auto r = run({"check", "-k", "1"}, "0 1 0 1\n");
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("kdyck_stack"), true);
  EXPECT_EQ(j.at("kdyck_fom"), true);
  EXPECT_EQ(j.at("shuffle"), true);
  EXPECT_EQ(j.at("ww"), true);
  EXPECT_EQ(j.at("dyck1_counting"), true);
  EXPECT_EQ(j.at("disagreement"), false);
}

TEST_F(CliTest, CheckErrors) {
  EXPECT_EQ(run({"check", "--family", "shuffle"}, "0 1\n").code, cli::kInvalid);
  EXPECT_EQ(run({"check", "--family", "shuffle"}, "( x )\n").code, cli::kFormat);
  EXPECT_EQ(run({"check", "--family", "bogus", "-k", "1"}, "0 1\n").code, cli::kInvalid);
  EXPECT_EQ(run({"check", "--input", path("missing.txt")}).code, cli::kIo);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--tokens", "many"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, GenIsByteIdenticalAcrossRunsAndThreads) {
  const std::vector<std::string> base = {"gen", "--family", "shuffle", "-k", "8", "--tokens", "20000",
                                         "--seed", "3", "--window", "512"};
  auto a = base;
  a.insert(a.end(), {"-o", path("a"), "--threads", "1"});
  auto b = base;
  b.insert(b.end(), {"-o", path("b"), "--threads", "4"});
  const auto ra = run(a);
  ASSERT_EQ(ra.code, cli::kOk) << ra.err;
  ASSERT_EQ(run(b).code, cli::kOk);
  const std::string stem = "/dyck-shuffle-k8-seed3";
  EXPECT_EQ(slurp(path("a") + stem + ".pptc"), slurp(path("b") + stem + ".pptc"));
  EXPECT_EQ(slurp(path("a") + stem + ".manifest.json"), slurp(path("b") + stem + ".manifest.json"));
  EXPECT_NE(ra.out.find("tokens_per_step=65536"), std::string::npos);

  const auto c = read_corpus(path("a") + stem + ".pptc");
  EXPECT_EQ(c.manifest.family, "dyck-shuffle");
  EXPECT_EQ(c.manifest.vocab_size, 16u);
}

TEST_F(CliTest, GenThenCheckCorpus) {
  ASSERT_EQ(run({"gen", "--family", "ww", "-k", "16", "--tokens", "4096", "--max-length", "64", "--window", "64",
                 "-o", dir_.string(), "--name", "copy"})
                .code,
            cli::kOk);
  const auto r = run({"check", "--family", "ww", "--corpus", path("copy.pptc")});
  ASSERT_EQ(r.code, cli::kOk);
  std::istringstream lines(r.out);
  std::string line, last;
  std::size_t rejects = 0, n = 0;
  while (std::getline(lines, line)) {
    ++n;
    rejects += line == "reject";
    last = line;
  }
  EXPECT_GT(n, 10u);
  // Only a document cut by the dropped tail can fail.
  EXPECT_LE(rejects, 1u);
  if (rejects) {
    EXPECT_EQ(last, "reject");
  }
}

TEST_F(CliTest, GenFromConfigWithMetamer) {
  write("run.ini",
        "seed = 4\nwindow_length = 256\n[src]\nfamily = shuffle\nk = 4\nmax_length = 256\ntokens = 8192\n"
        "[meta]\nmetamer_of = src\norder = 2\ntokens = 4096\n");
  const auto r = run({"gen", "--config", path("run.ini"), "-o", dir_.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto meta = read_corpus(path("meta.pptc"));
  EXPECT_EQ(meta.manifest.family, "metamer(2, dyck-shuffle)");
  EXPECT_EQ(meta.manifest.total_tokens, 4096u);
  EXPECT_EQ(run({"gen", "--config", path("nope.ini")}).code, cli::kIo);
  write("bad.ini", "[x]\nfamily = shuffle\n");
  EXPECT_EQ(run({"gen", "--config", path("bad.ini")}).code, cli::kConfig);
}

TEST_F(CliTest, StatsAndReport) {
  ASSERT_EQ(run({"pack", "--vocab", "2", "--window", "4", "--family", "dyck-nested", "-o", path("t.pptc")},
                "0 0 1 1\n")
                .code,
            cli::kOk);
  const auto s = run({"stats", "--corpus", path("t.pptc")});
  ASSERT_EQ(s.code, cli::kOk) << s.err;
  EXPECT_EQ(nlohmann::json::parse(s.out).at("histogram"), nlohmann::json({1, 2, 1}));
  const auto r = run({"report", "--corpus", path("t.pptc"), "--manifest-out", path("m.json")});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("total_tokens"), 4);
  EXPECT_TRUE(fs::exists(path("m.json")));

  std::string bytes = slurp(path("t.pptc"));
  bytes[bytes.size() / 2] ^= 1;
  std::ofstream(path("t.pptc"), std::ios::binary) << bytes;
  EXPECT_EQ(run({"report", "--corpus", path("t.pptc")}).code, cli::kFormat);
}

TEST_F(CliTest, MetamerFitAndSample) {
  ASSERT_EQ(run({"pack", "--vocab", "2", "--window", "2", "-o", path("alt.pptc")}, "0 1 0 1 0 1\n").code, cli::kOk);
  ASSERT_EQ(run({"metamer", "fit", "--corpus", path("alt.pptc"), "--order", "2", "-o", path("m.ngram")}).code,
            cli::kOk);
  const auto r = run({"metamer", "sample", "--model", path("m.ngram"), "--tokens", "64", "--doc-length", "64",
                      "--window", "8", "--source-family", "alt", "-o", path("meta.pptc")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto c = read_corpus(path("meta.pptc"));
  EXPECT_EQ(c.manifest.family, "metamer(2, alt)");
  for (std::size_t i = 0; i < c.tokens.size(); ++i) EXPECT_EQ(c.tokens[i], i % 2);
}

TEST_F(CliTest, MrsWorkedExample) {
  write("baseline.csv", "# tokens_per_step=65536\nstep,loss\n0,5.0\n10000,2.0\n");
  write("run.csv", "# tokens_per_step=65536\n# ppt_steps=500\nstep,loss\n0,4.0\n6000,2.0\n10000,1.5\n");
  const auto r = run({"mrs", "--baseline", path("baseline.csv"), "--run", path("run.csv"), "--plot-data",
                      path("plot.csv")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("MRS=8.0\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("efficiency=35%\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("loss,baseline_step,run_step\n5.0,0.0,0.0\n2.0,10000.0,6000.0\n"),
            std::string::npos)
      << r.out;
  EXPECT_EQ(slurp(path("plot.csv")).rfind("curve,step,loss\nbaseline,0,5.0\n", 0), 0u);

  write("flat.csv", "# ppt_steps=500\nstep,loss\n0,4.0\n10000,3.0\n");
  EXPECT_EQ(run({"mrs", "--baseline", path("baseline.csv"), "--run", path("flat.csv")}).code, cli::kNotReached);
}

TEST_F(CliTest, EvalGenJsonl) {
  const auto r = run({"eval-gen", "--count", "3", "--list-len", "4", "--seed", "1"});
  ASSERT_EQ(r.code, cli::kOk);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    const std::string text = j.at("text");
    const std::size_t a = j.at("span_start"), b = j.at("span_end");
    EXPECT_EQ(text.substr(b), ".");
    EXPECT_NE(text.find(text.substr(a, b - a)), a);
    ++n;
  }
  EXPECT_EQ(n, 3u);
  EXPECT_EQ(r.out, run({"eval-gen", "--count", "3", "--list-len", "4", "--seed", "1"}).out);
}

}  // namespace
}  // namespace pptdata
