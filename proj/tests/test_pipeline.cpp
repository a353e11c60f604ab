#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <map>

#include "srctopics/pipeline.hpp"
#include "test_support.hpp"

using namespace srctopics;
using testing_support::TempDir;
namespace fs = std::filesystem;

namespace {

const fs::path kRoot = SRCTOPICS_ROOT;
const fs::path kMini = kRoot / "data" / "minicorpus";
const fs::path kGolden = kRoot / "tests" / "golden";

struct Run {
  int code;
  std::string output;
};

Run cli(const std::string& args, const fs::path& scratch) {
  const fs::path log = scratch / "cli.log";
  std::string cmd = std::string("'") + SRCTOPICS_CLI + "' " + args + " > '" + log.string() + "' 2>&1";
  int status = std::system(cmd.c_str());
  Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, fs::exists(log) ? read_file(log) : ""};
  fs::remove(log);
  return r;
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files[e.path().filename().string()] = read_file(e.path());
  return files;
}

std::string shell_quote(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST(Cli, HelpListsEveryFlag) {
  TempDir tmp("help");
  auto r = cli("--help", tmp.path());
  EXPECT_EQ(r.code, 0);
  for (const char* flag : {"--input", "--output", "--config", "--profiles", "--hash-size", "--lsh-threshold",
                           "--pair-threshold", "--tf", "--stem-threshold", "--topics", "--iters-plain", "--iters-reg",
                           "--tau-phi", "--tau-theta", "--seed", "--workers", "--top-n", "--union-bins", "--lda",
                           "extract", "dedup", "train", "embed", "report", "pipeline"})
    EXPECT_NE(r.output.find(flag), std::string::npos) << flag;
}

TEST(Cli, UsageErrorsExitOne) {
  TempDir tmp("usage");
  EXPECT_EQ(cli("", tmp.path()).code, 1);
  EXPECT_EQ(cli("extract --no-such-flag", tmp.path()).code, 1);
  EXPECT_EQ(cli("extract", tmp.path()).code, 1);
  EXPECT_EQ(cli("pipeline -i " + shell_quote(kMini) + " -o " + shell_quote(tmp.path() / "o") + " --lsh-threshold 1.5", tmp.path()).code, 1);
  EXPECT_EQ(cli("train -o " + shell_quote(tmp.path()) + " --topics 0", tmp.path()).code, 1);
  EXPECT_EQ(cli("train --topics abc", tmp.path()).code, 1);
}

TEST(Cli, DataErrorsExitTwo) {
  TempDir tmp("data");
  auto missing = cli("extract -i " + shell_quote(tmp.path() / "nope") + " -o " + shell_quote(tmp.path() / "o"), tmp.path());
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.output.find("nope"), std::string::npos) << missing.output;
  fs::create_directories(tmp.path() / "empty");
  EXPECT_EQ(cli("extract -i " + shell_quote(tmp.path() / "empty") + " -o " + shell_quote(tmp.path() / "o"), tmp.path()).code, 2);
  auto no_bags = cli("dedup -o " + shell_quote(tmp.path() / "fresh"), tmp.path());
  EXPECT_EQ(no_bags.code, 2);
  EXPECT_NE(no_bags.output.find("repos.bags"), std::string::npos);
}

TEST(Pipeline, MiniCorpusMatchesGoldenFiles) {
  TempDir tmp("golden");
  auto out = tmp.path() / "out";
  auto r = cli("pipeline -i " + shell_quote(kMini) + " -o " + shell_quote(out) + " --topics 8 --seed 1", tmp.path());
  ASSERT_EQ(r.code, 0) << r.output;
  ASSERT_TRUE(fs::is_directory(kGolden));
  std::size_t compared = 0;
  for (const auto& e : fs::directory_iterator(kGolden)) {
    const auto name = e.path().filename().string();
    ASSERT_TRUE(fs::exists(out / name)) << name;
    EXPECT_EQ(read_file(out / name), read_file(e.path())) << name;
    ++compared;
  }
  EXPECT_GE(compared, 10u);
}

TEST(Pipeline, RerunsAreByteIdenticalAndWorkerInvariant) {
  TempDir tmp("rerun");
  const std::string args = " -i " + shell_quote(kMini) + " --topics 6 --seed 3";
  ASSERT_EQ(cli("pipeline -o " + shell_quote(tmp.path() / "a") + args, tmp.path()).code, 0);
  ASSERT_EQ(cli("pipeline -o " + shell_quote(tmp.path() / "b") + args, tmp.path()).code, 0);
  ASSERT_EQ(cli("pipeline -o " + shell_quote(tmp.path() / "c") + args + " -j 4", tmp.path()).code, 0);
  auto a = snapshot(tmp.path() / "a");
  EXPECT_EQ(a, snapshot(tmp.path() / "b"));
  EXPECT_EQ(a, snapshot(tmp.path() / "c"));
  // Rerunning in place does not change anything either.
  ASSERT_EQ(cli("pipeline -o " + shell_quote(tmp.path() / "a") + args, tmp.path()).code, 0);
  EXPECT_EQ(a, snapshot(tmp.path() / "a"));
  for (const auto& [name, content] : a) EXPECT_EQ(name.find(".tmp"), std::string::npos) << name;
}

TEST(Pipeline, StagesAndArtifacts) {
  TempDir tmp("stages");
  const auto out = tmp.path() / "o";
  const std::string o = " -o " + shell_quote(out);
  ASSERT_EQ(cli("extract -i " + shell_quote(kMini) + o, tmp.path()).code, 0);
  for (const char* f : {"repos.bags", "repos.vocab", "repos.corpus", "name_lengths.tsv", "stem_threshold.tsv",
                        "term_frequency.tsv", "bag_sizes.tsv", "extract_stats.tsv"})
    EXPECT_TRUE(fs::exists(out / f)) << f;
  ASSERT_EQ(cli("dedup" + o, tmp.path()).code, 0);
  EXPECT_EQ(read_file(out / "duplicates.tsv"), "plotkit\tplotkit-copy\tplotkit-mirror\n");
  EXPECT_EQ(read_file(out / "removed.txt"), "plotkit-copy\nplotkit-mirror\n");
  auto filtered = load_corpus(out / "filtered.corpus");
  EXPECT_EQ(filtered.num_docs(), 12u);

  ASSERT_EQ(cli("train --topics 5" + o, tmp.path()).code, 0);
  auto metrics = read_file(out / "metrics.tsv");
  EXPECT_EQ(std::count(metrics.begin(), metrics.end(), '\n'), 19);
  EXPECT_FALSE(fs::exists(out / "lda_metrics.tsv"));
  ASSERT_EQ(cli("embed --topics 5" + o, tmp.path()).code, 0);
  ASSERT_EQ(cli("report --top-n 7" + o, tmp.path()).code, 0);
  for (int t = 0; t < 5; ++t) EXPECT_TRUE(fs::exists(out / ("topic_" + std::to_string(t) + "_repos.tsv"))) << t;
  EXPECT_FALSE(fs::exists(out / "topic_5_repos.tsv"));
  auto report = read_file(out / "topics_report.tsv");
  EXPECT_EQ(std::count(report.begin(), report.end(), '\n'), 6);
  auto emb = parse_embedding(read_file(out / "embeddings.tsv"));
  EXPECT_EQ(emb.repos.size(), 12u);

  // A fresh extract drops the stale filtered corpus.
  ASSERT_EQ(cli("extract -i " + shell_quote(kMini) + o, tmp.path()).code, 0);
  EXPECT_FALSE(fs::exists(out / "filtered.corpus"));
}

TEST(Pipeline, NoClonesGivesEmptySetsFile) {
  TempDir tmp("noclones");
  auto in = tmp.path() / "in";
  fs::create_directories(in);
  for (const char* repo : {"netio", "tinyparse", "arcade"}) fs::copy(kMini / repo, in / repo, fs::copy_options::recursive);
  auto out = tmp.path() / "o";
  ASSERT_EQ(cli("extract -i " + shell_quote(in) + " -o " + shell_quote(out) + " --tf 1", tmp.path()).code, 0);
  ASSERT_EQ(cli("dedup -o " + shell_quote(out) + " --tf 1", tmp.path()).code, 0);
  EXPECT_EQ(read_file(out / "duplicates.tsv"), "");
  EXPECT_EQ(load_corpus(out / "filtered.corpus").num_docs(), 3u);
}

TEST(Pipeline, ZeroTausMatchPlainEm) {
  TempDir tmp("taus");
  auto out = tmp.path().string();
  ASSERT_EQ(cli("extract -i " + shell_quote(kMini) + " -o " + shell_quote(out), tmp.path()).code, 0);
  ASSERT_EQ(cli("train --topics 4 --tau-phi 0 --tau-theta 0 -o " + shell_quote(out), tmp.path()).code, 0);
  auto reg = read_file(tmp.path() / "model.artm");
  ASSERT_EQ(cli("train --topics 4 --iters-plain 18 --iters-reg 0 -o " + shell_quote(out), tmp.path()).code, 0);
  EXPECT_EQ(read_file(tmp.path() / "model.artm"), reg);
}

TEST(Pipeline, LdaBaselineIsDense) {
  TempDir tmp("lda");
  auto out = shell_quote(tmp.path());
  ASSERT_EQ(cli("extract -i " + shell_quote(kMini) + " -o " + out, tmp.path()).code, 0);
  ASSERT_EQ(cli("train --topics 4 --lda -o " + out, tmp.path()).code, 0);
  auto rows = testing_support::read_tsv(tmp.path() / "lda_metrics.tsv");
  ASSERT_EQ(rows.size(), 21u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i][4], "0");
    EXPECT_EQ(rows[i][5], "0");
  }
}

TEST(Pipeline, FailedStageLeavesPriorOutputsIntact) {
  TempDir tmp("intact");
  auto out = tmp.path() / "o";
  ASSERT_EQ(cli("pipeline -i " + shell_quote(kMini) + " -o " + shell_quote(out) + " --topics 4", tmp.path()).code, 0);
  auto before = snapshot(out);
  write_file_atomic(out / "filtered.corpus", "1 5 1\nrepo\t9:1\n");
  auto r = cli("train --topics 4 -o " + shell_quote(out), tmp.path());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.output.find("filtered.corpus:2"), std::string::npos) << r.output;
  auto after = snapshot(out);
  after.erase("filtered.corpus");
  before.erase("filtered.corpus");
  EXPECT_EQ(after, before);
}

TEST(Pipeline, ConfigFileWithFlagOverride) {
  TempDir tmp("config");
  auto out = tmp.path() / "o";
  write_file_atomic(tmp.path() / "run.conf",
                    "# run settings\ninput = " + kMini.string() + "\noutput = " + out.string() + "\ntopics = 3\ntf = 1000\n");
  auto conf = " --config " + shell_quote(tmp.path() / "run.conf");
  ASSERT_EQ(cli("extract" + conf, tmp.path()).code, 0);
  EXPECT_EQ(read_file(out / "repos.vocab"), "");
  ASSERT_EQ(cli("extract --tf 20" + conf, tmp.path()).code, 0);
  EXPECT_NE(read_file(out / "repos.vocab"), "");
  ASSERT_EQ(cli("train" + conf, tmp.path()).code, 0);
  EXPECT_EQ(parse_model(read_file(out / "model.artm")).num_topics(), 3u);
  ASSERT_EQ(cli("train --topics 2" + conf, tmp.path()).code, 0);
  EXPECT_EQ(parse_model(read_file(out / "model.artm")).num_topics(), 2u);
  write_file_atomic(tmp.path() / "bad.conf", "topics = many\n");
  EXPECT_EQ(cli("train --config " + shell_quote(tmp.path() / "bad.conf"), tmp.path()).code, 1);
}

TEST(Pipeline, CustomProfilesFile) {
  TempDir tmp("profiles");
  auto in = tmp.path() / "in";
  fs::create_directories(in / "luarepo");
  write_file_atomic(in / "luarepo" / "main.lua", "local playerScore = 1 -- hidden words\n");
  write_file_atomic(tmp.path() / "p.conf", "[lua]\nextensions = lua\nline_comment = --\nkeywords = local\n");
  auto out = tmp.path() / "o";
  ASSERT_EQ(cli("extract --tf 1 -i " + shell_quote(in) + " -o " + shell_quote(out) + " --profiles " + shell_quote(tmp.path() / "p.conf"),
                tmp.path()).code,
            0);
  EXPECT_EQ(read_file(out / "repos.bags"), "luarepo\tplayer:1 score:1\n");
  write_file_atomic(tmp.path() / "bad.conf", "[lua]\nextensions = LUA\n");
  EXPECT_EQ(cli("extract -i " + shell_quote(in) + " -o " + shell_quote(out) + " --profiles " + shell_quote(tmp.path() / "bad.conf"),
                tmp.path()).code,
            2);
}

TEST(ReadRepositories, SortedRelativePaths) {
  auto repos = read_repositories(kMini);
  ASSERT_EQ(repos.size(), 14u);
  EXPECT_EQ(repos.front().name, "arcade");
  for (const auto& r : repos) {
    EXPECT_TRUE(std::is_sorted(r.files.begin(), r.files.end(), [](auto& a, auto& b) { return a.path < b.path; }));
    for (const auto& f : r.files) EXPECT_NE(f.path.front(), '/');
  }
}
