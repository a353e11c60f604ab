#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "srctopics/corpus.hpp"
#include "test_support.hpp"

using namespace srctopics;

namespace {

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const data_error& e) {
    return e.what();
  }
  return "";
}

std::vector<Bag> random_bags(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::vector<Bag> bags;
  for (int i = 0; i < n; ++i) {
    Bag b{"repo" + std::to_string(i), {}};
    for (int k = 0, m = static_cast<int>(rng() % 12); k < m; ++k)
      b.counts["term" + std::to_string(rng() % 30)] += 1 + rng() % 9;
    bags.push_back(std::move(b));
  }
  return bags;
}

}  // namespace

TEST(BuildVocabulary, ThresholdKeepsExactCount) {
  std::vector<Bag> bags = {{"a", {{"foo", 12}, {"bar", 19}}}, {"b", {{"foo", 8}}}};
  auto v = build_vocabulary(bags, 20);
  EXPECT_EQ(v.terms, std::vector<std::string>{"foo"});
  EXPECT_EQ(v.total_counts, std::vector<std::uint64_t>{20});
}

TEST(BuildVocabulary, AllTermsAtOneAndEmptyInput) {
  std::vector<Bag> bags = {{"a", {{"zeta", 1}, {"alpha", 1}}}};
  EXPECT_EQ(build_vocabulary(bags, 1).terms, (std::vector<std::string>{"alpha", "zeta"}));
  EXPECT_EQ(build_vocabulary(std::vector<Bag>{}, 20).size(), 0u);
  EXPECT_THROW(build_vocabulary(bags, 0), usage_error);
}

TEST(BuildVocabulary, OrderIndependentAndCountPreserving) {
  auto bags = random_bags(1, 40);
  auto v = build_vocabulary(bags, 15);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(bags.begin(), bags.end(), rng);
    EXPECT_EQ(build_vocabulary(bags, 15), v);
  }
  auto corpus = index_corpus(bags, v);
  std::uint64_t vocab_total = 0;
  for (auto c : v.total_counts) vocab_total += c;
  EXPECT_EQ(corpus.total_tokens(), vocab_total);
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_GE(v.total_counts[i], 15u);
    EXPECT_EQ(v.id_of(v.terms[i]), static_cast<std::int64_t>(i));
  }
  EXPECT_EQ(v.id_of("nope"), -1);
}

TEST(IndexCorpus, DropsOovAndEmptyDocs) {
  Vocabulary v{{"foo"}, {3}};
  auto c = index_corpus(std::vector<Bag>{{"a", {{"foo", 2}, {"zzz", 1}}}, {"b", {{"zzz", 1}}}}, v);
  ASSERT_EQ(c.num_docs(), 1u);
  EXPECT_EQ(c.docs[0].terms, (std::vector<TermCount>{{0, 2}}));
  EXPECT_EQ(c.num_terms, 1u);
}

TEST(IndexCorpus, IdsFollowVocabularyOrder) {
  std::vector<Bag> bags = {{"a", {{"beta", 1}, {"alpha", 2}}}, {"b", {{"gamma", 3}, {"alpha", 1}}}};
  auto v = build_vocabulary(bags, 1);
  auto c = index_corpus(bags, v);
  ASSERT_EQ(c.num_docs(), 2u);
  EXPECT_EQ(c.docs[0].terms, (std::vector<TermCount>{{0, 2}, {1, 1}}));
  EXPECT_EQ(c.docs[1].terms, (std::vector<TermCount>{{0, 1}, {2, 3}}));
}

TEST(CorpusFile, RoundTrip) {
  auto bags = random_bags(7, 3);
  auto c = index_corpus(bags, build_vocabulary(bags, 1));
  ASSERT_EQ(c.num_docs(), 3u);
  testing_support::TempDir dir("corpus");
  save_corpus(dir.path() / "c", c);
  auto loaded = load_corpus(dir.path() / "c");
  EXPECT_EQ(loaded, c);
  EXPECT_EQ(format_corpus(loaded), read_file(dir.path() / "c"));
  EXPECT_FALSE(std::filesystem::exists(dir.path() / "c.tmp"));
}

TEST(CorpusFile, EmptyCorpus) {
  SparseCorpus c;
  c.num_terms = 5;
  EXPECT_EQ(format_corpus(c), "0 5 0\n");
  EXPECT_EQ(parse_corpus(format_corpus(c)), c);
}

TEST(CorpusFile, ParseErrorsNameTheLine) {
  EXPECT_NE(error_of([] { parse_corpus("2 3 2\na\t0:1\nb\t3:1\n", "x.corpus"); }).find("x.corpus:3"), std::string::npos);
  EXPECT_NE(error_of([] { parse_corpus("1 3 1\na\t0:0\n"); }).find(":2:"), std::string::npos);
  EXPECT_NE(error_of([] { parse_corpus("1 3 2\na\t1:1 0:1\n"); }).find("increasing"), std::string::npos);
  EXPECT_NE(error_of([] { parse_corpus("2 3 1\na\t0:1\n"); }).find("declares 2"), std::string::npos);
  EXPECT_NE(error_of([] { parse_corpus("1 3 5\na\t0:1\n"); }).find("NNZ"), std::string::npos);
  EXPECT_NE(error_of([] { parse_corpus("1 3\na\t0:1\n"); }).find("header"), std::string::npos);
  EXPECT_NE(error_of([] { parse_corpus("1 3 1\na 0:1\n"); }).find(":2:"), std::string::npos);
  EXPECT_NE(error_of([] { parse_corpus("1 3 1\na\t0-1\n"); }).find("malformed"), std::string::npos);
  EXPECT_NE(error_of([] { parse_corpus(""); }).find("header"), std::string::npos);
}

TEST(BagsFile, RoundTripAndErrors) {
  auto bags = random_bags(9, 6);
  bags.push_back({"empty/repo", {}});
  auto text = format_bags(bags);
  EXPECT_EQ(parse_bags(text), bags);
  EXPECT_THROW(parse_bags("norepo\n"), data_error);
  EXPECT_THROW(parse_bags("r\tfoo:0\n"), data_error);
  EXPECT_THROW(parse_bags("r\tfoo:1 foo:2\n"), data_error);
  EXPECT_THROW(format_bags(std::vector<Bag>{{"bad\tname", {}}}), data_error);
}

TEST(VocabularyFile, RoundTripAndErrors) {
  Vocabulary v{{"alpha", "beta"}, {}};
  EXPECT_EQ(parse_vocabulary(format_vocabulary(v)), v);
  EXPECT_THROW(parse_vocabulary("beta\nalpha\n"), data_error);
  EXPECT_THROW(parse_vocabulary("alpha\nalpha\n"), data_error);
  EXPECT_THROW(parse_vocabulary("al pha\n"), data_error);
}
