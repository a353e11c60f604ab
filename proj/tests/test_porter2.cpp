#include <gtest/gtest.h>

#include <string>

#include "srctopics/porter2.hpp"
#include "test_support.hpp"

using srctopics::porter2::stem;

namespace {

void check_vector(const char* file, std::size_t min_rows) {
  auto rows = testing_support::read_tsv(testing_support::data_path(file));
  ASSERT_GE(rows.size(), min_rows);
  std::size_t mismatches = 0;
  for (const auto& row : rows) {
    ASSERT_EQ(row.size(), 2u);
    if (stem(row[0]) != row[1]) {
      ++mismatches;
      ADD_FAILURE() << row[0] << ": expected " << row[1] << ", got " << stem(row[0]);
    }
  }
  EXPECT_EQ(mismatches, 0u);
}

}  // namespace

TEST(Porter2, PublishedSampleVocabulary) { check_vector("porter2_published.tsv", 100); }

TEST(Porter2, ExtendedWordList) { check_vector("porter2_extended.tsv", 2000); }

TEST(Porter2, WordsFromPythonStdlibSource) { check_vector("porter2_code_words.tsv", 10000); }

TEST(Porter2, ExceptionalForms) {
  EXPECT_EQ(stem("skies"), "sky");
  EXPECT_EQ(stem("dying"), "die");
  EXPECT_EQ(stem("news"), "news");
  EXPECT_EQ(stem("generously"), "generous");
  EXPECT_EQ(stem("generate"), "generat");
  EXPECT_EQ(stem("communism"), "communism");
}

TEST(Porter2, ShortWordsPassThrough) {
  EXPECT_EQ(stem(""), "");
  EXPECT_EQ(stem("a"), "a");
  EXPECT_EQ(stem("is"), "is");
}

TEST(Porter2, YHandling) {
  EXPECT_EQ(stem("cry"), "cri");
  EXPECT_EQ(stem("by"), "by");
  EXPECT_EQ(stem("say"), "say");
  EXPECT_EQ(stem("youth"), "youth");
}
