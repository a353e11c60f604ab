#pragma once

// Identifier splitting, stemming and per-repository bag construction.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srctopics/lexing.hpp"
#include "srctopics/porter2.hpp"
#include "srctopics/util.hpp"

namespace srctopics {

using TermCounts = std::map<std::string, std::uint64_t>;

struct Bag {
  std::string repo;
  TermCounts counts;

  friend bool operator==(const Bag&, const Bag&) = default;
};

struct NamingOptions {
  std::size_t stem_threshold = 6;
  std::size_t max_word_length = 64;
};

// Splits one identifier into lowercase words of three letters or more.
//
// Parts are the maximal runs of ASCII letters. Inside a part a boundary falls
// before an upper-case letter that follows a lower-case one. On an
// upper-to-lower transition the preceding upper-case run (excluding its last
// letter) is cut off as its own word if it has 1..3 letters; a longer run is
// cut after the transition letter instead, so "HTMLParser" yields "htmlp" and
// "arser". Words shorter than three letters are not emitted but stashed; the
// next emitted word is also emitted glued to the stash ("wdSize" gives "size"
// and "wdsize"). The stash survives across parts of the same token.
inline std::vector<std::string> split_identifier(std::string_view token) {
  token = trim(token);
  std::vector<std::string> words;
  std::string stash;

  auto emit = [&](std::string_view piece) {
    std::string word = detail::ascii_lower(piece);
    if (word.size() >= 3) {
      words.push_back(word);
      if (!stash.empty()) {
        words.push_back(stash + word);
        stash.clear();
      }
    } else {
      stash = std::move(word);
    }
  };
  auto is_lower = [](char c) { return c >= 'a' && c <= 'z'; };
  auto is_upper = [](char c) { return c >= 'A' && c <= 'Z'; };

  std::size_t i = 0;
  const std::size_t n = token.size();
  while (i < n) {
    while (i < n && !detail::is_ascii_alpha(static_cast<unsigned char>(token[i]))) ++i;
    std::size_t begin = i;
    while (i < n && detail::is_ascii_alpha(static_cast<unsigned char>(token[i]))) ++i;
    if (begin == i) break;
    std::string_view part = token.substr(begin, i - begin);

    std::size_t pos = 0;
    for (std::size_t j = 1; j < part.size(); ++j) {
      char prev = part[j - 1];
      char cur = part[j];
      if (is_lower(prev) && is_upper(cur)) {
        emit(part.substr(pos, j - pos));
        pos = j;
      } else if (is_upper(prev) && is_lower(cur)) {
        std::size_t run = j - 1 - pos;
        if (run == 0) continue;
        if (run <= 3) {
          emit(part.substr(pos, run));
          pos = j - 1;
        } else {
          emit(part.substr(pos, j - pos));
          pos = j;
        }
      }
    }
    if (pos < part.size()) emit(part.substr(pos));
  }
  return words;
}

// Porter2 stem for words of at least `threshold` letters; shorter words are
// returned unchanged.
inline std::string stem_name(std::string_view word, std::size_t threshold = 6) {
  if (word.size() < threshold) return std::string(word);
  return porter2::stem(word);
}

struct ExtractStats {
  std::uint64_t files_seen = 0;
  std::uint64_t files_skipped = 0;  // no language profile matched
  std::uint64_t tokens = 0;
  std::uint64_t words = 0;
  std::uint64_t truncated_words = 0;

  ExtractStats& operator+=(const ExtractStats& o) {
    files_seen += o.files_seen;
    files_skipped += o.files_skipped;
    tokens += o.tokens;
    words += o.words;
    truncated_words += o.truncated_words;
    return *this;
  }
};

// Split words before stemming, kept for the stemming-threshold analysis.
struct RepoExtraction {
  Bag bag;
  TermCounts raw_words;
  ExtractStats stats;
};

// Adds one token's words to the extraction.
inline void add_token(RepoExtraction& out, std::string_view token, const NamingOptions& opts) {
  ++out.stats.tokens;
  for (auto& word : split_identifier(token)) {
    if (word.size() > opts.max_word_length) {
      word.resize(opts.max_word_length);
      ++out.stats.truncated_words;
    }
    ++out.stats.words;
    ++out.raw_words[word];
    ++out.bag.counts[stem_name(word, opts.stem_threshold)];
  }
}

inline RepoExtraction extract_repo(std::string repo, std::span<const SourceFile> files,
                                   const ProfileRegistry& registry, const NamingOptions& opts = {}) {
  RepoExtraction out;
  out.bag.repo = std::move(repo);
  for (const auto& file : files) {
    ++out.stats.files_seen;
    const auto* profile = registry.profile_for(file.path);
    if (!profile) {
      ++out.stats.files_skipped;
      continue;
    }
    for (const auto& token : extract_name_tokens(file, *profile)) add_token(out, token, opts);
  }
  return out;
}

inline Bag bag_of_repo(std::string repo, std::span<const SourceFile> files, const ProfileRegistry& registry,
                       const NamingOptions& opts = {}) {
  return extract_repo(std::move(repo), files, registry, opts).bag;
}

using Histogram = std::map<std::uint64_t, std::uint64_t>;

struct NameStats {
  Histogram term_lengths;        // term length -> number of distinct terms
  Histogram vocab_by_threshold;  // stemming threshold -> vocabulary size
  Histogram term_frequencies;    // corpus-wide count -> number of terms
  Histogram bag_sizes;           // distinct terms per bag -> number of bags
};

// Corpus statistics over the bags. `raw_words` (unstemmed split words) feeds
// the stemming-threshold curve for thresholds 1..12; without it that curve is
// left empty.
inline NameStats name_stats(std::span<const Bag> bags, const TermCounts* raw_words = nullptr) {
  NameStats stats;
  TermCounts totals;
  for (const auto& bag : bags) {
    ++stats.bag_sizes[bag.counts.size()];
    for (const auto& [term, count] : bag.counts) totals[term] += count;
  }
  for (const auto& [term, count] : totals) {
    ++stats.term_lengths[term.size()];
    ++stats.term_frequencies[count];
  }
  if (raw_words && !raw_words->empty()) {
    std::vector<std::pair<std::string_view, std::string>> stemmed;
    stemmed.reserve(raw_words->size());
    for (const auto& [word, count] : *raw_words) stemmed.emplace_back(word, porter2::stem(word));
    for (std::uint64_t threshold = 1; threshold <= 12; ++threshold) {
      std::set<std::string_view> vocab;
      for (const auto& [word, stem] : stemmed)
        vocab.insert(word.size() >= threshold ? std::string_view(stem) : word);
      stats.vocab_by_threshold[threshold] = vocab.size();
    }
  }
  return stats;
}

inline std::string histogram_tsv(const Histogram& h, std::string_view key_name, std::string_view value_name) {
  std::string out;
  out.append(key_name).append("\t").append(value_name).append("\n");
  for (const auto& [k, v] : h) out += std::to_string(k) + "\t" + std::to_string(v) + "\n";
  return out;
}

}  // namespace srctopics
