#pragma once

// Helpers shared by the unit tests and the acceptance runner.

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include "srctopics/corpus.hpp"
#include "srctopics/util.hpp"

namespace testing_support {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(SRCTOPICS_TEST_DATA) / name;
}

inline std::vector<std::vector<std::string>> read_tsv(const std::filesystem::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    for (auto f : srctopics::split_char(line, '\t')) row.emplace_back(f);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Line-by-line transliteration of the published splitting listing, using
// std::regex for the separator split and explicit index arithmetic for the
// case transitions. Kept deliberately close to the listing and away from the
// library implementation.
inline std::vector<std::string> split_oracle(std::string token) {
  auto strip = [](std::string s) {
    const char* ws = " \t\n\r\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };
  auto islower = [](char c) { return c >= 'a' && c <= 'z'; };
  auto isupper = [](char c) { return c >= 'A' && c <= 'Z'; };

  token = strip(token);
  std::vector<std::string> out;
  std::string prev_p;
  auto ret = [&](const std::string& name) {
    std::string r = name;
    for (auto& c : r)
      if (isupper(c)) c = static_cast<char>(c - 'A' + 'a');
    if (name.size() >= 3) {
      out.push_back(r);
      if (!prev_p.empty()) {
        out.push_back(prev_p + r);
        prev_p = "";
      }
    } else {
      prev_p = r;
    }
  };

  static const std::regex breakup("[^a-zA-Z]+");
  std::sregex_token_iterator it(token.begin(), token.end(), breakup, -1), end;
  for (; it != end; ++it) {
    std::string part = *it;
    if (part.empty()) continue;
    char prev = part[0];
    long pos = 0;
    for (long i = 1; i < static_cast<long>(part.size()); ++i) {
      char cur = part[i];
      if (islower(prev) && isupper(cur)) {
        ret(part.substr(pos, i - pos));
        pos = i;
      } else if (isupper(prev) && islower(cur)) {
        if (0 < i - 1 - pos && i - 1 - pos <= 3) {
          ret(part.substr(pos, i - 1 - pos));
          pos = i - 1;
        } else if (i - 1 > pos) {
          ret(part.substr(pos, i - pos));
          pos = i;
        }
      }
      prev = cur;
    }
    std::string last = part.substr(pos);
    if (!last.empty()) ret(last);
  }
  return out;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("srctopics_" + tag + "_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Docs 0..9 draw only from terms 0..99, docs 10..19 only from 100..199.
inline srctopics::SparseCorpus two_block_corpus(std::uint64_t seed = 11) {
  std::mt19937_64 rng(seed);
  srctopics::SparseCorpus c;
  c.num_terms = 200;
  for (int d = 0; d < 20; ++d) {
    srctopics::Document doc{"doc" + std::to_string(d), {}};
    const std::uint32_t base = d < 10 ? 0 : 100;
    for (std::uint32_t w = 0; w < 100; ++w)
      if (rng() % 3 == 0) doc.terms.push_back({base + w, 1 + rng() % 5});
    c.docs.push_back(std::move(doc));
  }
  return c;
}

}  // namespace testing_support
