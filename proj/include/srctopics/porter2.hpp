#pragma once

// Snowball English ("Porter2") stemmer, following the english.sbl script of
// Snowball 3.x. Operates on lowercase ASCII; apostrophe forms are accepted.
// Inside the algorithm 'Y' marks a y that acts as a consonant.

#include <array>
#include <string>
#include <string_view>

namespace srctopics::porter2 {

namespace detail {

inline bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

// Longest entry of `table` that is a suffix of `s`, or empty.
template <std::size_t N>
std::string_view longest_suffix(std::string_view s, const std::array<std::string_view, N>& table) {
  std::string_view best;
  for (auto entry : table)
    if (entry.size() > best.size() && ends_with(s, entry)) best = entry;
  return best;
}

class Stemmer {
 public:
  explicit Stemmer(std::string word) : w_(std::move(word)) {}

  std::string run() {
    if (auto exc = exception1()) return std::string(*exc);
    if (w_.size() < 3) return w_;
    prelude();
    mark_regions();
    step_1a();
    step_1b();
    step_1c();
    step_2();
    step_3();
    step_4();
    step_5();
    for (auto& c : w_)
      if (c == 'Y') c = 'y';
    return w_;
  }

 private:
  const std::string_view* exception1() const {
    static constexpr std::array<std::string_view, 15> words = {
        "andes", "atlas", "bias", "cosmos", "early", "gently", "howe", "idly",
        "news",  "only",  "singly", "skies", "skis", "sky",  "ugly"};
    static constexpr std::array<std::string_view, 15> stems = {
        "andes", "atlas", "bias", "cosmos", "earli", "gentl", "howe", "idl",
        "news",  "onli",  "singl", "sky",   "ski",  "sky",  "ugli"};
    for (std::size_t i = 0; i < words.size(); ++i)
      if (w_ == words[i]) return &stems[i];
    return nullptr;
  }

  void prelude() {
    if (!w_.empty() && w_[0] == '\'') w_.erase(0, 1);
    if (!w_.empty() && w_[0] == 'y') w_[0] = 'Y';
    for (std::size_t i = 1; i < w_.size(); ++i)
      if (w_[i] == 'y' && is_vowel(w_[i - 1])) w_[i] = 'Y';
  }

  // Position after the first non-vowel that follows a vowel, starting at `from`.
  std::size_t region_after(std::size_t from) const {
    std::size_t i = from;
    while (i < w_.size() && !is_vowel(w_[i])) ++i;
    if (i >= w_.size()) return w_.size();
    while (i < w_.size() && is_vowel(w_[i])) ++i;
    if (i >= w_.size()) return w_.size();
    return i + 1;
  }

  void mark_regions() {
    static constexpr std::array<std::string_view, 9> prefixes = {
        "arsen", "commun", "emerg", "gener", "inter", "later", "organ", "past", "univers"};
    p1_ = p2_ = w_.size();
    std::size_t matched = 0;
    for (auto p : prefixes)
      if (p.size() > matched && starts_with(w_, p)) matched = p.size();
    if (matched) {
      p1_ = matched;
    } else {
      p1_ = region_after(0);
      if (p1_ >= w_.size()) {
        p1_ = w_.size();
        return;
      }
    }
    p2_ = region_after(p1_);
  }

  bool in_r1(std::size_t suffix_len) const { return w_.size() - suffix_len >= p1_ && w_.size() >= suffix_len; }
  bool in_r2(std::size_t suffix_len) const { return w_.size() - suffix_len >= p2_ && w_.size() >= suffix_len; }

  void replace_suffix(std::size_t len, std::string_view with) {
    w_.erase(w_.size() - len);
    w_.append(with);
  }

  // Short syllable ending at position `end` (exclusive).
  bool short_syllable_at(std::size_t end) const {
    auto is_wxy = [](char c) { return c == 'w' || c == 'x' || c == 'Y'; };
    if (end >= 3 && !is_vowel(w_[end - 1]) && !is_wxy(w_[end - 1]) && is_vowel(w_[end - 2]) &&
        !is_vowel(w_[end - 3]))
      return true;
    if (end == 2 && !is_vowel(w_[1]) && is_vowel(w_[0])) return true;
    return end >= 4 && std::string_view(w_).substr(end - 4, 4) == "past";
  }

  void step_1a() {
    static constexpr std::array<std::string_view, 3> apostrophes = {"'", "'s'", "'s"};
    auto apo = longest_suffix(w_, apostrophes);
    if (!apo.empty()) w_.erase(w_.size() - apo.size());

    static constexpr std::array<std::string_view, 6> table = {"ied", "s", "ies", "sses", "ss", "us"};
    auto suf = longest_suffix(w_, table);
    if (suf == "sses") {
      replace_suffix(4, "ss");
    } else if (suf == "ied" || suf == "ies") {
      replace_suffix(3, w_.size() - 3 >= 2 ? "i" : "ie");
    } else if (suf == "s") {
      // Delete if a vowel occurs before the letter preceding the s.
      if (w_.size() < 3) return;
      for (std::size_t i = 0; i + 2 < w_.size(); ++i) {
        if (is_vowel(w_[i])) {
          w_.pop_back();
          return;
        }
      }
    }
  }

  void step_1b() {
    static constexpr std::array<std::string_view, 6> table = {"ed", "eed", "ing", "edly", "eedly", "ingly"};
    auto suf = longest_suffix(w_, table);
    if (suf.empty()) return;
    std::string_view stem = std::string_view(w_).substr(0, w_.size() - suf.size());

    if (suf == "eed" || suf == "eedly") {
      if (!in_r1(suf.size())) return;
      if (stem == "succ" || stem == "proc" || stem == "exc") return;
      replace_suffix(suf.size(), "ee");
      return;
    }
    if (suf == "ing") {
      static constexpr std::array<std::string_view, 7> special = {"even", "cann", "inn", "earr", "herr", "out", "y"};
      auto tail = longest_suffix(stem, special);
      if (tail == "y") {
        if (stem.size() == 2 && !is_vowel(stem[0])) {
          replace_suffix(4, "ie");
          return;
        }
      } else if (!tail.empty()) {
        if (stem.size() == tail.size()) return;
      }
    }

    bool has_vowel = false;
    for (char c : stem)
      if (is_vowel(c)) has_vowel = true;
    if (!has_vowel) return;
    w_.erase(w_.size() - suf.size());

    if (ends_with(w_, "at") || ends_with(w_, "bl") || ends_with(w_, "iz")) {
      w_.push_back('e');
      return;
    }
    static constexpr std::array<std::string_view, 9> doubles = {"bb", "dd", "ff", "gg", "mm",
                                                                "nn", "pp", "rr", "tt"};
    if (!longest_suffix(w_, doubles).empty()) {
      char first = w_.size() == 3 ? w_[0] : '\0';
      if (w_.size() == 3 && (first == 'a' || first == 'e' || first == 'o')) return;
      w_.pop_back();
      return;
    }
    if (w_.size() == p1_ && short_syllable_at(w_.size())) w_.push_back('e');
  }

  void step_1c() {
    if (w_.size() < 3) return;
    char last = w_.back();
    if (last != 'y' && last != 'Y') return;
    if (is_vowel(w_[w_.size() - 2])) return;
    w_.back() = 'i';
  }

  void step_2() {
    struct Rule {
      std::string_view suffix;
      std::string_view replacement;
    };
    static constexpr std::array<Rule, 25> rules = {{
        {"anci", "ance"},   {"enci", "ence"},   {"ogi", "og"},       {"li", ""},
        {"bli", "ble"},     {"abli", "able"},   {"alli", "al"},      {"fulli", "ful"},
        {"lessli", "less"}, {"ousli", "ous"},   {"entli", "ent"},    {"aliti", "al"},
        {"biliti", "ble"},  {"iviti", "ive"},   {"tional", "tion"},  {"ational", "ate"},
        {"alism", "al"},    {"ation", "ate"},   {"ization", "ize"},  {"izer", "ize"},
        {"ator", "ate"},    {"iveness", "ive"}, {"fulness", "ful"},  {"ousness", "ous"},
        {"ogist", "og"},
    }};
    const Rule* best = nullptr;
    for (const auto& r : rules)
      if ((!best || r.suffix.size() > best->suffix.size()) && ends_with(w_, r.suffix)) best = &r;
    if (!best || !in_r1(best->suffix.size())) return;
    std::size_t before = w_.size() - best->suffix.size();
    if (best->suffix == "ogi") {
      if (before == 0 || w_[before - 1] != 'l') return;
    } else if (best->suffix == "li") {
      static constexpr std::string_view valid_li = "cdeghkmnrt";
      if (before == 0 || valid_li.find(w_[before - 1]) == std::string_view::npos) return;
    }
    replace_suffix(best->suffix.size(), best->replacement);
  }

  void step_3() {
    struct Rule {
      std::string_view suffix;
      std::string_view replacement;
    };
    static constexpr std::array<Rule, 9> rules = {{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"}, {"ical", "ic"},
        {"tional", "tion"}, {"ational", "ate"}, {"ful", ""}, {"ness", ""},
    }};
    const Rule* best = nullptr;
    for (const auto& r : rules)
      if ((!best || r.suffix.size() > best->suffix.size()) && ends_with(w_, r.suffix)) best = &r;
    if (!best || !in_r1(best->suffix.size())) return;
    if (best->suffix == "ative" && !in_r2(best->suffix.size())) return;
    replace_suffix(best->suffix.size(), best->replacement);
  }

  void step_4() {
    static constexpr std::array<std::string_view, 18> table = {
        "ic", "ance", "ence", "able", "ible", "ate", "ive", "ize", "iti",
        "al", "ism",  "ion",  "er",   "ous",  "ant", "ent", "ment", "ement"};
    auto suf = longest_suffix(w_, table);
    if (suf.empty() || !in_r2(suf.size())) return;
    if (suf == "ion") {
      std::size_t before = w_.size() - 3;
      if (before == 0 || (w_[before - 1] != 's' && w_[before - 1] != 't')) return;
    }
    w_.erase(w_.size() - suf.size());
  }

  void step_5() {
    if (w_.empty()) return;
    if (w_.back() == 'e') {
      if (in_r2(1)) {
        w_.pop_back();
      } else if (in_r1(1) && !short_syllable_at(w_.size() - 1)) {
        w_.pop_back();
      }
    } else if (w_.back() == 'l') {
      if (in_r2(1) && w_.size() >= 2 && w_[w_.size() - 2] == 'l') w_.pop_back();
    }
  }

  std::string w_;
  std::size_t p1_ = 0;
  std::size_t p2_ = 0;
};

}  // namespace detail

inline std::string stem(std::string_view word) { return detail::Stemmer(std::string(word)).run(); }

}  // namespace srctopics::porter2
