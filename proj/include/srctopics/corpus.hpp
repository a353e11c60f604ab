#pragma once

// Vocabulary construction with a frequency cut-off and the sparse
// document-term corpus, plus the plain-text formats they are stored in.
//
//   repos.bags    <repo>\t<term>:<count> <term>:<count> ...   (terms sorted)
//   repos.vocab   one term per line, line index = term id
//   repos.corpus  "D W NNZ" header, then <repo>\t<id>:<count> ... (ids ascending)

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "srctopics/naming.hpp"
#include "srctopics/util.hpp"

namespace srctopics {

struct Vocabulary {
  std::vector<std::string> terms;          // sorted; index is the term id
  std::vector<std::uint64_t> total_counts; // parallel to terms; empty when loaded from disk

  std::size_t size() const { return terms.size(); }

  // Term id or -1.
  std::int64_t id_of(std::string_view term) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), term);
    if (it == terms.end() || *it != term) return -1;
    return it - terms.begin();
  }

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

struct TermCount {
  std::uint32_t id;
  std::uint64_t count;

  friend bool operator==(const TermCount&, const TermCount&) = default;
};

struct Document {
  std::string repo;
  std::vector<TermCount> terms;  // ids strictly increasing, counts >= 1

  std::uint64_t length() const {
    std::uint64_t n = 0;
    for (const auto& tc : terms) n += tc.count;
    return n;
  }

  friend bool operator==(const Document&, const Document&) = default;
};

struct SparseCorpus {
  std::vector<Document> docs;
  std::size_t num_terms = 0;

  std::size_t num_docs() const { return docs.size(); }
  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& d : docs) n += d.terms.size();
    return n;
  }
  std::uint64_t total_tokens() const {
    std::uint64_t n = 0;
    for (const auto& d : docs) n += d.length();
    return n;
  }

  friend bool operator==(const SparseCorpus&, const SparseCorpus&) = default;
};

// Keeps every term whose summed count over all bags is at least `min_count`.
// A count equal to the threshold survives.
inline Vocabulary build_vocabulary(std::span<const Bag> bags, std::uint64_t min_count) {
  if (min_count < 1) throw usage_error("frequency threshold must be >= 1");
  TermCounts totals;
  for (const auto& bag : bags)
    for (const auto& [term, count] : bag.counts) totals[term] += count;
  Vocabulary vocab;
  for (const auto& [term, count] : totals) {
    if (count < min_count) continue;
    vocab.terms.push_back(term);
    vocab.total_counts.push_back(count);
  }
  return vocab;
}

// Maps bags onto vocabulary ids, dropping unknown terms and documents that end
// up empty.
inline SparseCorpus index_corpus(std::span<const Bag> bags, const Vocabulary& vocab) {
  SparseCorpus corpus;
  corpus.num_terms = vocab.size();
  std::unordered_map<std::string_view, std::uint32_t> ids;
  ids.reserve(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) ids.emplace(vocab.terms[i], static_cast<std::uint32_t>(i));
  for (const auto& bag : bags) {
    Document doc{bag.repo, {}};
    for (const auto& [term, count] : bag.counts) {
      auto it = ids.find(term);
      if (it != ids.end() && count > 0) doc.terms.push_back({it->second, count});
    }
    if (doc.terms.empty()) continue;
    std::sort(doc.terms.begin(), doc.terms.end(), [](const TermCount& a, const TermCount& b) { return a.id < b.id; });
    corpus.docs.push_back(std::move(doc));
  }
  return corpus;
}

namespace detail {

[[noreturn]] inline void parse_fail(std::string_view source, std::size_t line, const std::string& msg) {
  throw data_error(std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

inline void check_repo_name(std::string_view name) {
  if (name.empty()) throw data_error("empty repository name");
  for (char c : name)
    if (c == '\t' || c == '\n' || c == '\r') throw data_error("repository name contains a tab or newline: " + std::string(name));
}

// Splits text into lines; a trailing newline does not produce an empty line.
inline std::vector<std::string_view> text_lines(std::string_view text) {
  std::vector<std::string_view> lines = split_char(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (auto& l : lines)
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  return lines;
}

}  // namespace detail

// ---- bags -------------------------------------------------------------------

inline std::string format_bags(std::span<const Bag> bags) {
  std::string out;
  for (const auto& bag : bags) {
    detail::check_repo_name(bag.repo);
    out += bag.repo;
    out += '\t';
    bool first = true;
    for (const auto& [term, count] : bag.counts) {
      if (!first) out += ' ';
      first = false;
      out += term;
      out += ':';
      out += std::to_string(count);
    }
    out += '\n';
  }
  return out;
}

inline std::vector<Bag> parse_bags(std::string_view text, std::string_view source = "<bags>") {
  std::vector<Bag> bags;
  std::size_t line_no = 0;
  for (auto line : detail::text_lines(text)) {
    ++line_no;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) detail::parse_fail(source, line_no, "expected <repo>\\t<terms>");
    Bag bag{std::string(line.substr(0, tab)), {}};
    for (auto item : split_ws(line.substr(tab + 1))) {
      auto colon = item.rfind(':');
      std::uint64_t count = 0;
      if (colon == std::string_view::npos || colon == 0 || !parse_int(item.substr(colon + 1), count) || count == 0)
        detail::parse_fail(source, line_no, "malformed term:count '" + std::string(item) + "'");
      if (!bag.counts.emplace(std::string(item.substr(0, colon)), count).second)
        detail::parse_fail(source, line_no, "duplicate term '" + std::string(item.substr(0, colon)) + "'");
    }
    bags.push_back(std::move(bag));
  }
  return bags;
}

// ---- vocabulary ---------------------------------------------------------------

inline std::string format_vocabulary(const Vocabulary& vocab) {
  std::string out;
  for (const auto& t : vocab.terms) {
    out += t;
    out += '\n';
  }
  return out;
}

inline Vocabulary parse_vocabulary(std::string_view text, std::string_view source = "<vocab>") {
  Vocabulary vocab;
  std::size_t line_no = 0;
  for (auto line : detail::text_lines(text)) {
    ++line_no;
    if (line.empty() || line.find_first_of(" \t") != std::string_view::npos)
      detail::parse_fail(source, line_no, "malformed term '" + std::string(line) + "'");
    if (!vocab.terms.empty() && !(vocab.terms.back() < line))
      detail::parse_fail(source, line_no, "terms must be unique and sorted");
    vocab.terms.emplace_back(line);
  }
  return vocab;
}

// ---- corpus -------------------------------------------------------------------

inline std::string format_corpus(const SparseCorpus& corpus) {
  std::string out = std::to_string(corpus.num_docs()) + " " + std::to_string(corpus.num_terms) + " " +
                    std::to_string(corpus.nnz()) + "\n";
  for (const auto& doc : corpus.docs) {
    detail::check_repo_name(doc.repo);
    out += doc.repo;
    out += '\t';
    for (std::size_t i = 0; i < doc.terms.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(doc.terms[i].id);
      out += ':';
      out += std::to_string(doc.terms[i].count);
    }
    out += '\n';
  }
  return out;
}

inline SparseCorpus parse_corpus(std::string_view text, std::string_view source = "<corpus>") {
  auto lines = detail::text_lines(text);
  if (lines.empty()) detail::parse_fail(source, 1, "missing 'D W NNZ' header");
  auto header = split_ws(lines[0]);
  std::size_t num_docs = 0, num_terms = 0, nnz = 0;
  if (header.size() != 3 || !parse_int(header[0], num_docs) || !parse_int(header[1], num_terms) ||
      !parse_int(header[2], nnz))
    detail::parse_fail(source, 1, "malformed header, expected 'D W NNZ'");
  if (lines.size() - 1 != num_docs)
    detail::parse_fail(source, lines.size(),
                       "header declares " + std::to_string(num_docs) + " documents, found " +
                           std::to_string(lines.size() - 1));
  SparseCorpus corpus;
  corpus.num_terms = num_terms;
  corpus.docs.reserve(num_docs);
  std::size_t seen_nnz = 0;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto line = lines[li];
    std::size_t line_no = li + 1;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) detail::parse_fail(source, line_no, "expected <repo>\\t<id>:<count> ...");
    Document doc{std::string(line.substr(0, tab)), {}};
    for (auto item : split_ws(line.substr(tab + 1))) {
      auto colon = item.find(':');
      std::uint32_t id = 0;
      std::uint64_t count = 0;
      if (colon == std::string_view::npos || !parse_int(item.substr(0, colon), id) ||
          !parse_int(item.substr(colon + 1), count))
        detail::parse_fail(source, line_no, "malformed id:count '" + std::string(item) + "'");
      if (id >= num_terms)
        detail::parse_fail(source, line_no, "term id " + std::to_string(id) + " >= W = " + std::to_string(num_terms));
      if (count == 0) detail::parse_fail(source, line_no, "zero count for term id " + std::to_string(id));
      if (!doc.terms.empty() && doc.terms.back().id >= id)
        detail::parse_fail(source, line_no, "term ids must be strictly increasing");
      doc.terms.push_back({id, count});
    }
    if (doc.terms.empty()) detail::parse_fail(source, line_no, "document has no terms");
    seen_nnz += doc.terms.size();
    corpus.docs.push_back(std::move(doc));
  }
  if (seen_nnz != nnz)
    detail::parse_fail(source, 1, "header declares NNZ " + std::to_string(nnz) + ", found " + std::to_string(seen_nnz));
  return corpus;
}

inline void save_corpus(const std::filesystem::path& path, const SparseCorpus& corpus) {
  write_file_atomic(path, format_corpus(corpus));
}

inline SparseCorpus load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path), path.string());
}

}  // namespace srctopics
