#pragma once

// Repository embeddings in topic space and the ranked topic reports.
//
// R_t = R_n * phi, where R_n holds the raw term counts of each repository, and
// every nonzero row is then scaled to unit L2 norm. Topic significance is the
// column sum of the normalized matrix.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "srctopics/artm.hpp"
#include "srctopics/corpus.hpp"
#include "srctopics/util.hpp"

namespace srctopics {

struct RepoEmbedding {
  std::vector<std::string> repos;  // row labels
  Matrix values;                   // |D| x |T|

  friend bool operator==(const RepoEmbedding&, const RepoEmbedding&) = default;
};

inline RepoEmbedding embed(const SparseCorpus& corpus, const TopicModel& model) {
  if (corpus.num_terms != model.num_terms())
    throw std::invalid_argument("corpus vocabulary size " + std::to_string(corpus.num_terms) +
                                " does not match the model's " + std::to_string(model.num_terms()));
  const std::size_t T = model.num_topics();
  RepoEmbedding e{{}, Matrix(corpus.num_docs(), T)};
  e.repos.reserve(corpus.num_docs());
  for (std::size_t d = 0; d < corpus.num_docs(); ++d) {
    e.repos.push_back(corpus.docs[d].repo);
    double* row = e.values.row(d);
    for (const auto& [w, count] : corpus.docs[d].terms) {
      const double* phi_w = model.phi.row(w);
      const double c = static_cast<double>(count);
      for (std::size_t t = 0; t < T; ++t) row[t] += c * phi_w[t];
    }
  }
  return e;
}

inline RepoEmbedding normalize_rows(RepoEmbedding e) {
  for (std::size_t d = 0; d < e.values.rows(); ++d) {
    double* row = e.values.row(d);
    double sq = 0.0;
    for (std::size_t t = 0; t < e.values.cols(); ++t) sq += row[t] * row[t];
    if (sq == 0.0) continue;
    const double norm = std::sqrt(sq);
    for (std::size_t t = 0; t < e.values.cols(); ++t) row[t] /= norm;
  }
  return e;
}

inline std::vector<double> topic_significance(const RepoEmbedding& normalized) {
  std::vector<double> sig(normalized.values.cols(), 0.0);
  for (std::size_t d = 0; d < normalized.values.rows(); ++d) {
    const double* row = normalized.values.row(d);
    for (std::size_t t = 0; t < sig.size(); ++t) sig[t] += row[t];
  }
  return sig;
}

using Ranked = std::vector<std::pair<std::string, double>>;

namespace detail {

// Nonzero entries only, descending by value, ties by label.
inline Ranked rank(Ranked items, std::size_t n) {
  std::erase_if(items, [](const auto& p) { return !(p.second > 0.0); });
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (items.size() > n) items.resize(n);
  return items;
}

inline void check_rank_args(std::size_t t, std::size_t topics, std::size_t n) {
  if (t >= topics) throw std::out_of_range("topic " + std::to_string(t) + " out of range");
  if (n < 1) throw usage_error("top-N must be >= 1");
}

}  // namespace detail

inline Ranked top_words(const TopicModel& model, const Vocabulary& vocab, std::size_t t, std::size_t n) {
  detail::check_rank_args(t, model.num_topics(), n);
  if (vocab.size() != model.num_terms()) throw std::invalid_argument("vocabulary does not match the model");
  Ranked items;
  for (std::size_t w = 0; w < model.num_terms(); ++w)
    if (model.phi(w, t) > 0.0) items.emplace_back(vocab.terms[w], model.phi(w, t));
  return detail::rank(std::move(items), n);
}

inline Ranked top_repos(const RepoEmbedding& e, std::size_t t, std::size_t n) {
  detail::check_rank_args(t, e.values.cols(), n);
  Ranked items;
  for (std::size_t d = 0; d < e.values.rows(); ++d)
    if (e.values(d, t) > 0.0) items.emplace_back(e.repos[d], e.values(d, t));
  return detail::rank(std::move(items), n);
}

// ---- output files ---------------------------------------------------------------

inline std::string format_embedding(const RepoEmbedding& e) {
  std::string out = "repo";
  for (std::size_t t = 0; t < e.values.cols(); ++t) out += "\tt" + std::to_string(t);
  out += '\n';
  for (std::size_t d = 0; d < e.values.rows(); ++d) {
    out += e.repos[d];
    for (std::size_t t = 0; t < e.values.cols(); ++t) out += "\t" + format_double(e.values(d, t));
    out += '\n';
  }
  return out;
}

inline RepoEmbedding parse_embedding(std::string_view text, std::string_view source = "<embeddings>") {
  auto lines = detail::text_lines(text);
  if (lines.empty()) detail::parse_fail(source, 1, "missing header");
  auto header = split_char(lines[0], '\t');
  if (header.empty() || header[0] != "repo") detail::parse_fail(source, 1, "header must start with 'repo'");
  const std::size_t T = header.size() - 1;
  RepoEmbedding e{{}, Matrix(lines.size() - 1, T)};
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto fields = split_char(lines[li], '\t');
    if (fields.size() != T + 1 || fields[0].empty()) detail::parse_fail(source, li + 1, "expected repo and " + std::to_string(T) + " values");
    e.repos.emplace_back(fields[0]);
    for (std::size_t t = 0; t < T; ++t)
      if (!parse_double(fields[t + 1], e.values(li - 1, t)))
        detail::parse_fail(source, li + 1, "bad value '" + std::string(fields[t + 1]) + "'");
  }
  return e;
}

// Topics by decreasing significance, ties by id.
inline std::vector<std::size_t> topics_by_significance(const std::vector<double>& sig) {
  std::vector<std::size_t> order(sig.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] > sig[b]; });
  return order;
}

inline std::string format_significance(const std::vector<double>& sig) {
  std::string out = "topic\tsignificance\n";
  for (auto t : topics_by_significance(sig)) out += std::to_string(t) + "\t" + format_fixed(sig[t], 6) + "\n";
  return out;
}

// One line per topic in significance order: id, significance, word:weight list.
inline std::string format_topics_report(const TopicModel& model, const Vocabulary& vocab,
                                        const std::vector<double>& sig, std::size_t n) {
  std::string out = "topic\tsignificance\twords\n";
  for (auto t : topics_by_significance(sig)) {
    out += std::to_string(t) + "\t" + format_fixed(sig[t], 6) + "\t";
    bool first = true;
    for (const auto& [word, weight] : top_words(model, vocab, t, n)) {
      if (!first) out += ' ';
      first = false;
      out += word + ":" + format_fixed(weight, 6);
    }
    out += '\n';
  }
  return out;
}

// Two ranked columns side by side: word, weight, repository, relevance. The
// shorter column is padded with empty cells.
inline std::string format_topic_repos(const TopicModel& model, const Vocabulary& vocab, const RepoEmbedding& e,
                                      std::size_t t, std::size_t n) {
  auto words = top_words(model, vocab, t, n);
  auto repos = top_repos(e, t, n);
  std::string out = "rank\tword\tweight\trepository\trelevance\n";
  for (std::size_t i = 0; i < std::max(words.size(), repos.size()); ++i) {
    out += std::to_string(i + 1) + "\t";
    out += i < words.size() ? words[i].first + "\t" + format_fixed(words[i].second, 6) : std::string("\t");
    out += "\t";
    out += i < repos.size() ? repos[i].first + "\t" + format_fixed(repos[i].second, 6) : std::string("\t");
    out += '\n';
  }
  return out;
}

}  // namespace srctopics
