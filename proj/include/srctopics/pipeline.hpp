#pragma once

// File-based pipeline stages. Each stage reads the previous stage's files from
// the output directory and writes its own, so any stage can be rerun alone.
//
//   extract   input tree -> repos.bags, repos.vocab, repos.corpus, name statistics
//   dedup     repos.bags -> signatures.wmh, duplicates.tsv, removed.txt,
//                           bins_histogram.tsv, dedup_stats.tsv, filtered.{bags,vocab,corpus}
//   train     corpus     -> model.artm, metrics.tsv (lda_metrics.tsv with the baseline)
//   embed     model      -> embeddings.tsv, topic_significance.tsv
//   report    embeddings -> topics_report.tsv, topic_<t>_repos.tsv
//
// train, embed and report use the filtered corpus when dedup has produced one.

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "srctopics/artm.hpp"
#include "srctopics/corpus.hpp"
#include "srctopics/embedreport.hpp"
#include "srctopics/lexing.hpp"
#include "srctopics/lshdedup.hpp"
#include "srctopics/naming.hpp"
#include "srctopics/util.hpp"
#include "srctopics/wminhash.hpp"

namespace srctopics {

namespace fs = std::filesystem;

struct RunConfig {
  fs::path input;
  fs::path output = "out";
  fs::path profiles;  // empty: built-in profiles
  std::uint32_t hash_size = 128;
  double lsh_threshold = 0.9;
  double pair_threshold = 0.8;
  std::uint64_t tf = 20;
  std::size_t stem_threshold = 6;
  std::uint32_t topics = 256;
  std::uint32_t iters_plain = 10;
  std::uint32_t iters_reg = 8;
  double tau_phi = 0.5;
  double tau_theta = 0.5;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::size_t top_n = 50;
  bool union_bins = false;
  bool lda = false;
  std::uint32_t lda_iters = 20;
  double lda_alpha = 0.01;
  double lda_beta = 0.01;
};

inline void validate(const RunConfig& c) {
  auto require = [](bool ok, const char* msg) {
    if (!ok) throw usage_error(msg);
  };
  require(c.hash_size >= 2, "hash size must be >= 2");
  require(c.lsh_threshold > 0.0 && c.lsh_threshold < 1.0, "lsh threshold must lie in (0, 1)");
  require(c.pair_threshold >= 0.0 && c.pair_threshold <= 1.0, "pair threshold must lie in [0, 1]");
  require(c.tf >= 1, "tf must be >= 1");
  require(c.stem_threshold >= 1, "stem threshold must be >= 1");
  require(c.topics >= 1, "topics must be >= 1");
  require(c.tau_phi >= 0.0 && c.tau_theta >= 0.0, "tau values must be >= 0");
  require(c.workers >= 1, "workers must be >= 1");
  require(c.top_n >= 1, "top-n must be >= 1");
  require(c.lda_alpha > 0.0 && c.lda_beta > 0.0, "LDA alpha and beta must be positive");
  require(!c.output.empty(), "output directory must be set");
}

struct Repository {
  std::string name;
  std::vector<SourceFile> files;  // paths relative to the repository root, sorted
};

// Every top-level subdirectory of `root` is one repository. Files directly
// under `root` are ignored.
inline std::vector<Repository> read_repositories(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw data_error("input directory not found: " + root.string());
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(root))
    if (entry.is_directory()) dirs.push_back(entry.path());
  if (dirs.empty()) throw data_error("input directory has no repository subdirectories: " + root.string());
  std::sort(dirs.begin(), dirs.end());

  std::vector<Repository> repos;
  for (const auto& dir : dirs) {
    Repository repo{dir.filename().string(), {}};
    detail::check_repo_name(repo.name);
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files)
      repo.files.push_back({fs::relative(f, dir).generic_string(), read_file(f)});
    repos.push_back(std::move(repo));
  }
  return repos;
}

inline ProfileRegistry load_registry(const RunConfig& c) {
  if (c.profiles.empty()) return builtin_profiles();
  return parse_profiles(read_file(c.profiles), c.profiles.string());
}

namespace detail {

inline void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw data_error("cannot create " + dir.string() + ": " + ec.message());
}

inline void require_file(const fs::path& p, const char* stage) {
  if (!fs::exists(p)) throw data_error("missing " + p.string() + " (run '" + stage + "' first)");
}

inline std::string key_value_tsv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string out = "key\tvalue\n";
  for (const auto& [k, v] : rows) out += k + "\t" + v + "\n";
  return out;
}

}  // namespace detail

// The corpus and vocabulary that training and reporting work on.
struct TrainingInputs {
  fs::path corpus;
  fs::path vocab;
};

inline TrainingInputs training_inputs(const fs::path& out) {
  if (fs::exists(out / "filtered.corpus")) return {out / "filtered.corpus", out / "filtered.vocab"};
  return {out / "repos.corpus", out / "repos.vocab"};
}

inline void cmd_extract(const RunConfig& c) {
  validate(c);
  const auto registry = load_registry(c);
  const auto repos = read_repositories(c.input);
  detail::ensure_dir(c.output);

  NamingOptions opts;
  opts.stem_threshold = c.stem_threshold;
  std::vector<RepoExtraction> results(repos.size());
  parallel_for(repos.size(), c.workers,
               [&](std::size_t i) { results[i] = extract_repo(repos[i].name, repos[i].files, registry, opts); });

  std::vector<Bag> bags;
  TermCounts raw_words;
  ExtractStats stats;
  for (auto& r : results) {
    for (const auto& [w, n] : r.raw_words) raw_words[w] += n;
    stats += r.stats;
    bags.push_back(std::move(r.bag));
  }
  const auto vocab = build_vocabulary(bags, c.tf);
  const auto corpus = index_corpus(bags, vocab);
  const auto ns = name_stats(bags, &raw_words);
  std::uint64_t distinct_terms = 0;
  for (const auto& [len, n] : ns.term_lengths) distinct_terms += n;

  const fs::path& o = c.output;
  write_file_atomic(o / "repos.bags", format_bags(bags));
  write_file_atomic(o / "repos.vocab", format_vocabulary(vocab));
  save_corpus(o / "repos.corpus", corpus);
  write_file_atomic(o / "name_lengths.tsv", histogram_tsv(ns.term_lengths, "length", "terms"));
  write_file_atomic(o / "stem_threshold.tsv", histogram_tsv(ns.vocab_by_threshold, "threshold", "vocabulary"));
  write_file_atomic(o / "term_frequency.tsv", histogram_tsv(ns.term_frequencies, "count", "terms"));
  write_file_atomic(o / "bag_sizes.tsv", histogram_tsv(ns.bag_sizes, "distinct_terms", "repositories"));
  write_file_atomic(o / "extract_stats.tsv",
                    detail::key_value_tsv({{"repositories", std::to_string(bags.size())},
                                           {"files_seen", std::to_string(stats.files_seen)},
                                           {"files_skipped", std::to_string(stats.files_skipped)},
                                           {"tokens", std::to_string(stats.tokens)},
                                           {"words", std::to_string(stats.words)},
                                           {"truncated_words", std::to_string(stats.truncated_words)},
                                           {"distinct_terms", std::to_string(distinct_terms)},
                                           {"vocabulary", std::to_string(vocab.size())},
                                           {"documents", std::to_string(corpus.num_docs())}}));
  // A fresh extraction invalidates any earlier dedup output.
  for (const char* stale : {"filtered.bags", "filtered.vocab", "filtered.corpus"}) fs::remove(o / stale);
}

inline void cmd_dedup(const RunConfig& c) {
  validate(c);
  const fs::path& o = c.output;
  detail::require_file(o / "repos.bags", "extract");
  const auto bags = parse_bags(read_file(o / "repos.bags"), (o / "repos.bags").string());

  DedupOptions opts;
  opts.hash_size = c.hash_size;
  opts.lsh_threshold = c.lsh_threshold;
  opts.pair_threshold = c.pair_threshold;
  opts.seed = c.seed;
  opts.semantics = c.union_bins ? SetSemantics::union_of_bins : SetSemantics::intersection;
  opts.workers = c.workers;
  const auto outcome = detect_duplicates(bags, opts);

  const auto vocab = build_vocabulary(outcome.deduped.kept, c.tf);
  const auto corpus = index_corpus(outcome.deduped.kept, vocab);

  std::string removed;
  for (const auto& r : outcome.deduped.removed) removed += r + "\n";
  const auto& ex = outcome.extraction;
  write_file_atomic(o / "signatures.wmh", encode_signatures(outcome.signatures));
  write_file_atomic(o / "duplicates.tsv", format_duplicate_sets(ex.sets));
  write_file_atomic(o / "removed.txt", removed);
  write_file_atomic(o / "bins_histogram.tsv", histogram_tsv(ex.bin_sizes, "bin_size", "bins"));
  write_file_atomic(o / "dedup_stats.tsv",
                    detail::key_value_tsv({{"hash_size", std::to_string(c.hash_size)},
                                           {"threshold", format_double(c.lsh_threshold)},
                                           {"tables", std::to_string(outcome.plan.bands)},
                                           {"rows", std::to_string(outcome.plan.rows)},
                                           {"signed_repositories", std::to_string(outcome.signatures.entries.size())},
                                           {"nonsingleton_bins", std::to_string(ex.nonsingleton_bins)},
                                           {"filtered_repositories", std::to_string(ex.filtered_repos)},
                                           {"final_repositories", std::to_string(ex.final_repos)},
                                           {"duplicate_sets", std::to_string(ex.sets.size())},
                                           {"removed_repositories", std::to_string(outcome.deduped.removed.size())},
                                           {"kept_repositories", std::to_string(outcome.deduped.kept.size())},
                                           {"vocabulary", std::to_string(vocab.size())},
                                           {"documents", std::to_string(corpus.num_docs())}}));
  write_file_atomic(o / "filtered.bags", format_bags(outcome.deduped.kept));
  write_file_atomic(o / "filtered.vocab", format_vocabulary(vocab));
  // Written last: its presence tells later stages the filtered set is complete.
  save_corpus(o / "filtered.corpus", corpus);
}

inline TrainConfig train_config(const RunConfig& c) {
  TrainConfig t;
  t.num_topics = c.topics;
  t.iters_plain = c.iters_plain;
  t.iters_reg = c.iters_reg;
  t.tau_phi = c.tau_phi;
  t.tau_theta = c.tau_theta;
  t.seed = c.seed;
  t.workers = c.workers;
  return t;
}

inline void cmd_train(const RunConfig& c) {
  validate(c);
  const auto in = training_inputs(c.output);
  detail::require_file(in.corpus, "extract");
  const auto corpus = load_corpus(in.corpus);
  const auto result = train(corpus, train_config(c));
  write_file_atomic(c.output / "model.artm", format_model(result.model));
  write_file_atomic(c.output / "metrics.tsv", format_metrics(result.metrics));
  if (c.lda) {
    auto cfg = train_config(c);
    cfg.iters_plain = c.lda_iters;
    cfg.iters_reg = 0;
    const auto lda = train_lda_baseline(corpus, cfg, c.lda_alpha, c.lda_beta);
    write_file_atomic(c.output / "lda_metrics.tsv", format_metrics(lda.metrics));
  }
}

inline TopicModel load_model(const fs::path& p) {
  detail::require_file(p, "train");
  return parse_model(read_file(p), p.string());
}

inline void cmd_embed(const RunConfig& c) {
  validate(c);
  const auto in = training_inputs(c.output);
  detail::require_file(in.corpus, "extract");
  const auto corpus = load_corpus(in.corpus);
  const auto model = load_model(c.output / "model.artm");
  if (model.num_terms() != corpus.num_terms || model.num_docs() != corpus.num_docs())
    throw data_error("model.artm does not match " + in.corpus.string() + " (rerun 'train')");
  const auto e = normalize_rows(embed(corpus, model));
  write_file_atomic(c.output / "embeddings.tsv", format_embedding(e));
  write_file_atomic(c.output / "topic_significance.tsv", format_significance(topic_significance(e)));
}

inline void cmd_report(const RunConfig& c) {
  validate(c);
  const auto in = training_inputs(c.output);
  detail::require_file(in.vocab, "extract");
  const auto vocab = parse_vocabulary(read_file(in.vocab), in.vocab.string());
  const auto model = load_model(c.output / "model.artm");
  if (vocab.size() != model.num_terms()) throw data_error("model.artm does not match " + in.vocab.string());
  const fs::path emb_path = c.output / "embeddings.tsv";
  detail::require_file(emb_path, "embed");
  const auto e = parse_embedding(read_file(emb_path), emb_path.string());
  if (e.values.cols() != model.num_topics()) throw data_error("embeddings.tsv does not match model.artm");
  const auto sig = topic_significance(e);
  write_file_atomic(c.output / "topics_report.tsv", format_topics_report(model, vocab, sig, c.top_n));
  for (std::size_t t = 0; t < model.num_topics(); ++t)
    write_file_atomic(c.output / ("topic_" + std::to_string(t) + "_repos.tsv"),
                      format_topic_repos(model, vocab, e, t, c.top_n));
}

inline void cmd_pipeline(const RunConfig& c) {
  cmd_extract(c);
  cmd_dedup(c);
  cmd_train(c);
  cmd_embed(c);
  cmd_report(c);
}

}  // namespace srctopics
