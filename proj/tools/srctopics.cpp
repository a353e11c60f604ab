// srctopics: command-line front end for the pipeline stages.
//
// Exit codes: 0 success, 1 usage error, 2 data or I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <string>

#include "srctopics/pipeline.hpp"

namespace {

void add_options(CLI::App& app, srctopics::RunConfig& c) {
  app.add_option("-i,--input", c.input, "Input directory; each top-level subdirectory is one repository");
  app.add_option("-o,--output", c.output, "Output directory for stage files")->capture_default_str();
  app.add_option("--profiles", c.profiles, "Language profile file (default: built-in profiles)");
  app.add_option("--hash-size", c.hash_size, "Weighted MinHash samples per signature (K)")->capture_default_str();
  app.add_option("--lsh-threshold", c.lsh_threshold, "Similarity threshold the band plan is tuned for")
      ->capture_default_str();
  app.add_option("--pair-threshold", c.pair_threshold, "Exact similarity needed to keep a two-member set")
      ->capture_default_str();
  app.add_option("--tf", c.tf, "Minimum corpus-wide count for a term to enter the vocabulary")->capture_default_str();
  app.add_option("--stem-threshold", c.stem_threshold, "Stem only words with at least this many letters")
      ->capture_default_str();
  app.add_option("--topics", c.topics, "Number of topics")->capture_default_str();
  app.add_option("--iters-plain", c.iters_plain, "Unregularized EM passes")->capture_default_str();
  app.add_option("--iters-reg", c.iters_reg, "Regularized EM passes after the plain ones")->capture_default_str();
  app.add_option("--tau-phi", c.tau_phi, "Phi sparsing strength")->capture_default_str();
  app.add_option("--tau-theta", c.tau_theta, "Theta sparsing strength")->capture_default_str();
  app.add_option("--seed", c.seed, "Seed for every random choice in the run")->capture_default_str();
  app.add_option("-j,--workers", c.workers, "Worker threads")->capture_default_str();
  app.add_option("--top-n", c.top_n, "Words and repositories listed per topic")->capture_default_str();
  app.add_flag("--union-bins", c.union_bins, "Group repositories sharing any band instead of all bands");
  app.add_flag("--lda", c.lda, "Also train the smoothed LDA-style baseline (train stage)");
  app.add_option("--lda-iters", c.lda_iters, "Baseline EM passes")->capture_default_str();
  app.add_option("--lda-alpha", c.lda_alpha, "Baseline theta smoothing")->capture_default_str();
  app.add_option("--lda-beta", c.lda_beta, "Baseline phi smoothing")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topic modeling of source code repositories by their identifier names"};
  app.name("srctopics");
  app.set_config("--config", "", "Read options from a file of 'key = value' lines; flags override it");
  app.require_subcommand(1);

  srctopics::RunConfig config;
  add_options(app, config);

  std::function<void(const srctopics::RunConfig&)> stage;
  auto sub = [&](const char* name, const char* help, void (*fn)(const srctopics::RunConfig&)) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&stage, fn] { stage = fn; });
  };
  sub("extract", "Tokenize, split and stem names into per-repository bags and the corpus", srctopics::cmd_extract);
  sub("dedup", "Find fuzzy-duplicate repositories and write the filtered corpus", srctopics::cmd_dedup);
  sub("train", "Train the topic model", srctopics::cmd_train);
  sub("embed", "Project repositories into topic space", srctopics::cmd_embed);
  sub("report", "Write ranked words and repositories per topic", srctopics::cmd_report);
  sub("pipeline", "Run extract, dedup, train, embed and report in order", srctopics::cmd_pipeline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (config.input.empty() && (app.got_subcommand("extract") || app.got_subcommand("pipeline")))
      throw srctopics::usage_error("--input is required for extract and pipeline");
    stage(config);
  } catch (const srctopics::usage_error& e) {
    std::cerr << "srctopics: " << e.what() << "\n";
    return 1;
  } catch (const srctopics::data_error& e) {
    std::cerr << "srctopics: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "srctopics: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "srctopics: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
