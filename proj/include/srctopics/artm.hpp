#pragma once

// EM training of a topic model p(w|d) = sum_t phi_wt theta_td with optional
// additive sparsing regularization, and an LDA-style smoothed baseline.
//
// E-step: for every observed (d, w), p(t|d,w) is proportional to
// phi_wt * theta_td; counts n_dw * p(t|d,w) accumulate into n_wt and n_td.
// M-step variants:
//   plain   phi_wt = n_wt / n_t,                          theta_td = n_td / n_d
//   sparse  phi_wt ~ max(n_wt - tau_phi * n_t / |W|, 0),   theta_td ~ max(n_td - tau_theta * n_d / |T|, 0)
//   smooth  phi_wt ~ n_wt + beta,                          theta_td ~ n_td + alpha
// where ~ means "then normalize the column". A column whose entries are all
// zero stays zero and is called inactive.
//
// The E-step splits documents into a fixed number of blocks and sums block
// partials in block order, so results are bitwise identical for any worker
// count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "srctopics/corpus.hpp"
#include "srctopics/random.hpp"
#include "srctopics/util.hpp"

namespace srctopics {

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double* row(std::size_t r) { return data_.data() + r * cols_; }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  double column_sum(std::size_t c) const {
    double s = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
    return s;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct TopicModel {
  Matrix phi;    // |W| x |T|, column t is p(w|t)
  Matrix theta;  // |T| x |D|, column d is p(t|d)

  std::size_t num_terms() const { return phi.rows(); }
  std::size_t num_topics() const { return phi.cols(); }
  std::size_t num_docs() const { return theta.cols(); }

  friend bool operator==(const TopicModel&, const TopicModel&) = default;
};

struct TrainConfig {
  std::uint32_t num_topics = 256;
  std::uint32_t iters_plain = 10;
  std::uint32_t iters_reg = 8;
  double tau_phi = 0.5;
  double tau_theta = 0.5;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct IterationMetrics {
  std::uint32_t iteration = 0;
  bool regularized = false;
  double perplexity = 0.0;
  double log_likelihood = 0.0;
  double phi_sparsity = 0.0;
  double theta_sparsity = 0.0;
};

struct TrainMetrics {
  std::vector<IterationMetrics> iterations;
};

struct TrainResult {
  TopicModel model;
  TrainMetrics metrics;
};

enum class MStepKind { plain, sparse, smooth };

struct MStepParams {
  MStepKind kind = MStepKind::plain;
  double tau_phi = 0.0;
  double tau_theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

inline constexpr std::size_t kEmBlocks = 8;
inline constexpr double kProbabilityFloor = 1e-37;

inline void check_dimensions(const SparseCorpus& corpus, const TopicModel& model) {
  if (model.num_terms() != corpus.num_terms || model.num_docs() != corpus.num_docs() ||
      model.theta.rows() != model.num_topics())
    throw std::invalid_argument("model dimensions do not match the corpus");
}

inline TopicModel init_model(const SparseCorpus& corpus, const TrainConfig& config) {
  if (config.num_topics < 1) throw usage_error("number of topics must be >= 1");
  if (corpus.num_docs() == 0 || corpus.num_terms == 0) throw data_error("cannot train on an empty corpus");
  const std::size_t W = corpus.num_terms, T = config.num_topics, D = corpus.num_docs();
  TopicModel model{Matrix(W, T), Matrix(T, D, 1.0 / static_cast<double>(T))};
  const std::uint64_t key = hash_key(config.seed, 0x41524d);
  for (std::size_t w = 0; w < W; ++w)
    for (std::size_t t = 0; t < T; ++t) model.phi(w, t) = to_unit_open_closed(hash_key(key, w, t));
  for (std::size_t t = 0; t < T; ++t) {
    double s = model.phi.column_sum(t);
    for (std::size_t w = 0; w < W; ++w) model.phi(w, t) /= s;
  }
  return model;
}

namespace detail {

inline std::size_t block_begin(std::size_t block, std::size_t blocks, std::size_t n) { return block * n / blocks; }

// Normalizes every column of `m` to sum 1; all-zero columns stay zero.
inline void normalize_columns(Matrix& m) {
  std::vector<double> sums(m.cols(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const double* row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) sums[c] += row[c];
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double* row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = sums[c] > 0.0 ? row[c] / sums[c] : 0.0;
  }
}

// Applies the M-step transform to a count matrix in place, given per-column
// count totals and the mean divisor (|W| for phi, |T| for theta).
inline void transform_counts(Matrix& counts, MStepKind kind, double tau, double smooth) {
  const std::size_t rows = counts.rows(), cols = counts.cols();
  if (kind == MStepKind::sparse) {
    std::vector<double> offset(cols, 0.0);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) offset[c] += counts(r, c);
    for (auto& o : offset) o = tau * o / static_cast<double>(rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) counts(r, c) = std::max(counts(r, c) - offset[c], 0.0);
  } else if (kind == MStepKind::smooth) {
    for (auto& v : counts.data()) v += smooth;
  }
  normalize_columns(counts);
}

}  // namespace detail

// One full pass: E-step over all documents followed by the chosen M-step.
inline void em_step(const SparseCorpus& corpus, TopicModel& model, const MStepParams& params, unsigned workers = 1) {
  check_dimensions(corpus, model);
  const std::size_t W = model.num_terms(), T = model.num_topics(), D = model.num_docs();
  const std::size_t blocks = std::min<std::size_t>(kEmBlocks, D);

  std::vector<Matrix> partial_nwt(blocks);
  Matrix ndt(D, T);  // transposed n_td, one row per document
  parallel_for(blocks, workers, [&](std::size_t b) {
    Matrix nwt(W, T);
    std::vector<double> theta_d(T), p(T);
    for (std::size_t d = detail::block_begin(b, blocks, D); d < detail::block_begin(b + 1, blocks, D); ++d) {
      for (std::size_t t = 0; t < T; ++t) theta_d[t] = model.theta(t, d);
      double* nd = ndt.row(d);
      for (const auto& [w, count] : corpus.docs[d].terms) {
        const double* phi_w = model.phi.row(w);
        double z = 0.0;
        for (std::size_t t = 0; t < T; ++t) {
          p[t] = phi_w[t] * theta_d[t];
          z += p[t];
        }
        if (!(z > 0.0)) continue;
        const double scale = static_cast<double>(count) / z;
        double* acc = nwt.row(w);
        for (std::size_t t = 0; t < T; ++t) {
          const double v = p[t] * scale;
          acc[t] += v;
          nd[t] += v;
        }
      }
    }
    partial_nwt[b] = std::move(nwt);
  });

  Matrix nwt(W, T);
  for (const auto& part : partial_nwt)
    for (std::size_t i = 0; i < nwt.data().size(); ++i) nwt.data()[i] += part.data()[i];

  Matrix ntd(T, D);
  for (std::size_t d = 0; d < D; ++d)
    for (std::size_t t = 0; t < T; ++t) ntd(t, d) = ndt(d, t);

  detail::transform_counts(nwt, params.kind, params.tau_phi, params.beta);
  detail::transform_counts(ntd, params.kind, params.tau_theta, params.alpha);
  model.phi = std::move(nwt);
  model.theta = std::move(ntd);
}

inline void em_iteration(const SparseCorpus& corpus, TopicModel& model, bool regularize, const TrainConfig& config) {
  MStepParams params;
  if (regularize) {
    params.kind = MStepKind::sparse;
    params.tau_phi = config.tau_phi;
    params.tau_theta = config.tau_theta;
  }
  em_step(corpus, model, params, config.workers);
}

// sum_d sum_w n_dw ln p(w|d), with p(w|d) floored at 1e-37.
inline double log_likelihood(const TopicModel& model, const SparseCorpus& corpus, unsigned workers = 1) {
  check_dimensions(corpus, model);
  const std::size_t T = model.num_topics(), D = model.num_docs();
  const std::size_t blocks = std::min<std::size_t>(kEmBlocks, D);
  std::vector<double> partial(blocks, 0.0);
  parallel_for(blocks, workers, [&](std::size_t b) {
    double sum = 0.0;
    for (std::size_t d = detail::block_begin(b, blocks, D); d < detail::block_begin(b + 1, blocks, D); ++d) {
      for (const auto& [w, count] : corpus.docs[d].terms) {
        const double* phi_w = model.phi.row(w);
        double p = 0.0;
        for (std::size_t t = 0; t < T; ++t) p += phi_w[t] * model.theta(t, d);
        sum += static_cast<double>(count) * std::log(std::max(p, kProbabilityFloor));
      }
    }
    partial[b] = sum;
  });
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

inline double perplexity(const TopicModel& model, const SparseCorpus& corpus, unsigned workers = 1) {
  const auto n = static_cast<double>(corpus.total_tokens());
  if (n == 0.0) throw data_error("perplexity of an empty corpus");
  return std::exp(-log_likelihood(model, corpus, workers) / n);
}

// Fraction of entries that are exactly zero.
inline double sparsity(const Matrix& m) {
  if (m.data().empty()) return 0.0;
  std::size_t zeros = 0;
  for (double v : m.data()) zeros += v == 0.0;
  return static_cast<double>(zeros) / static_cast<double>(m.data().size());
}

namespace detail {

inline IterationMetrics measure(const TopicModel& model, const SparseCorpus& corpus, std::uint32_t iteration,
                                bool regularized, unsigned workers) {
  IterationMetrics m;
  m.iteration = iteration;
  m.regularized = regularized;
  m.log_likelihood = log_likelihood(model, corpus, workers);
  m.perplexity = std::exp(-m.log_likelihood / static_cast<double>(corpus.total_tokens()));
  m.phi_sparsity = sparsity(model.phi);
  m.theta_sparsity = sparsity(model.theta);
  return m;
}

}  // namespace detail

// iters_plain unregularized passes, then iters_reg passes with the sparsing
// M-step. One metrics row per pass.
inline TrainResult train(const SparseCorpus& corpus, const TrainConfig& config) {
  if (config.tau_phi < 0.0 || config.tau_theta < 0.0) throw usage_error("regularization weights must be >= 0");
  TrainResult result{init_model(corpus, config), {}};
  const std::uint32_t total = config.iters_plain + config.iters_reg;
  for (std::uint32_t i = 0; i < total; ++i) {
    const bool regularize = i >= config.iters_plain;
    em_iteration(corpus, result.model, regularize, config);
    result.metrics.iterations.push_back(detail::measure(result.model, corpus, i + 1, regularize, config.workers));
  }
  return result;
}

// Same schedule length as train(), every pass using the smoothing M-step.
inline TrainResult train_lda_baseline(const SparseCorpus& corpus, const TrainConfig& config, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw usage_error("LDA smoothing parameters must be positive");
  TrainResult result{init_model(corpus, config), {}};
  const std::uint32_t total = config.iters_plain + config.iters_reg;
  MStepParams params{MStepKind::smooth, 0.0, 0.0, alpha, beta};
  for (std::uint32_t i = 0; i < total; ++i) {
    em_step(corpus, result.model, params, config.workers);
    result.metrics.iterations.push_back(detail::measure(result.model, corpus, i + 1, false, config.workers));
  }
  return result;
}

// ---- persistence ----------------------------------------------------------------
//
//   ARTM1 <W> <T>
//   <w> <t> <phi>      for every phi entry > 0
//   THETA <D>
//   <t> <d> <theta>    for every theta entry > 0

inline std::string format_model(const TopicModel& model) {
  std::string out = "ARTM1 " + std::to_string(model.num_terms()) + " " + std::to_string(model.num_topics()) + "\n";
  for (std::size_t w = 0; w < model.num_terms(); ++w)
    for (std::size_t t = 0; t < model.num_topics(); ++t)
      if (model.phi(w, t) > 0.0)
        out += std::to_string(w) + " " + std::to_string(t) + " " + format_double(model.phi(w, t)) + "\n";
  out += "THETA " + std::to_string(model.num_docs()) + "\n";
  for (std::size_t t = 0; t < model.num_topics(); ++t)
    for (std::size_t d = 0; d < model.num_docs(); ++d)
      if (model.theta(t, d) > 0.0)
        out += std::to_string(t) + " " + std::to_string(d) + " " + format_double(model.theta(t, d)) + "\n";
  return out;
}

inline TopicModel parse_model(std::string_view text, std::string_view source = "<model>") {
  auto lines = detail::text_lines(text);
  std::size_t W = 0, T = 0, D = 0;
  if (lines.empty()) detail::parse_fail(source, 1, "missing 'ARTM1 W T' header");
  auto header = split_ws(lines[0]);
  if (header.size() != 3 || header[0] != "ARTM1" || !parse_int(header[1], W) || !parse_int(header[2], T))
    detail::parse_fail(source, 1, "malformed header, expected 'ARTM1 W T'");
  TopicModel model{Matrix(W, T), Matrix()};
  bool in_theta = false;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto fields = split_ws(lines[li]);
    if (fields.size() == 2 && fields[0] == "THETA") {
      if (in_theta || !parse_int(fields[1], D)) detail::parse_fail(source, li + 1, "malformed THETA separator");
      in_theta = true;
      model.theta = Matrix(T, D);
      continue;
    }
    std::size_t a = 0, b = 0;
    double v = 0.0;
    if (fields.size() != 3 || !parse_int(fields[0], a) || !parse_int(fields[1], b) || !parse_double(fields[2], v) ||
        !(v > 0.0))
      detail::parse_fail(source, li + 1, "expected '<row> <col> <positive value>'");
    if (!in_theta) {
      if (a >= W || b >= T) detail::parse_fail(source, li + 1, "phi index out of range");
      model.phi(a, b) = v;
    } else {
      if (a >= T || b >= D) detail::parse_fail(source, li + 1, "theta index out of range");
      model.theta(a, b) = v;
    }
  }
  if (!in_theta) detail::parse_fail(source, lines.size(), "missing THETA section");
  return model;
}

inline std::string format_metrics(const TrainMetrics& metrics) {
  std::string out = "iteration\tregularized\tperplexity\tlog_likelihood\tphi_sparsity\ttheta_sparsity\n";
  for (const auto& m : metrics.iterations) {
    out += std::to_string(m.iteration) + "\t" + (m.regularized ? "1" : "0") + "\t" + format_double(m.perplexity) +
           "\t" + format_double(m.log_likelihood) + "\t" + format_double(m.phi_sparsity) + "\t" +
           format_double(m.theta_sparsity) + "\n";
  }
  return out;
}

}  // namespace srctopics
