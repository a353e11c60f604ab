#pragma once

// Weighted Jaccard similarity and Ioffe's consistent weighted sampling.
//
// For sample k and feature d with weight S_d > 0 the sampler draws
// r, c ~ Gamma(2, 1) and beta ~ U(0, 1], then
//
//   t = floor(ln S_d / r + beta)
//   a = c / (exp(r (t - beta)) * exp(r))
//
// and keeps the feature with the smallest a together with its t. Two
// documents agree on a sample with probability equal to their weighted
// Jaccard similarity. The comparison is done on ln a, which orders samples
// identically and cannot overflow.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "srctopics/corpus.hpp"
#include "srctopics/random.hpp"
#include "srctopics/util.hpp"

namespace srctopics {

// Gamma(2, 1) sample from two uniforms in (0, 1].
inline double gamma21(double u1, double u2) {
  if (!(u1 > 0.0 && u1 <= 1.0 && u2 > 0.0 && u2 <= 1.0))
    throw std::domain_error("gamma21: uniforms must lie in (0, 1]");
  return -std::log(u1 * u2);
}

// Sum of minima over sum of maxima across the key union; 0 when both inputs
// are empty. Inputs are ordered associative containers or sorted sequences of
// (key, weight) pairs.
template <class Range>
double exact_weighted_jaccard(const Range& a, const Range& b) {
  double num = 0.0, den = 0.0;
  auto ia = std::begin(a), ea = std::end(a);
  auto ib = std::begin(b), eb = std::end(b);
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      den += static_cast<double>(ia->second);
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      den += static_cast<double>(ib->second);
      ++ib;
    } else {
      double wa = static_cast<double>(ia->second), wb = static_cast<double>(ib->second);
      num += std::min(wa, wb);
      den += std::max(wa, wb);
      ++ia;
      ++ib;
    }
  }
  return den > 0.0 ? num / den : 0.0;
}

inline double exact_weighted_jaccard(const Document& a, const Document& b) {
  auto pairs = [](const Document& d) {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> v;
    v.reserve(d.terms.size());
    for (const auto& tc : d.terms) v.emplace_back(tc.id, tc.count);
    return v;
  };
  return exact_weighted_jaccard(pairs(a), pairs(b));
}

struct WeightedFeature {
  std::uint32_t id;
  double weight;
};

struct CwsParams {
  double r;
  double c;
  double beta;
};

struct WmhSample {
  std::uint32_t feature;
  std::int32_t t;

  friend bool operator==(const WmhSample&, const WmhSample&) = default;
};

struct WmhSignature {
  std::uint64_t seed = 0;
  std::vector<WmhSample> samples;

  std::size_t k() const { return samples.size(); }
  friend bool operator==(const WmhSignature&, const WmhSignature&) = default;
};

// Sampling parameters are derived on demand from (seed, feature, sample), so
// they are identical for every document regardless of vocabulary size or
// query order.
class WmhGenerator {
 public:
  WmhGenerator(std::uint64_t seed, std::uint32_t k) : seed_(seed), k_(k) {
    if (k == 0) throw usage_error("hash size K must be positive");
  }

  std::uint64_t seed() const { return seed_; }
  std::uint32_t k() const { return k_; }

  CwsParams params(std::uint32_t feature, std::uint32_t sample) const {
    CwsParams p{};
    std::uint64_t stream = 0;
    do {
      p.r = gamma21(uniform(feature, sample, stream), uniform(feature, sample, stream + 1));
      stream += 2;
    } while (p.r <= 0.0);
    do {
      p.c = gamma21(uniform(feature, sample, stream), uniform(feature, sample, stream + 1));
      stream += 2;
    } while (p.c <= 0.0);
    p.beta = uniform(feature, sample, stream);
    return p;
  }

  // Signature of a document given as positive feature weights. Features may
  // come in any order; ties on the sample value go to the smaller feature id.
  WmhSignature signature(std::span<const WeightedFeature> doc) const {
    if (doc.empty()) throw data_error("empty document");
    std::vector<double> best(k_, std::numeric_limits<double>::infinity());
    WmhSignature sig{seed_, std::vector<WmhSample>(k_, WmhSample{0, 0})};
    std::vector<bool> filled(k_, false);
    for (const auto& f : doc) {
      if (!(f.weight > 0.0)) throw data_error("feature weights must be positive");
      const double log_weight = std::log(f.weight);
      for (std::uint32_t s = 0; s < k_; ++s) {
        const auto p = params(f.id, s);
        const double t_real = std::floor(log_weight / p.r + p.beta);
        const double t_clamped = std::clamp(t_real, static_cast<double>(std::numeric_limits<std::int32_t>::min()),
                                            static_cast<double>(std::numeric_limits<std::int32_t>::max()));
        const double log_a = std::log(p.c) - p.r * (t_clamped - p.beta) - p.r;
        if (!filled[s] || log_a < best[s] || (log_a == best[s] && f.id < sig.samples[s].feature)) {
          filled[s] = true;
          best[s] = log_a;
          sig.samples[s] = WmhSample{f.id, static_cast<std::int32_t>(t_clamped)};
        }
      }
    }
    return sig;
  }

  WmhSignature signature(const Document& doc) const {
    std::vector<WeightedFeature> features;
    features.reserve(doc.terms.size());
    for (const auto& tc : doc.terms) features.push_back({tc.id, static_cast<double>(tc.count)});
    return signature(features);
  }

 private:
  double uniform(std::uint32_t feature, std::uint32_t sample, std::uint64_t stream) const {
    return to_unit_open_closed(hash_key(seed_, feature, sample, stream));
  }

  std::uint64_t seed_;
  std::uint32_t k_;
};

// Fraction of samples on which both the feature and t agree.
inline double estimate_similarity(const WmhSignature& a, const WmhSignature& b) {
  if (a.k() != b.k()) throw std::invalid_argument("signatures differ in hash size");
  if (a.seed != b.seed) throw std::invalid_argument("signatures come from different seeds");
  if (a.k() == 0) throw std::invalid_argument("empty signatures");
  std::size_t equal = 0;
  for (std::size_t i = 0; i < a.k(); ++i) equal += a.samples[i] == b.samples[i];
  return static_cast<double>(equal) / static_cast<double>(a.k());
}

// ---- signature file ------------------------------------------------------------
//
// Little endian: "WMH1", u32 K, u64 seed, then per document a u16 name length,
// the name bytes and K pairs of (u32 feature id, i32 t).

struct NamedSignature {
  std::string name;
  WmhSignature signature;

  friend bool operator==(const NamedSignature&, const NamedSignature&) = default;
};

struct SignatureFile {
  std::uint32_t k = 0;
  std::uint64_t seed = 0;
  std::vector<NamedSignature> entries;

  friend bool operator==(const SignatureFile&, const SignatureFile&) = default;
};

namespace detail {

template <class UInt>
void put_le(std::string& out, UInt v) {
  for (std::size_t i = 0; i < sizeof(UInt); ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

template <class UInt>
UInt get_le(std::string_view in, std::size_t& pos) {
  if (pos + sizeof(UInt) > in.size()) throw data_error("signature file truncated at byte " + std::to_string(pos));
  UInt v = 0;
  for (std::size_t i = 0; i < sizeof(UInt); ++i)
    v |= static_cast<UInt>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  pos += sizeof(UInt);
  return v;
}

}  // namespace detail

inline std::string encode_signatures(const SignatureFile& file) {
  std::string out = "WMH1";
  detail::put_le<std::uint32_t>(out, file.k);
  detail::put_le<std::uint64_t>(out, file.seed);
  for (const auto& e : file.entries) {
    if (e.name.size() > 0xffff) throw data_error("repository name too long for signature file: " + e.name);
    if (e.signature.k() != file.k || e.signature.seed != file.seed)
      throw data_error("signature of " + e.name + " does not match the file's K/seed");
    detail::put_le<std::uint16_t>(out, static_cast<std::uint16_t>(e.name.size()));
    out += e.name;
    for (const auto& s : e.signature.samples) {
      detail::put_le<std::uint32_t>(out, s.feature);
      detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(s.t));
    }
  }
  return out;
}

inline SignatureFile decode_signatures(std::string_view bytes) {
  if (bytes.substr(0, 4) != "WMH1") throw data_error("not a signature file (bad magic)");
  std::size_t pos = 4;
  SignatureFile file;
  file.k = detail::get_le<std::uint32_t>(bytes, pos);
  file.seed = detail::get_le<std::uint64_t>(bytes, pos);
  while (pos < bytes.size()) {
    NamedSignature e;
    auto len = detail::get_le<std::uint16_t>(bytes, pos);
    if (pos + len > bytes.size()) throw data_error("signature file truncated in a name");
    e.name = std::string(bytes.substr(pos, len));
    pos += len;
    e.signature.seed = file.seed;
    e.signature.samples.resize(file.k);
    for (auto& s : e.signature.samples) {
      s.feature = detail::get_le<std::uint32_t>(bytes, pos);
      s.t = static_cast<std::int32_t>(detail::get_le<std::uint32_t>(bytes, pos));
    }
    file.entries.push_back(std::move(e));
  }
  return file;
}

}  // namespace srctopics
