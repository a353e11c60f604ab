#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "srctopics/wminhash.hpp"

using namespace srctopics;
using Weights = std::map<std::uint32_t, std::uint64_t>;

namespace {

std::vector<WeightedFeature> features(const Weights& w) {
  std::vector<WeightedFeature> out;
  for (const auto& [id, c] : w) out.push_back({id, static_cast<double>(c)});
  return out;
}

// A random pair: shared support with perturbed counts plus private features.
std::pair<Weights, Weights> random_pair(std::mt19937_64& rng, std::uint32_t vocab) {
  Weights a, b;
  const int shared = 5 + static_cast<int>(rng() % 40);
  const int own_a = static_cast<int>(rng() % 30), own_b = static_cast<int>(rng() % 30);
  for (int i = 0; i < shared; ++i) {
    auto id = static_cast<std::uint32_t>(rng() % vocab);
    a[id] = 1 + rng() % 10;
    const auto jitter = static_cast<std::int64_t>(rng() % 5) - 2;
    b[id] = static_cast<std::uint64_t>(std::max<std::int64_t>(1, static_cast<std::int64_t>(a[id]) + jitter));
  }
  for (int i = 0; i < own_a; ++i) a[static_cast<std::uint32_t>(rng() % vocab)] += 1 + rng() % 10;
  for (int i = 0; i < own_b; ++i) b[static_cast<std::uint32_t>(rng() % vocab)] += 1 + rng() % 10;
  return {a, b};
}

}  // namespace

TEST(Gamma21, Values) {
  EXPECT_EQ(gamma21(1.0, 1.0), 0.0);
  EXPECT_NEAR(gamma21(std::exp(-1.0), std::exp(-1.0)), 2.0, 1e-12);
  EXPECT_NEAR(gamma21(0.5, 0.5), 1.386294, 1e-6);
  EXPECT_THROW(gamma21(0.0, 0.5), std::domain_error);
  EXPECT_THROW(gamma21(0.5, 1.5), std::domain_error);
}

TEST(ExactWeightedJaccard, Values) {
  Weights a = {{1, 3}, {2, 4}};
  EXPECT_EQ(exact_weighted_jaccard(a, a), 1.0);
  EXPECT_EQ(exact_weighted_jaccard(a, Weights{{5, 1}}), 0.0);
  EXPECT_EQ(exact_weighted_jaccard(Weights{{1, 1}, {2, 2}}, Weights{{1, 2}, {2, 1}}), 0.5);
  EXPECT_EQ(exact_weighted_jaccard(Weights{}, Weights{}), 0.0);
  EXPECT_EQ(exact_weighted_jaccard(a, Weights{}), 0.0);
}

TEST(ExactWeightedJaccard, SymmetricScaleInvariantAndOneOnlyForEqual) {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 300; ++n) {
    auto [a, b] = random_pair(rng, 60);
    double j = exact_weighted_jaccard(a, b);
    EXPECT_EQ(j, exact_weighted_jaccard(b, a));
    EXPECT_EQ(j == 1.0, a == b);
    for (std::uint64_t c : {2u, 3u, 7u}) {
      Weights ca = a, cb = b;
      for (auto& [k, v] : ca) v *= c;
      for (auto& [k, v] : cb) v *= c;
      // Exact rational comparison: num/den unchanged after scaling both by c.
      std::uint64_t num = 0, den = 0, cnum = 0, cden = 0;
      for (std::uint32_t k = 0; k < 60; ++k) {
        auto get = [k](const Weights& w) { auto it = w.find(k); return it == w.end() ? 0ull : it->second; };
        num += std::min(get(a), get(b));
        den += std::max(get(a), get(b));
        cnum += std::min(get(ca), get(cb));
        cden += std::max(get(ca), get(cb));
      }
      EXPECT_EQ(num * cden, cnum * den);
      EXPECT_DOUBLE_EQ(exact_weighted_jaccard(ca, cb), j);
    }
  }
}

TEST(WmhGenerator, ParametersAreDeterministicAndInRange) {
  WmhGenerator g(42, 16), h(42, 16), other(43, 16);
  for (std::uint32_t d = 0; d < 50; ++d) {
    for (std::uint32_t k = 0; k < 16; ++k) {
      auto p = g.params(d, k), q = h.params(d, k);
      EXPECT_EQ(p.r, q.r);
      EXPECT_EQ(p.c, q.c);
      EXPECT_EQ(p.beta, q.beta);
      EXPECT_GT(p.r, 0.0);
      EXPECT_GT(p.c, 0.0);
      EXPECT_GT(p.beta, 0.0);
      EXPECT_LE(p.beta, 1.0);
    }
  }
  EXPECT_NE(g.params(0, 0).r, other.params(0, 0).r);
  EXPECT_THROW(WmhGenerator(1, 0), usage_error);
}

// Mean of Gamma(2,1) is 2 and variance 2; beta is uniform with mean 1/2.
TEST(WmhGenerator, ParameterMoments) {
  WmhGenerator g(7, 64);
  double sr = 0, sr2 = 0, sb = 0;
  const int n = 64 * 500;
  for (std::uint32_t d = 0; d < 500; ++d)
    for (std::uint32_t k = 0; k < 64; ++k) {
      auto p = g.params(d, k);
      sr += p.r;
      sr2 += p.r * p.r;
      sb += p.beta;
    }
  const double mean = sr / n, var = sr2 / n - mean * mean;
  EXPECT_NEAR(mean, 2.0, 4 * std::sqrt(2.0 / n));
  EXPECT_NEAR(var, 2.0, 0.1);
  EXPECT_NEAR(sb / n, 0.5, 4 * std::sqrt(1.0 / 12 / n));
}

TEST(Signature, SingleFeatureAndIdentity) {
  WmhGenerator g(1, 128);
  auto s = g.signature(features({{17, 5}}));
  ASSERT_EQ(s.k(), 128u);
  for (const auto& x : s.samples) EXPECT_EQ(x.feature, 17u);
  Weights doc = {{1, 2}, {5, 9}, {8, 1}};
  EXPECT_EQ(g.signature(features(doc)), g.signature(features(doc)));
  EXPECT_EQ(estimate_similarity(s, s), 1.0);
  EXPECT_THROW(g.signature(std::vector<WeightedFeature>{}), data_error);
  EXPECT_THROW(g.signature(std::vector<WeightedFeature>{{1, 0.0}}), data_error);
}

TEST(Signature, FeatureOrderDoesNotMatter) {
  WmhGenerator g(3, 64);
  std::mt19937_64 rng(8);
  for (int n = 0; n < 50; ++n) {
    auto f = features(random_pair(rng, 300).first);
    auto base = g.signature(f);
    std::shuffle(f.begin(), f.end(), rng);
    EXPECT_EQ(g.signature(f), base);
  }
}

TEST(Signature, DocumentOverloadMatchesFeatures) {
  WmhGenerator g(3, 32);
  Document d{"r", {{2, 3}, {9, 1}}};
  EXPECT_EQ(g.signature(d), g.signature(features({{2, 3}, {9, 1}})));
}

TEST(EstimateSimilarity, MismatchErrors) {
  WmhGenerator a(1, 8), b(2, 8), c(1, 16);
  auto f = features({{1, 1}});
  EXPECT_THROW(estimate_similarity(a.signature(f), b.signature(f)), std::invalid_argument);
  EXPECT_THROW(estimate_similarity(a.signature(f), c.signature(f)), std::invalid_argument);
}

TEST(EstimateSimilarity, DisjointSupports) {
  WmhGenerator g(5, 128);
  Weights a, b;
  for (std::uint32_t i = 0; i < 40; ++i) {
    a[i] = 1 + i % 4;
    b[100 + i] = 1 + i % 3;
  }
  EXPECT_LE(estimate_similarity(g.signature(features(a)), g.signature(features(b))), 0.05);
}

TEST(EstimateSimilarity, HalfSimilarPair) {
  // {x:1,y:2} style: shared keys with swapped weights gives J = 0.5 exactly.
  Weights a, b;
  for (std::uint32_t i = 0; i < 30; ++i) {
    a[i] = i % 2 ? 1 : 2;
    b[i] = i % 2 ? 2 : 1;
  }
  ASSERT_EQ(exact_weighted_jaccard(a, b), 0.5);
  WmhGenerator g(11, 128);
  double est = estimate_similarity(g.signature(features(a)), g.signature(features(b)));
  EXPECT_GE(est, 0.355);
  EXPECT_LE(est, 0.645);
}

TEST(EstimateSimilarity, UnbiasedOverRandomPairs) {
  std::mt19937_64 rng(2024);
  WmhGenerator g(99, 128);
  double signed_sum = 0;
  const int pairs = 400;
  for (int n = 0; n < pairs; ++n) {
    auto [a, b] = random_pair(rng, 500);
    signed_sum += estimate_similarity(g.signature(features(a)), g.signature(features(b))) - exact_weighted_jaccard(a, b);
  }
  EXPECT_LE(std::abs(signed_sum / pairs), 2 * 0.0442 / std::sqrt(double(pairs)));
}

// For planted pairs at J = 0.1 .. 0.9, the per-sample collision rate pooled
// over many pairs and all samples stays within 3 sigma of J.
TEST(EstimateSimilarity, CollisionRateCurve) {
  WmhGenerator g(17, 128);
  std::mt19937_64 rng(31);
  for (int tenth = 1; tenth <= 9; ++tenth) {
    // Four shared features of weight 2s and one private feature of weight 4q
    // on each side: J = 8s / (8s + 8q) = s / (s + q).
    const std::uint64_t s = static_cast<std::uint64_t>(tenth), q = static_cast<std::uint64_t>(10 - tenth);
    std::size_t hits = 0, total = 0;
    for (int p = 0; p < 40; ++p) {
      Weights a, b;
      std::uint32_t base = static_cast<std::uint32_t>(rng() % 100000) * 4;
      for (std::uint32_t i = 0; i < 4; ++i) {
        a[base + i] = 2 * s;
        b[base + i] = 2 * s;
      }
      a[base + 1000000] = 4 * q;
      b[base + 2000000] = 4 * q;
      const double j = exact_weighted_jaccard(a, b);
      ASSERT_NEAR(j, tenth / 10.0, 1e-12);
      auto sa = g.signature(features(a)), sb = g.signature(features(b));
      for (std::size_t k = 0; k < sa.k(); ++k) hits += sa.samples[k] == sb.samples[k];
      total += sa.k();
    }
    const double j = tenth / 10.0;
    const double sigma = std::sqrt(j * (1 - j) / total);
    EXPECT_NEAR(double(hits) / total, j, 3 * sigma) << "J = " << j;
  }
}

TEST(SignatureFile, RoundTripAndErrors) {
  WmhGenerator g(5, 4);
  SignatureFile f{4, 5, {{"alpha", g.signature(features({{1, 2}}))}, {"b/c", g.signature(features({{3, 1}, {4, 7}}))}}};
  auto bytes = encode_signatures(f);
  EXPECT_EQ(bytes.substr(0, 4), "WMH1");
  EXPECT_EQ(bytes.size(), 4u + 4 + 8 + (2 + 5 + 32) + (2 + 3 + 32));
  EXPECT_EQ(decode_signatures(bytes), f);
  EXPECT_THROW(decode_signatures("XXXX"), data_error);
  EXPECT_THROW(decode_signatures(bytes.substr(0, bytes.size() - 1)), data_error);
  SignatureFile bad = f;
  bad.k = 8;
  EXPECT_THROW(encode_signatures(bad), data_error);
}

TEST(SignatureFile, NegativeTRoundTrips) {
  WmhSignature s{9, {{1, -5}, {2, 2147483647}, {3, -2147483647 - 1}}};
  SignatureFile f{3, 9, {{"r", s}}};
  EXPECT_EQ(decode_signatures(encode_signatures(f)), f);
}
