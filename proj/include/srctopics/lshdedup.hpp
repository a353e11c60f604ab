#pragma once

// Banded LSH over weighted MinHash signatures and fuzzy-duplicate set
// extraction.
//
// Extraction runs these steps over a built index:
//   1. drop bins holding a single repository,
//   2. per repository, intersect the bins it occupies across all tables
//      (identical results are stored once),
//   3. drop single-member sets,
//   4. drop two-member sets whose exact weighted Jaccard similarity is below
//      the pair threshold.
// Intersection means a repository forms a set only with repositories that
// share every one of its band keys. Union semantics (any shared band) is
// available for comparison.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "srctopics/corpus.hpp"
#include "srctopics/naming.hpp"
#include "srctopics/random.hpp"
#include "srctopics/util.hpp"
#include "srctopics/wminhash.hpp"

namespace srctopics {

struct BandPlan {
  std::uint32_t bands = 1;
  std::uint32_t rows = 1;
  double threshold = 0.9;

  friend bool operator==(const BandPlan&, const BandPlan&) = default;
};

namespace detail {

// Trapezoid rule with step close to `step`.
template <class F>
double integrate(F&& f, double lo, double hi, double step = 0.001) {
  if (hi <= lo) return 0.0;
  auto n = static_cast<std::size_t>(std::max(1.0, std::round((hi - lo) / step)));
  const double h = (hi - lo) / static_cast<double>(n);
  double sum = 0.5 * (f(lo) + f(hi));
  for (std::size_t i = 1; i < n; ++i) sum += f(lo + h * static_cast<double>(i));
  return sum * h;
}

}  // namespace detail

// Probability mass of pairs below the threshold that share at least one band.
inline double lsh_false_positive_area(double threshold, std::uint32_t bands, std::uint32_t rows) {
  return detail::integrate(
      [&](double s) { return 1.0 - std::pow(1.0 - std::pow(s, rows), bands); }, 0.0, threshold);
}

// Probability mass of pairs above the threshold that share no band.
inline double lsh_false_negative_area(double threshold, std::uint32_t bands, std::uint32_t rows) {
  return detail::integrate(
      [&](double s) { return std::pow(1.0 - std::pow(s, rows), bands); }, threshold, 1.0);
}

// Searches every (bands, rows) with bands * rows <= k for the smallest sum of
// false positive and false negative areas. The first minimum in
// bands-major order wins.
inline BandPlan plan_bands(std::uint32_t k, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw usage_error("LSH threshold must lie in (0, 1)");
  if (k < 2) throw usage_error("hash size must be at least 2 for banding");
  BandPlan best{1, 1, threshold};
  double best_error = std::numeric_limits<double>::infinity();
  for (std::uint32_t b = 1; b <= k; ++b) {
    for (std::uint32_t r = 1; r <= k / b; ++r) {
      double error = lsh_false_positive_area(threshold, b, r) + lsh_false_negative_area(threshold, b, r);
      if (error < best_error) {
        best_error = error;
        best = BandPlan{b, r, threshold};
      }
    }
  }
  return best;
}

using BinKey = std::uint64_t;

struct LshIndex {
  BandPlan plan;
  std::vector<std::string> repos;
  std::vector<std::vector<BinKey>> keys;                      // [repo][table]
  std::vector<std::map<BinKey, std::vector<std::uint32_t>>> tables;  // members sorted by repo index
};

inline BinKey band_key(const WmhSignature& sig, std::uint32_t table, const BandPlan& plan, std::uint64_t hash_seed) {
  std::string bytes;
  bytes.reserve(plan.rows * 8);
  for (std::uint32_t i = table * plan.rows; i < (table + 1) * plan.rows; ++i) {
    detail::put_le<std::uint32_t>(bytes, sig.samples[i].feature);
    detail::put_le<std::uint32_t>(bytes, static_cast<std::uint32_t>(sig.samples[i].t));
  }
  return hash_bytes(hash_key(hash_seed, table), bytes);
}

inline LshIndex build_index(std::span<const NamedSignature> signatures, const BandPlan& plan, std::uint64_t hash_seed,
                            unsigned workers = 1) {
  LshIndex index;
  index.plan = plan;
  index.tables.resize(plan.bands);
  std::set<std::string_view> names;
  std::size_t k = signatures.empty() ? 0 : signatures.front().signature.k();
  std::uint64_t seed = signatures.empty() ? 0 : signatures.front().signature.seed;
  for (const auto& s : signatures) {
    if (!names.insert(s.name).second) throw data_error("duplicate repository name in LSH input: " + s.name);
    if (s.signature.k() != k || s.signature.seed != seed)
      throw data_error("signatures do not share hash size and seed (" + s.name + ")");
  }
  if (!signatures.empty() && std::size_t(plan.bands) * plan.rows > k)
    throw usage_error("band plan needs more samples than the signatures hold");

  index.keys.resize(signatures.size());
  parallel_for(signatures.size(), workers, [&](std::size_t i) {
    auto& row = index.keys[i];
    row.resize(plan.bands);
    for (std::uint32_t t = 0; t < plan.bands; ++t) row[t] = band_key(signatures[i].signature, t, plan, hash_seed);
  });
  for (std::size_t i = 0; i < signatures.size(); ++i) {
    index.repos.push_back(signatures[i].name);
    for (std::uint32_t t = 0; t < plan.bands; ++t)
      index.tables[t][index.keys[i][t]].push_back(static_cast<std::uint32_t>(i));
  }
  return index;
}

enum class SetSemantics { intersection, union_of_bins };

struct DuplicateSet {
  std::vector<std::string> members;  // sorted, size >= 2

  friend bool operator==(const DuplicateSet&, const DuplicateSet&) = default;
  friend auto operator<=>(const DuplicateSet&, const DuplicateSet&) = default;
};

struct ExtractionResult {
  std::vector<DuplicateSet> sets;
  Histogram bin_sizes;              // bin size -> number of bins, all tables
  std::size_t nonsingleton_bins = 0;
  std::size_t filtered_repos = 0;   // unique repositories in sets before pair verification
  std::size_t final_repos = 0;      // unique repositories in the returned sets
};

struct ExtractionOptions {
  double pair_threshold = 0.8;
  SetSemantics semantics = SetSemantics::intersection;
};

// `bags` must be aligned with the index's repositories; they supply the exact
// similarity for verifying two-member sets.
inline ExtractionResult extract_duplicate_sets(const LshIndex& index, std::span<const Bag> bags,
                                               const ExtractionOptions& opts = {}) {
  if (bags.size() != index.repos.size()) throw std::invalid_argument("bags are not aligned with the index");
  ExtractionResult result;
  for (const auto& table : index.tables) {
    for (const auto& [key, members] : table) {
      ++result.bin_sizes[members.size()];
      if (members.size() >= 2) ++result.nonsingleton_bins;
    }
  }

  std::set<std::vector<std::uint32_t>> cache;
  for (std::size_t i = 0; i < index.repos.size(); ++i) {
    std::vector<std::uint32_t> acc;
    bool first = true;
    for (std::size_t t = 0; t < index.tables.size(); ++t) {
      const auto& bin = index.tables[t].at(index.keys[i][t]);
      if (bin.size() < 2) {
        if (opts.semantics == SetSemantics::intersection) {
          acc.clear();
          break;
        }
        continue;
      }
      if (first) {
        acc = bin;
        first = false;
        continue;
      }
      std::vector<std::uint32_t> merged;
      if (opts.semantics == SetSemantics::intersection)
        std::set_intersection(acc.begin(), acc.end(), bin.begin(), bin.end(), std::back_inserter(merged));
      else
        std::set_union(acc.begin(), acc.end(), bin.begin(), bin.end(), std::back_inserter(merged));
      acc = std::move(merged);
    }
    if (acc.size() >= 2) cache.insert(std::move(acc));
  }

  std::set<std::uint32_t> filtered, kept;
  for (const auto& members : cache) {
    filtered.insert(members.begin(), members.end());
    if (members.size() == 2 &&
        exact_weighted_jaccard(bags[members[0]].counts, bags[members[1]].counts) < opts.pair_threshold)
      continue;
    kept.insert(members.begin(), members.end());
    DuplicateSet set;
    for (auto m : members) set.members.push_back(index.repos[m]);
    std::sort(set.members.begin(), set.members.end());
    result.sets.push_back(std::move(set));
  }
  std::sort(result.sets.begin(), result.sets.end());
  result.filtered_repos = filtered.size();
  result.final_repos = kept.size();
  return result;
}

struct DedupedBags {
  std::vector<Bag> kept;
  std::vector<std::string> removed;  // sorted
};

// Keeps the lexicographically smallest member of each set and removes every
// other member; a repository that is a non-representative in any set is
// removed.
inline DedupedBags dedup_corpus(std::span<const Bag> bags, std::span<const DuplicateSet> sets) {
  std::set<std::string> removed;
  for (const auto& set : sets) {
    if (set.members.empty()) continue;
    const auto& rep = *std::min_element(set.members.begin(), set.members.end());
    for (const auto& m : set.members)
      if (m != rep) removed.insert(m);
  }
  DedupedBags out;
  for (const auto& bag : bags)
    if (!removed.count(bag.repo)) out.kept.push_back(bag);
  out.removed.assign(removed.begin(), removed.end());
  return out;
}

inline std::string format_duplicate_sets(std::span<const DuplicateSet> sets) {
  std::string out;
  for (const auto& set : sets) {
    for (std::size_t i = 0; i < set.members.size(); ++i) {
      if (i) out += '\t';
      out += set.members[i];
    }
    out += '\n';
  }
  return out;
}

struct DedupOptions {
  std::uint32_t hash_size = 128;
  double lsh_threshold = 0.9;
  double pair_threshold = 0.8;
  std::uint64_t seed = 0;
  SetSemantics semantics = SetSemantics::intersection;
  unsigned workers = 1;
};

struct DedupOutcome {
  BandPlan plan;
  SignatureFile signatures;
  ExtractionResult extraction;
  DedupedBags deduped;
};

// Signs every non-empty bag over a vocabulary of all its terms, indexes the
// signatures, extracts duplicate sets and filters the bags. Empty bags cannot
// be signed and pass through untouched.
inline DedupOutcome detect_duplicates(std::span<const Bag> bags, const DedupOptions& opts) {
  DedupOutcome out;
  out.plan = plan_bands(opts.hash_size, opts.lsh_threshold);
  Vocabulary full = build_vocabulary(bags, 1);
  std::vector<Bag> signable;
  for (const auto& b : bags)
    if (!b.counts.empty()) signable.push_back(b);
  SparseCorpus docs = index_corpus(signable, full);

  WmhGenerator gen(hash_key(opts.seed, 0x574d48), opts.hash_size);
  out.signatures.k = gen.k();
  out.signatures.seed = gen.seed();
  out.signatures.entries.resize(docs.num_docs());
  parallel_for(docs.num_docs(), opts.workers, [&](std::size_t i) {
    out.signatures.entries[i] = NamedSignature{docs.docs[i].repo, gen.signature(docs.docs[i])};
  });

  auto index = build_index(out.signatures.entries, out.plan, hash_key(opts.seed, 0x4c5348), opts.workers);
  out.extraction = extract_duplicate_sets(index, signable, {opts.pair_threshold, opts.semantics});
  out.deduped = dedup_corpus(bags, out.extraction.sets);
  return out;
}

}  // namespace srctopics
