// Builds a few bags by hand, two of them near-identical, and reports the
// duplicate sets found under both bin semantics. The fork differs in one
// term, so it must agree with the original on all 125 band rows to survive
// intersection, while any single band suffices under union.

#include <iostream>
#include <vector>

#include "srctopics/lshdedup.hpp"

int main() {
  using srctopics::Bag;
  std::vector<Bag> bags = {
      {"alice/parser", {{"token", 40}, {"parse", 30}, {"lexer", 20}, {"grammar", 10}}},
      {"bob/parser-fork", {{"token", 40}, {"parse", 30}, {"lexer", 20}, {"grammar", 10}, {"readme", 1}}},
      {"carol/plots", {{"figur", 25}, {"axis", 12}, {"linspac", 8}, {"color", 5}}},
      {"dave/server", {{"request", 30}, {"respons", 30}, {"socket", 10}, {"handler", 9}}},
  };
  for (auto semantics : {srctopics::SetSemantics::intersection, srctopics::SetSemantics::union_of_bins}) {
    srctopics::DedupOptions opts;
    opts.seed = 7;
    opts.semantics = semantics;
    auto outcome = srctopics::detect_duplicates(bags, opts);
    std::cout << (semantics == srctopics::SetSemantics::intersection ? "intersection" : "union") << ": "
              << outcome.plan.bands << " tables x " << outcome.plan.rows << " rows, kept "
              << outcome.deduped.kept.size() << " of " << bags.size() << "\n";
    std::cout << srctopics::format_duplicate_sets(outcome.extraction.sets);
  }
}
