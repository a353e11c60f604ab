// Trains a two-topic model on a tiny corpus whose documents use one of two
// disjoint vocabularies, then prints the top words of each topic.

#include <iostream>
#include <string>
#include <vector>

#include "srctopics/embedreport.hpp"

int main() {
  using namespace srctopics;
  std::vector<Bag> bags;
  const std::vector<std::string> a = {"socket", "request", "header", "server"};
  const std::vector<std::string> b = {"matrix", "vector", "tensor", "gradient"};
  for (int d = 0; d < 6; ++d) {
    Bag bag{"repo" + std::to_string(d), {}};
    for (std::size_t i = 0; i < 4; ++i) bag.counts[(d < 3 ? a : b)[i]] = 1 + (d + i) % 3;
    bags.push_back(bag);
  }
  auto vocab = build_vocabulary(bags, 1);
  auto corpus = index_corpus(bags, vocab);

  TrainConfig config;
  config.num_topics = 2;
  config.seed = 1;
  auto result = train(corpus, config);
  std::cout << format_metrics(result.metrics);
  for (std::size_t t = 0; t < 2; ++t) {
    std::cout << "topic " << t << ":";
    for (const auto& [word, weight] : top_words(result.model, vocab, t, 4)) std::cout << " " << word;
    std::cout << "\n";
  }
}
