// Splits identifiers given on the command line (or a few defaults) and prints
// the words and their stems.

#include <iostream>
#include <string>
#include <vector>

#include "srctopics/naming.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> tokens(argv + 1, argv + argc);
  if (tokens.empty()) tokens = {"FooBarBaz", "wdSize", "XMLHttpRequest", "np_linspace", "getFigureSize"};
  for (const auto& token : tokens) {
    std::cout << token << ":";
    for (const auto& word : srctopics::split_identifier(token))
      std::cout << " " << word << "->" << srctopics::stem_name(word);
    std::cout << "\n";
  }
}
