#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isg/semigroup.hpp"

namespace isg {

// Threads OpenMP would use; 1 when built without OpenMP.
int parallel_threads();

// Engine normal forms ("0" for zero) of a batch of words, index-aligned.
std::vector<std::string> normal_forms_serial(const SeparatedGraph& g, const std::vector<std::vector<Token>>& words,
                                             Level level);
std::vector<std::string> normal_forms_parallel(const SeparatedGraph& g,
                                               const std::vector<std::vector<Token>>& words, Level level);

struct CrosscheckReport {
  std::size_t samples = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t zeros = 0;
  // First few offending words, rendered, in input order.
  std::vector<std::string> examples;
};

// Engine against the peeling oracle, word by word.
CrosscheckReport crosscheck_serial(const SeparatedGraph& g, const std::vector<std::vector<Token>>& words);
CrosscheckReport crosscheck_parallel(const SeparatedGraph& g, const std::vector<std::vector<Token>>& words);

}  // namespace isg
