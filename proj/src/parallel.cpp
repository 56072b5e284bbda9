#include "isg/parallel.hpp"

#include "isg/oracle.hpp"

#ifdef ISG_HAVE_OPENMP
#include <omp.h>
#endif

namespace isg {

namespace {

constexpr std::size_t kMaxExamples = 5;

// 0 agree, 1 agree on zero, 2 disagree
int compare_one(const SeparatedGraph& g, const std::vector<Token>& w) {
  const std::string a = oracle::snf_string_algorithm(g, w);
  const std::string e = render_nf(g, parse_word(g, w, Level::Separated));
  if (a != e) return 2;
  return a == "0" ? 1 : 0;
}

CrosscheckReport tally(const SeparatedGraph& g, const std::vector<std::vector<Token>>& words,
                       const std::vector<int>& verdict) {
  CrosscheckReport r;
  r.samples = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (verdict[i] == 2) {
      ++r.disagreements;
      if (r.examples.size() < kMaxExamples) r.examples.push_back(render_tokens(g, words[i]));
    } else {
      ++r.agreements;
      if (verdict[i] == 1) ++r.zeros;
    }
  }
  return r;
}

}  // namespace

int parallel_threads() {
#ifdef ISG_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<std::string> normal_forms_serial(const SeparatedGraph& g, const std::vector<std::vector<Token>>& words,
                                             Level level) {
  std::vector<std::string> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out[i] = render_nf(g, parse_word(g, words[i], level));
  return out;
}

std::vector<std::string> normal_forms_parallel(const SeparatedGraph& g,
                                               const std::vector<std::vector<Token>>& words, Level level) {
  std::vector<std::string> out(words.size());
  const long n = static_cast<long>(words.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) out[i] = render_nf(g, parse_word(g, words[i], level));
  return out;
}

CrosscheckReport crosscheck_serial(const SeparatedGraph& g, const std::vector<std::vector<Token>>& words) {
  std::vector<int> verdict(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) verdict[i] = compare_one(g, words[i]);
  return tally(g, words, verdict);
}

CrosscheckReport crosscheck_parallel(const SeparatedGraph& g, const std::vector<std::vector<Token>>& words) {
  std::vector<int> verdict(words.size());
  const long n = static_cast<long>(words.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) verdict[i] = compare_one(g, words[i]);
  return tally(g, words, verdict);
}

}  // namespace isg
