#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isg/errors.hpp"
#include "isg/paths.hpp"

// Independent validators. Only the paths module is shared with the engine.
namespace isg::oracle {

// Peeling normal form: rendered exactly like the engine, or "0".
std::string snf_string_algorithm(const SeparatedGraph& g, const std::vector<Token>& word);
std::string snf_string_algorithm(const SeparatedGraph& g, std::string_view word);

// Token strings as bytes: edge e gives 2e (positive) and 2e+1 (inverse),
// vertex v gives 2|E|+v.
class TokenCoder {
 public:
  explicit TokenCoder(const SeparatedGraph& g);
  int alphabet() const { return alphabet_; }
  std::string encode(const std::vector<Token>& w) const;
  std::vector<Token> decode(const std::string& s) const;
  bool is_vertex(char c) const { return static_cast<unsigned char>(c) >= 2 * edges_; }
  int source(char c) const { return source_[static_cast<unsigned char>(c)]; }
  int range(char c) const { return range_[static_cast<unsigned char>(c)]; }
  char star(char c) const;
  char vertex_token(int v) const { return static_cast<char>(2 * edges_ + v); }

 private:
  int edges_ = 0;
  int alphabet_ = 0;
  std::vector<int> source_, range_;
};

// One-step rewrites of s that do not increase length: vertex absorption,
// e^-1 f -> delta r(e) inside a block, the zero for non-composable neighbours,
// and commuting uu* past ww* with |u|,|w| <= half. `zero` is set when some
// rewrite sends s to 0.
void shrinking_neighbours(const SeparatedGraph& g, const TokenCoder& tc, const std::string& s,
                          std::size_t half, std::vector<std::string>& out, bool& zero);
// One-step rewrites that grow s by one token (the same relations read right to left).
void growing_neighbours(const SeparatedGraph& g, const TokenCoder& tc, const std::string& s,
                        std::vector<std::string>& out);

enum class Equiv { Connected, Unknown };
std::string equiv_name(Equiv e);

// Breadth-first search from both words over strings of length <= len_bound.
// Connected is a proof of equality. Throws BudgetExceeded past the budget.
Equiv bfs_equiv(const SeparatedGraph& g, const std::vector<Token>& w1, const std::vector<Token>& w2,
                std::size_t len_bound, Budget& budget);

// Union-find over every token string of length 1..len_bound plus the zero.
// Its classes are exactly the bfs_equiv classes for the same bound.
class RewriteClosure {
 public:
  RewriteClosure(const SeparatedGraph& g, std::size_t len_bound);
  std::size_t size() const { return parent_.size(); }
  std::size_t index(const std::string& s) const;
  std::string word(std::size_t idx) const;
  std::size_t zero_index() const { return parent_.size() - 1; }
  std::size_t find(std::size_t x);
  bool connected(const std::string& a, const std::string& b) { return find(index(a)) == find(index(b)); }
  const TokenCoder& coder() const { return tc_; }

 private:
  void unite(std::size_t a, std::size_t b);
  TokenCoder tc_;
  std::size_t bound_;
  std::vector<std::size_t> offset_;
  std::vector<std::uint32_t> parent_;
};

// Free inverse monoid words: +(i+1) is x_i, -(i+1) is its inverse.
using FimWord = std::vector<int>;

struct MunnTree {
  std::vector<FimWord> vertices;  // reduced words, sorted
  FimWord end;
  friend bool operator==(const MunnTree&, const MunnTree&) = default;
};
MunnTree fim_munn_tree(const FimWord& w);
bool fim_munn_eq(const FimWord& a, const FimWord& b);
std::string render_fim_word(const FimWord& w);

// x_i -> e<i> ~f<i>, inverse -> f<i> ~e<i>, empty -> v, evaluated as a token word.
std::vector<Token> phi_embed(const SeparatedGraph& g, const FimWord& w);

}  // namespace isg::oracle
