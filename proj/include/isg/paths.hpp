#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isg/graph.hpp"

namespace isg {

struct Letter {
  EdgeId edge = 0;
  bool inverse = false;

  Letter inv() const { return {edge, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

VertexId letter_source(const SeparatedGraph& g, Letter x);
VertexId letter_range(const SeparatedGraph& g, Letter x);

// Global letter order: positive letters before inverse letters; within each
// kind, later-declared edges come first.
bool letter_less(Letter a, Letter b);

// A composable letter sequence with an explicit source. Used both for words of
// P(E) (possibly unreduced) and for reduced paths; the empty sequence is the
// vertex `source`.
struct Path {
  VertexId source = 0;
  VertexId range = 0;
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& back() const { return letters.back(); }
  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.letters == b.letters;
  }
};

// Length first, then source, then letters under letter_less.
bool path_less(const Path& a, const Path& b);
struct PathLess {
  bool operator()(const Path& a, const Path& b) const { return path_less(a, b); }
};
struct PathHash {
  std::size_t operator()(const Path& p) const;
};

Path vertex_path(VertexId v);
Path letter_path(const SeparatedGraph& g, Letter x);
// Appends x; the caller guarantees composability.
void push_letter(const SeparatedGraph& g, Path& p, Letter x);
Path prefix(const SeparatedGraph& g, const Path& p, std::size_t k);
bool is_prefix(const Path& p, const Path& q);  // p <=_p q
bool ends_inverse(const Path& p);

bool is_reduced(const Path& p);
Path reduce(const SeparatedGraph& g, const Path& w);
Path inverse(const SeparatedGraph& g, const Path& p);
// red(gh) when range(g) = source(h); nullopt stands for Zero.
std::optional<Path> translate(const SeparatedGraph& g, const Path& a, const Path& b);

bool is_c_separated_path(const SeparatedGraph& g, const Path& p);
bool is_c_separated_string(const SeparatedGraph& g, const Path& w);

Path longest_common_prefix(const SeparatedGraph& g, const Path& a, const Path& b);
// Largest-common-prefix criterion. Throws PreconditionError on source mismatch.
bool is_c_compatible(const SeparatedGraph& g, const Path& a, const Path& b);
// Second route: red(b^-1 a) is C-separated.
bool is_c_compatible_geodesic(const SeparatedGraph& g, const Path& a, const Path& b);

struct PrefixDecomposition {
  Path g0;
  std::vector<Letter> tail;  // inverse letters only
};
PrefixDecomposition prefix_decompose(const SeparatedGraph& g, const Path& p);
Path positive_part(const SeparatedGraph& g, const Path& p);
// Length of the positive part, without building it.
std::size_t positive_length(const Path& p);

// Element of the free group on E^1: a reduced letter sequence without vertices.
struct FreeGroupWord {
  std::vector<Letter> letters;
  friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;
};
FreeGroupWord omega(const Path& p);
FreeGroupWord fg_multiply(const FreeGroupWord& a, const FreeGroupWord& b);
// Exponent notation, e.g. `e^2 f^-1`; the identity renders as `1`.
std::string render_free_group_word(const SeparatedGraph& g, const FreeGroupWord& w);

// Letters with the given source, in letter order.
std::vector<Letter> letters_at(const SeparatedGraph& g, VertexId v);

struct Token {
  bool is_vertex = false;
  VertexId vertex = 0;
  Letter letter;
  friend bool operator==(const Token&, const Token&) = default;
};
std::vector<Token> parse_tokens(const SeparatedGraph& g, std::string_view text);
// Multiplies the generators in P(E); nullopt when the product is zero.
std::optional<Path> compose_tokens(const SeparatedGraph& g, const std::vector<Token>& tokens);
std::string render_tokens(const SeparatedGraph& g, const std::vector<Token>& tokens);

std::string render_letter(const SeparatedGraph& g, Letter x);
std::string render_path(const SeparatedGraph& g, const Path& p);
// A single composable word (vertices allowed, not necessarily reduced).
Path parse_path(const SeparatedGraph& g, std::string_view text);
// Comma-separated paths, optionally wrapped in braces.
std::vector<Path> parse_path_list(const SeparatedGraph& g, std::string_view text);

// All C-separated paths from v of length <= max_len, in path order.
std::vector<Path> c_separated_paths(const SeparatedGraph& g, VertexId v, std::size_t max_len);

}  // namespace isg
