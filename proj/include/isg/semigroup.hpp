#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isg/semilattice.hpp"

namespace isg {

enum class Level { Free, Toeplitz, Separated };

std::string level_name(Level l);
Level parse_level(std::string_view s);

// Zero, or a Munn tree (T, g). At the Free level T is any finite lower set
// containing g; at the other levels T is canonical and contains g0.
class Element {
 public:
  static Element zero(Level level) { return Element(level); }
  static Element make(Level level, LowerSet tree, Path carrier) {
    Element e(level);
    e.zero_ = false;
    e.tree_ = std::move(tree);
    e.carrier_ = std::move(carrier);
    return e;
  }

  bool is_zero() const { return zero_; }
  Level level() const { return level_; }
  const LowerSet& tree() const { return tree_; }
  const Path& carrier() const { return carrier_; }
  VertexId base() const { return tree_.base(); }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.level_ != b.level_ || a.zero_ != b.zero_) return false;
    return a.zero_ || (a.tree_ == b.tree_ && a.carrier_ == b.carrier_);
  }

 private:
  explicit Element(Level level) : level_(level) {}
  Level level_;
  bool zero_ = true;
  LowerSet tree_;
  Path carrier_;
};

bool element_less(const Element& a, const Element& b);
struct ElementLess {
  bool operator()(const Element& a, const Element& b) const { return element_less(a, b); }
};
struct ElementHash {
  std::size_t operator()(const Element& e) const;
};

// Throws PreconditionError describing the first violated invariant.
void validate_element(const SeparatedGraph& g, const Element& a);

Element from_vertex(const SeparatedGraph& g, VertexId v, Level level);
Element from_letter(const SeparatedGraph& g, Letter x, Level level);
Element from_token(const SeparatedGraph& g, const Token& t, Level level);
// (g-down, g) normalized for the level: the element represented by the path g.
Element path_element(const SeparatedGraph& g, const Path& p, Level level);
// (T0, base): the idempotent of a lower set; Zero if T is incompatible (Separated).
Element idempotent_of(const SeparatedGraph& g, const LowerSet& t, Level level = Level::Separated);

Element multiply(const SeparatedGraph& g, const Element& a, const Element& b);
Element inverse(const SeparatedGraph& g, const Element& a);
bool is_idempotent(const Element& a);
bool natural_leq(const Element& a, const Element& b);
FreeGroupWord grading(const Element& a);
// Free -> Toeplitz -> Separated quotient maps.
Element to_level(const SeparatedGraph& g, const Element& a, Level target);

Element parse_word(const SeparatedGraph& g, const std::vector<Token>& tokens, Level level);
Element parse_word(const SeparatedGraph& g, std::string_view text, Level level);

// `(p1)(p2)...(pn) | lambda` with {p_i} = max(T). Throws on Zero.
std::string scheiblich_nf(const SeparatedGraph& g, const Element& a);
// Same, rendering Zero as `0`.
std::string render_nf(const SeparatedGraph& g, const Element& a);
// Leaves of T together with g-down: the free inverse monoid style picture.
std::string render_all_leaves(const SeparatedGraph& g, const Element& a);
// Word (gamma_1 gamma_1^-1)...(gamma_n gamma_n^-1) lambda for a nonzero element.
std::vector<Token> snf_word(const SeparatedGraph& g, const Element& a);
// Parses the rendering grammar back into a word and evaluates it.
Element parse_snf(const SeparatedGraph& g, std::string_view text, Level level);

bool theta_domain_contains(const SeparatedGraph& g, const Path& p, const LowerSet& t);
LowerSet theta_apply(const SeparatedGraph& g, const Path& p, const LowerSet& t);

struct Automorphism {
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};
std::vector<Automorphism> enumerate_automorphisms(const SeparatedGraph& g, Budget& budget);
Path apply_automorphism(const SeparatedGraph& g, const Automorphism& phi, const Path& p);
Element apply_automorphism(const SeparatedGraph& g, const Automorphism& phi, const Element& a);
std::string render_automorphism(const SeparatedGraph& g, const Automorphism& phi);

}  // namespace isg
