#pragma once

#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "isg/semigroup.hpp"
#include "isg/spectrum.hpp"

namespace isg {

using Rational = boost::multiprecision::cpp_rational;

// Scalar contract: exact equality, a unit distinct from zero, and an involution.
template <class K>
concept ExactRing = requires(K a, K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  K(0);
  K(1);
};

template <class K>
K conjugate(const K& k) { return k; }

std::string render_scalar(const Rational& q);

// Finite K-linear combination of nonzero Separated-level elements.
template <ExactRing K>
class LinComb {
 public:
  using Terms = std::map<Element, K, ElementLess>;

  LinComb() = default;
  static LinComb basis(const Element& e, K c = K(1)) {
    LinComb r;
    r.add_term(e, c);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  void add_term(const Element& e, const K& c) {
    if (e.is_zero() || c == K(0)) return;
    if (e.level() != Level::Separated) throw PreconditionError("algebra works at the separated level");
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second == K(0)) terms_.erase(it);
    }
  }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using AlgebraElement = LinComb<Rational>;

template <ExactRing K>
LinComb<K> add(const LinComb<K>& a, const LinComb<K>& b) {
  LinComb<K> r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

template <ExactRing K>
LinComb<K> scalar_mul(const K& k, const LinComb<K>& a) {
  LinComb<K> r;
  for (const auto& [e, c] : a.terms()) r.add_term(e, k * c);
  return r;
}

template <ExactRing K>
LinComb<K> sub(const LinComb<K>& a, const LinComb<K>& b) {
  return add(a, scalar_mul(K(-1), b));
}

template <ExactRing K>
LinComb<K> multiply(const SeparatedGraph& g, const LinComb<K>& a, const LinComb<K>& b) {
  LinComb<K> r;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) r.add_term(multiply(g, x, y), cx * cy);
  }
  return r;
}

template <ExactRing K>
LinComb<K> star(const SeparatedGraph& g, const LinComb<K>& a) {
  LinComb<K> r;
  for (const auto& [e, c] : a.terms()) r.add_term(inverse(g, e), conjugate(c));
  return r;
}

std::string render_algebra(const SeparatedGraph& g, const AlgebraElement& a);

// Convenience constructors for generators.
AlgebraElement alg_vertex(const SeparatedGraph& g, VertexId v);
AlgebraElement alg_path(const SeparatedGraph& g, const Path& p);
AlgebraElement alg_word(const SeparatedGraph& g, std::string_view word);
bool is_idempotent(const SeparatedGraph& g, const AlgebraElement& a);

// Products over max(I) of lambda lambda*. Throws if I is not compatible.
AlgebraElement e_of(const SeparatedGraph& g, const LowerSet& i);
// lambda0 lambda0* - lambda lambda* with lambda = lambda0 lambda1.
AlgebraElement e_diff(const SeparatedGraph& g, const Path& lambda0, const Path& lambda1);
AlgebraElement e_cyl(const SeparatedGraph& g, const CylinderSet& b);
// v - sum_{e in X} e e*; only for Finite blocks.
AlgebraElement q_of(const SeparatedGraph& g, int block);
AlgebraElement or_join(const SeparatedGraph& g, const AlgebraElement& p, const AlgebraElement& q);

struct CoverVerdict {
  bool counterexample_found = false;
  std::optional<LowerSet> counterexample;
  std::size_t max_len = 0;
  std::size_t nodes = 0;
};
std::string render_cover_verdict(const SeparatedGraph& g, const CoverVerdict& v);

// Searches J in Y0 with I contained in J and lengths <= max_len that is
// compatible with no member of `zs`. Since incompatibility with I_z persists
// upwards, it suffices to try J generated by I and one positive-ending path per
// member of `zs`, each incompatible with that member.
CoverVerdict is_cover_bounded(const SeparatedGraph& g, const LowerSet& i,
                              const std::vector<LowerSet>& zs, std::size_t max_len, Budget& budget);
// Literal version: walks all of Y0 above I. Used to cross-check the above.
CoverVerdict is_cover_bruteforce(const SeparatedGraph& g, const LowerSet& i,
                                 const std::vector<LowerSet>& zs, std::size_t max_len, Budget& budget);

EdgeId cover_witness(const SeparatedGraph& g, const LowerSet& j, int block);

// Checks the preconditions (throws PreconditionError) and then the identity
// e(I_z) sum_f (a0 mu f)(a0 mu f)* = sum_f e(I_z u {a0 mu f}-down).
bool claim1_check(const SeparatedGraph& g, const LowerSet& iz, const Path& alpha0,
                  const std::vector<Letter>& mu, int block);

std::vector<Element> basis_enumerate(const SeparatedGraph& g, std::size_t max_len, Budget& budget);

}  // namespace isg
