#include "isg/algebra.hpp"

#include <algorithm>

namespace isg {

std::string render_scalar(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string render_algebra(const SeparatedGraph& g, const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : a.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      out += (c < 0 ? "-" : "");
    } else {
      out += (c < 0 ? " - " : " + ");
    }
    out += render_scalar(mag) + "·[" + scheiblich_nf(g, e) + "]";
  }
  return out;
}

AlgebraElement alg_vertex(const SeparatedGraph& g, VertexId v) {
  return AlgebraElement::basis(from_vertex(g, v, Level::Separated));
}

AlgebraElement alg_path(const SeparatedGraph& g, const Path& p) {
  return AlgebraElement::basis(path_element(g, p, Level::Separated));
}

AlgebraElement alg_word(const SeparatedGraph& g, std::string_view word) {
  return AlgebraElement::basis(parse_word(g, word, Level::Separated));
}

bool is_idempotent(const SeparatedGraph& g, const AlgebraElement& a) {
  return multiply(g, a, a) == a;
}

namespace {

void assert_idempotent(const SeparatedGraph& g, const AlgebraElement& a, const char* what) {
  if (!is_idempotent(g, a)) throw std::logic_error(std::string(what) + " produced a non-idempotent");
}

AlgebraElement proj(const SeparatedGraph& g, const Path& p) {
  const AlgebraElement x = alg_path(g, p);
  return multiply(g, x, star(g, x));
}

}  // namespace

AlgebraElement e_of(const SeparatedGraph& g, const LowerSet& i) {
  if (!is_compatible_set(g, i)) throw PreconditionError("e_of: lower set is not C-compatible");
  AlgebraElement r = alg_vertex(g, i.base());
  for (const Path& p : max_elements(i)) r = multiply(g, r, proj(g, p));
  assert_idempotent(g, r, "e_of");
  return r;
}

AlgebraElement e_diff(const SeparatedGraph& g, const Path& lambda0, const Path& lambda1) {
  auto lam = translate(g, lambda0, lambda1);
  if (!lam || lam->size() != lambda0.size() + lambda1.size()) {
    throw PreconditionError("e_diff: lambda0 lambda1 is not a reduced path");
  }
  AlgebraElement r = sub(proj(g, lambda0), proj(g, *lam));
  assert_idempotent(g, r, "e_diff");
  return r;
}

AlgebraElement e_cyl(const SeparatedGraph& g, const CylinderSet& b) {
  validate_cylinder(g, b);
  AlgebraElement r = e_of(g, b.i);
  for (const Path& f : b.f) {
    std::size_t k = 0;
    while (k < f.size() && b.i.contains(prefix(g, f, k + 1))) ++k;
    const Path l0 = prefix(g, f, k);
    const Path l1{l0.range, f.range, {f.letters.begin() + static_cast<long>(k), f.letters.end()}};
    r = multiply(g, r, e_diff(g, l0, l1));
  }
  assert_idempotent(g, r, "e_cyl");
  return r;
}

AlgebraElement q_of(const SeparatedGraph& g, int block) {
  const Block& b = g.block(block);
  if (b.cardinality != Cardinality::Finite) throw PreconditionError("q_of: block '" + b.name + "' is infinite");
  AlgebraElement r = alg_vertex(g, b.source);
  for (EdgeId e : b.edges) r = sub(r, proj(g, letter_path(g, Letter{e, false})));
  assert_idempotent(g, r, "q_of");
  return r;
}

AlgebraElement or_join(const SeparatedGraph& g, const AlgebraElement& p, const AlgebraElement& q) {
  const AlgebraElement pq = multiply(g, p, q);
  if (!(pq == multiply(g, q, p))) throw PreconditionError("or_join: inputs do not commute");
  if (!is_idempotent(g, p) || !is_idempotent(g, q)) throw PreconditionError("or_join: inputs not idempotent");
  AlgebraElement r = sub(add(p, q), pq);
  assert_idempotent(g, r, "or_join");
  return r;
}

std::string render_cover_verdict(const SeparatedGraph& g, const CoverVerdict& v) {
  if (v.counterexample_found) return "counterexample J = " + render_lower_set(g, *v.counterexample);
  return "no counterexample up to maxLen " + std::to_string(v.max_len);
}

namespace {

bool compatible_with(const SeparatedGraph& g, const LowerSet& a, const LowerSet& b) {
  return is_compatible_set(g, union_of(g, a, b));
}

void check_cover_inputs(const LowerSet& i, const std::vector<LowerSet>& zs) {
  for (const LowerSet& z : zs) {
    if (!i.subset_of(z)) throw PreconditionError("is_cover: I is not contained in every I_z");
  }
}

}  // namespace

CoverVerdict is_cover_bounded(const SeparatedGraph& g, const LowerSet& i,
                              const std::vector<LowerSet>& zs, std::size_t max_len, Budget& budget) {
  check_cover_inputs(i, zs);
  CoverVerdict v;
  v.max_len = max_len;
  if (zs.empty()) {
    v.counterexample_found = true;
    v.counterexample = i;
    return v;
  }
  const auto paths = c_separated_paths(g, i.base(), max_len);
  // Candidate witnesses for each z.
  std::vector<std::vector<Path>> cand(zs.size());
  for (std::size_t k = 0; k < zs.size(); ++k) {
    for (const Path& p : paths) {
      budget.tick();
      if (ends_inverse(p) || p.empty()) continue;
      const auto& zp = zs[k].paths();
      const bool clash = std::any_of(zp.begin(), zp.end(), [&](const Path& q) { return !is_c_compatible(g, p, q); });
      if (clash) cand[k].push_back(p);
    }
    if (cand[k].empty()) {
      v.nodes = budget.used();
      return v;
    }
  }
  std::vector<std::size_t> idx(zs.size(), 0);
  while (true) {
    budget.tick();
    std::vector<Path> gens = i.paths();
    for (std::size_t k = 0; k < zs.size(); ++k) gens.push_back(cand[k][idx[k]]);
    LowerSet j = lower_closure_unchecked(g, i.base(), gens);
    if (is_compatible_set(g, j)) {
      v.counterexample_found = true;
      v.counterexample = j;
      break;
    }
    std::size_t k = 0;
    while (k < zs.size() && idx[k] + 1 == cand[k].size()) idx[k++] = 0;
    if (k == zs.size()) break;
    ++idx[k];
  }
  v.nodes = budget.used();
  return v;
}

CoverVerdict is_cover_bruteforce(const SeparatedGraph& g, const LowerSet& i,
                                 const std::vector<LowerSet>& zs, std::size_t max_len, Budget& budget) {
  check_cover_inputs(i, zs);
  CoverVerdict v;
  v.max_len = max_len;
  enumerate_y0(g, i, max_len, budget, [&](const LowerSet& j) {
    if (v.counterexample_found) return;
    const bool met = std::any_of(zs.begin(), zs.end(), [&](const LowerSet& z) { return compatible_with(g, j, z); });
    if (!met) {
      v.counterexample_found = true;
      v.counterexample = j;
    }
  });
  v.nodes = budget.used();
  return v;
}

EdgeId cover_witness(const SeparatedGraph& g, const LowerSet& j, int block) {
  const Block& b = g.block(block);
  if (b.cardinality != Cardinality::Finite) throw PreconditionError("cover_witness: block is infinite");
  if (j.base() != b.source) throw PreconditionError("cover_witness: J and X at different vertices");
  EdgeId x = b.edges.front();
  for (const Path& m : max_elements(j)) {
    if (m.empty() || m.letters.front().inverse) continue;
    const EdgeId e = m.letters.front().edge;
    if (g.block_of(e) == block) {
      x = e;
      break;
    }
  }
  std::vector<Path> gens = j.paths();
  gens.push_back(letter_path(g, Letter{x, false}));
  if (!is_compatible_set(g, lower_closure_unchecked(g, j.base(), gens))) {
    throw std::logic_error("cover_witness: witness fails validation");
  }
  return x;
}

bool claim1_check(const SeparatedGraph& g, const LowerSet& iz, const Path& alpha0,
                  const std::vector<Letter>& mu, int block) {
  const Block& b = g.block(block);
  if (b.cardinality != Cardinality::Finite) throw PreconditionError("claim1: block is infinite");
  if (!iz.contains(alpha0)) throw PreconditionError("claim1: alpha0 not in I_z");
  Path a = alpha0;
  for (Letter x : mu) {
    if (!x.inverse) throw PreconditionError("claim1: mu must consist of inverse letters");
    if (letter_source(g, x) != a.range) throw PreconditionError("claim1: mu is not composable");
    push_letter(g, a, x);
  }
  if (a.range != b.source) throw PreconditionError("claim1: X does not sit at r(alpha0 mu)");
  AlgebraElement lhs_sum;
  AlgebraElement rhs;
  for (EdgeId e : b.edges) {
    Path f = a;
    push_letter(g, f, Letter{e, false});
    if (!is_reduced(f) || !is_c_separated_path(g, f)) {
      throw PreconditionError("claim1: alpha0 mu f is not C-separated");
    }
    if (iz.contains(f)) throw PreconditionError("claim1: alpha0 mu f already lies in I_z");
    std::vector<Path> gens = iz.paths();
    gens.push_back(f);
    LowerSet u = lower_closure_unchecked(g, iz.base(), gens);
    if (!is_compatible_set(g, u)) throw PreconditionError("claim1: I_z u {alpha0 mu f} not compatible");
    lhs_sum = add(lhs_sum, proj(g, f));
    rhs = add(rhs, e_of(g, u));
  }
  return multiply(g, e_of(g, iz), lhs_sum) == rhs;
}

std::vector<Element> basis_enumerate(const SeparatedGraph& g, std::size_t max_len, Budget& budget) {
  std::vector<Element> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto carriers = c_separated_paths(g, v, max_len);
    enumerate_y0(g, LowerSet(v), max_len, budget, [&](const LowerSet& t) {
      for (const Path& c : carriers) {
        budget.tick();
        if (!t.contains(positive_part(g, c))) continue;
        std::vector<Path> gens = t.paths();
        gens.push_back(c);
        if (!is_compatible_set(g, lower_closure_unchecked(g, v, gens))) continue;
        out.push_back(Element::make(Level::Separated, t, c));
      }
    });
  }
  std::sort(out.begin(), out.end(), ElementLess{});
  return out;
}

}  // namespace isg
