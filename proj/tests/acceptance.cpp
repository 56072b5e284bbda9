// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "isg/algebra.hpp"
#include "isg/errors.hpp"
#include "isg/graph.hpp"
#include "isg/oracle.hpp"
#include "isg/parallel.hpp"
#include "isg/sampling.hpp"
#include "isg/semigroup.hpp"
#include "isg/spectrum.hpp"

using namespace isg;

namespace {

SeparatedGraph graph(const std::string& name) {
  return load_graph(std::string(ISG_DATA_DIR) + "/" + name + ".sg");
}

const std::vector<std::string> kMain{"rose2t", "rose2f", "fim2"};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail << " [" << why << "]";
    }
  }
};

std::vector<Token> path_tokens(const Path& p) {
  if (p.empty()) return {Token{true, p.source, {}}};
  std::vector<Token> out;
  for (Letter x : p.letters) out.push_back(Token{false, 0, x});
  return out;
}

void append(std::vector<Token>& w, const std::vector<Token>& more) { w.insert(w.end(), more.begin(), more.end()); }

// prod over max(I) of lambda lambda^-1, as a word
std::vector<Token> idempotent_word(const SeparatedGraph& g, const LowerSet& i) {
  std::vector<Token> w;
  for (const Path& m : max_elements(i)) {
    append(w, path_tokens(m));
    append(w, path_tokens(inverse(g, m)));
  }
  if (w.empty()) w = path_tokens(vertex_path(i.base()));
  return w;
}

// Every token word of length 1..max_len.
std::vector<std::vector<Token>> all_words(const SeparatedGraph& g, std::size_t max_len) {
  const auto alpha = all_tokens(g);
  std::vector<std::vector<Token>> out, layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Token>> next;
    for (const auto& w : layer) {
      for (const Token& t : alpha) {
        auto x = w;
        x.push_back(t);
        next.push_back(std::move(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Element> distinct_elements(const SeparatedGraph& g, std::size_t max_len) {
  std::set<Element, ElementLess> seen;
  for (const auto& w : all_words(g, max_len)) {
    const Element e = parse_word(g, w, Level::Separated);
    if (!e.is_zero()) seen.insert(e);
  }
  return {seen.begin(), seen.end()};
}

std::map<std::string, std::vector<Element>> g_elements;
const std::vector<Element>& elements_of(const std::string& name, const SeparatedGraph& g) {
  auto it = g_elements.find(name);
  if (it == g_elements.end()) it = g_elements.emplace(name, distinct_elements(g, 5)).first;
  return it->second;
}

// 1
void golden(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  auto f = graph("rose2f");
  const Element u = parse_word(f, "e e ~e f ~f e f f ~f e ~e ~f ~f", Level::Separated);
  const std::string nf = scheiblich_nf(f, u);
  const std::string gr = render_free_group_word(f, grading(u));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(nf == "(e f)(e e f f)(e e f e) | e e ~f", "nf " + nf);
  o.require(gr == "e^2 f^-1", "grading " + gr);
  o.require(secs < 1.0, "slow");
  o.detail << nf << " grading " << gr;
}

// 2
void crosscheck(Outcome& o) {
  for (const auto& name : kMain) {
    auto g = graph(name);
    Rng rng(1001);
    std::vector<std::vector<Token>> words, walks;
    for (int s = 0; s < 10000; ++s) words.push_back(random_word(g, rng, 10));
    for (int s = 0; s < 10000; ++s) walks.push_back(random_walk(g, rng, 10));
    const CrosscheckReport a = crosscheck_parallel(g, words);
    const CrosscheckReport b = crosscheck_parallel(g, walks);
    o.require(a.disagreements == 0 && b.disagreements == 0, name + " disagreement");
    o.detail << name << ": uniform " << a.agreements << "/" << a.samples << " (" << a.zeros << " zero), walks "
             << b.agreements << "/" << b.samples << "; ";
  }
}

// 3
void rewriting(Outcome& o) {
  auto t = graph("rose2t");
  oracle::RewriteClosure rc(t, 8);
  const auto& tc = rc.coder();
  std::unordered_map<std::size_t, std::string> by_class;
  std::size_t words = 0, violations = 0;
  for (const auto& w : all_words(t, 6)) {
    ++words;
    const std::string nf = render_nf(t, parse_word(t, w, Level::Separated));
    const std::size_t root = rc.find(rc.index(tc.encode(w)));
    auto [it, fresh] = by_class.emplace(root, nf);
    if (!fresh && it->second != nf) ++violations;
  }
  // the zero class as well
  const std::size_t zroot = rc.find(rc.zero_index());
  if (auto it = by_class.find(zroot); it != by_class.end() && it->second != "0") ++violations;
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.detail << words << " words in " << by_class.size() << " classes, " << violations << " violations";
}

// 4
void fim_embedding(Outcome& o) {
  auto m = graph("fim2");
  std::vector<oracle::FimWord> words{{}}, layer{{}};
  for (int len = 1; len <= 5; ++len) {
    std::vector<oracle::FimWord> next;
    for (const auto& w : layer) {
      for (int x : {1, -1, 2, -2}) {
        auto y = w;
        y.push_back(x);
        next.push_back(y);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  // equal partitions iff the class-id pairs form a bijection
  std::map<std::pair<std::vector<oracle::FimWord>, oracle::FimWord>, int> tree_id;
  std::map<Element, int, ElementLess> elem_id;
  std::map<int, int> fwd, back;
  bool agree = true;
  for (const auto& w : words) {
    const oracle::MunnTree t = oracle::fim_munn_tree(w);
    const int a = tree_id.emplace(std::make_pair(t.vertices, t.end), static_cast<int>(tree_id.size())).first->second;
    const Element img = parse_word(m, oracle::phi_embed(m, w), Level::Separated);
    if (img.is_zero()) agree = false;
    const int b = elem_id.emplace(img, static_cast<int>(elem_id.size())).first->second;
    if (fwd.emplace(a, b).first->second != b || back.emplace(b, a).first->second != a) agree = false;
  }
  o.require(agree, "partitions differ");
  o.detail << words.size() << " words, " << tree_id.size() << " Munn classes, " << elem_id.size() << " images";
}

// 5
void axioms(Outcome& o) {
  for (const auto& name : kMain) {
    auto g = graph(name);
    const auto& els = elements_of(name, g);
    std::vector<Element> idem;
    std::size_t bad = 0;
    for (const Element& a : els) {
      if (!(multiply(g, multiply(g, a, inverse(g, a)), a) == a)) ++bad;
      if (is_idempotent(a)) idem.push_back(a);
    }
    std::size_t noncomm = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : noncomm)
    for (std::size_t i = 0; i < idem.size(); ++i) {
      for (std::size_t j = i + 1; j < idem.size(); ++j) {
        if (!(multiply(g, idem[i], idem[j]) == multiply(g, idem[j], idem[i]))) ++noncomm;
      }
    }
    Rng rng(505);
    std::size_t nonassoc = 0;
    for (int s = 0; s < 10000; ++s) {
      const Element a = parse_word(g, random_walk(g, rng, 6), Level::Separated);
      const Element b = parse_word(g, random_walk(g, rng, 6), Level::Separated);
      const Element c = parse_word(g, random_walk(g, rng, 6), Level::Separated);
      if (!(multiply(g, multiply(g, a, b), c) == multiply(g, a, multiply(g, b, c)))) ++nonassoc;
    }
    o.require(bad == 0 && noncomm == 0 && nonassoc == 0, name + " axiom violated");
    o.detail << name << ": " << els.size() << " elements, " << idem.size() << " idempotents; ";
  }
}

// 6
void semilattice_laws(Outcome& o) {
  for (const auto& name : kMain) {
    auto g = graph(name);
    Rng rng(606);
    std::size_t bad = 0, comparable = 0;
    std::vector<LowerSet> sets;
    for (int s = 0; s < 1000; ++s) {
      LowerSet i = random_y0(g, rng, LowerSet(0), 4);
      // pad with a few inverse-ending leaves so normalization has work to do
      if (s % 2 == 1) {
        std::vector<Path> gens = i.paths();
        for (const Path& p : c_separated_paths(g, 0, 3)) {
          if (ends_inverse(p) && rng() % 4 == 0) gens.push_back(p);
        }
        const LowerSet j = lower_closure_unchecked(g, 0, gens);
        if (is_compatible_set(g, j)) i = j;
      }
      const LowerSet i0 = normalize_0(g, i);
      if (!class_eq(g, i, i0)) ++bad;
      if (oracle::snf_string_algorithm(g, idempotent_word(g, i)) !=
          oracle::snf_string_algorithm(g, idempotent_word(g, i0))) {
        ++bad;
      }
      sets.push_back(i);
    }
    for (std::size_t k = 0; k < sets.size(); ++k) {
      const LowerSet& i = sets[k];
      // half the partners are grown from I so that the order is often met
      const LowerSet j = (k % 2 == 0) ? sets[(k * 7 + 3) % sets.size()] : random_y0(g, rng, i, 4);
      const LowerSet i0 = normalize_0(g, i), j0 = normalize_0(g, j);
      const bool sub = j0.subset_of(i0);
      if (class_leq(g, i, j) != sub) ++bad;
      auto wij = idempotent_word(g, i);
      append(wij, idempotent_word(g, j));
      const bool oracle_leq =
          oracle::snf_string_algorithm(g, wij) == oracle::snf_string_algorithm(g, idempotent_word(g, i));
      if (oracle_leq != sub) ++bad;
      if (sub) ++comparable;
    }
    o.require(bad == 0, name + " " + std::to_string(bad) + " mismatches");
    o.detail << name << ": 1000 sets, " << comparable << " comparable pairs; ";
  }
}

// 7
void cylinders(Outcome& o) {
  for (const auto& name : kMain) {
    auto g = graph(name);
    Rng rng(707);
    int pairs = 0, empty = 0;
    std::size_t bad = 0;
    while (pairs < 200) {
      auto b1 = random_cylinder(g, rng, 0, 3);
      auto b2 = random_cylinder(g, rng, 0, 3);
      if (!b1 || !b2) continue;
      ++pairs;
      const auto inter = cylinder_intersect(g, *b1, *b2);
      if (!inter) ++empty;
      const auto diff = cylinder_difference(g, *b1, *b2);
      std::vector<Path> hints = b1->i.paths();
      hints.insert(hints.end(), b2->i.paths().begin(), b2->i.paths().end());
      hints.insert(hints.end(), b1->f.begin(), b1->f.end());
      hints.insert(hints.end(), b2->f.begin(), b2->f.end());
      for (int s = 0; s < 500; ++s) {
        const FilterTruncation z = random_truncation(g, rng, 0, 6, hints);
        const bool m1 = cylinder_member(g, z, *b1), m2 = cylinder_member(g, z, *b2);
        if ((inter ? cylinder_member(g, z, *inter) : false) != (m1 && m2)) ++bad;
        std::size_t hits = 0;
        for (const CylinderSet& d : diff) hits += cylinder_member(g, z, d) ? 1 : 0;
        // at most one piece: disjointness; exactly one iff in B1 \ B2
        if (hits != ((m1 && !m2) ? 1u : 0u)) ++bad;
      }
    }
    o.require(bad == 0, name + " " + std::to_string(bad) + " mismatches");
    o.detail << name << ": 200 pairs (" << empty << " empty intersections); ";
  }
}

// 8
void covers(Outcome& o) {
  for (const std::string name : {"rose2t", "rose2f", "fim2", "rose1"}) {
    auto g = graph(name);
    for (int bl = 0; bl < g.block_count(); ++bl) {
      const Block& b = g.block(bl);
      if (b.cardinality != Cardinality::Finite) continue;
      const LowerSet v(b.source);
      std::vector<LowerSet> zs;
      for (EdgeId e : b.edges) zs.push_back(lower_closure_unchecked(g, b.source, {letter_path(g, Letter{e, false})}));
      Budget budget(20'000'000);
      const CoverVerdict cv = is_cover_bounded(g, v, zs, 4, budget);
      o.require(!cv.counterexample_found, name + " cover fails");
      // witnesses over Y0, lowering the depth if the enumeration is too large
      std::size_t depth = 4, checked = 0;
      while (true) {
        checked = 0;
        try {
          Budget wb(30'000'000);
          enumerate_y0(g, v, depth, wb, [&](const LowerSet& j) {
            cover_witness(g, j, bl);
            ++checked;
          });
          break;
        } catch (const BudgetExceeded&) {
          --depth;
        }
      }
      o.detail << name << "/" << b.name << ": " << render_cover_verdict(g, cv) << ", " << checked
               << " witnesses at depth " << depth << "; ";
    }
  }
}

// 9
void claim1(Outcome& o) {
  for (const auto& name : kMain) {
    auto g = graph(name);
    Rng rng(909);
    int valid = 0, tries = 0;
    std::size_t bad = 0;
    while (valid < 100 && tries < 50000) {
      ++tries;
      const LowerSet iz = normalize_0(g, random_y0(g, rng, LowerSet(0), 3));
      const Path a0 = iz.paths()[rng() % iz.size()];
      std::vector<Letter> mu;
      Path a = a0;
      const int steps = static_cast<int>(rng() % 3);
      for (int k = 0; k < steps; ++k) {
        const auto& in = g.in_edges(a.range);
        if (in.empty()) break;
        const Letter x{in[rng() % in.size()], true};
        if (!a.empty() && a.back() == x.inv()) break;
        mu.push_back(x);
        push_letter(g, a, x);
      }
      std::vector<int> finite;
      for (int b : g.blocks_at(a.range)) {
        if (g.block(b).cardinality == Cardinality::Finite) finite.push_back(b);
      }
      if (finite.empty()) continue;
      try {
        if (!claim1_check(g, iz, a0, mu, finite[rng() % finite.size()])) ++bad;
        ++valid;
      } catch (const PreconditionError&) {
      }
    }
    o.require(valid == 100 && bad == 0, name + " valid " + std::to_string(valid) + " bad " + std::to_string(bad));
    o.detail << name << ": " << valid << " valid of " << tries << " draws; ";
  }
}

// 10
void collapse(Outcome& o) {
  for (const std::string name : {"rose2t", "rose2f", "fim2", "rose1"}) {
    auto g = graph(name);
    o.require(is_finitely_separated(g), name + " not finitely separated");
    std::size_t n = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (const LocalConfig& c : admissible_configs(g, v)) {
        ++n;
        o.require(is_maximal_config(g, c) == is_finite_maximal_config(g, c), name + " differs");
      }
    }
    o.detail << name << ": " << n << " configs; ";
  }
  // and the collapse fails once a block is infinite
  auto inf = graph("infsource");
  bool differs = false;
  for (VertexId v = 0; v < inf.vertex_count(); ++v) {
    for (const LocalConfig& c : admissible_configs(inf, v)) {
      differs = differs || is_maximal_config(inf, c) != is_finite_maximal_config(inf, c);
    }
  }
  o.require(differs, "infsource shows no difference");
  o.detail << "infsource differs";
}

// 11
void automorphisms(Outcome& o) {
  const std::map<std::string, std::size_t> expect{{"rose2t", 2}, {"fim2", 8}};
  for (const auto& [name, count] : expect) {
    auto g = graph(name);
    Budget budget;
    const auto auts = enumerate_automorphisms(g, budget);
    o.require(auts.size() == count, name + " |Aut| = " + std::to_string(auts.size()));
    Rng rng(1111);
    std::size_t bad = 0;
    for (int s = 0; s < 1000; ++s) {
      const Automorphism& phi = auts[rng() % auts.size()];
      const Element a = parse_word(g, random_walk(g, rng, 6), Level::Separated);
      const Element b = parse_word(g, random_walk(g, rng, 6), Level::Separated);
      const Element lhs = apply_automorphism(g, phi, multiply(g, a, b));
      const Element rhs = multiply(g, apply_automorphism(g, phi, a), apply_automorphism(g, phi, b));
      if (!(lhs == rhs)) ++bad;
    }
    o.require(bad == 0, name + " not multiplicative");
    o.detail << name << ": |Aut| = " << auts.size() << "; ";
  }
}

// Distinct nonzero oracle normal forms of words prod_{gamma in A} gamma gamma^-1 lambda
// with A a set of positive-ending paths and lambda a path, all of length <= len.
std::size_t oracle_basis_count(const SeparatedGraph& g, std::size_t len) {
  std::set<std::string> nfs;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto paths = c_separated_paths(g, v, len);
    std::vector<Path> pos;
    for (const Path& p : paths) {
      if (!p.empty() && !ends_inverse(p)) pos.push_back(p);
    }
    if (pos.size() > 16) throw PreconditionError("oracle_basis_count: too many paths");
    for (std::size_t mask = 0; mask < (std::size_t{1} << pos.size()); ++mask) {
      std::vector<Token> head;
      for (std::size_t k = 0; k < pos.size(); ++k) {
        if (mask >> k & 1) {
          append(head, path_tokens(pos[k]));
          append(head, path_tokens(inverse(g, pos[k])));
        }
      }
      for (const Path& lam : paths) {
        auto w = head;
        append(w, path_tokens(lam));
        const std::string nf = oracle::snf_string_algorithm(g, w);
        if (nf != "0") nfs.insert(nf);
      }
    }
  }
  return nfs.size();
}

// 12
void basis(Outcome& o) {
  const std::map<std::string, std::size_t> count_len{{"rose2t", 3}, {"rose2f", 2}, {"fim2", 1}};
  for (const auto& name : kMain) {
    auto g = graph(name);
    const auto& els = elements_of(name, g);
    Rng rng(1212);
    std::size_t bad = 0;
    for (int s = 0; s < 10000; ++s) {
      const Element& x = els[rng() % els.size()];
      const Element& y = els[rng() % els.size()];
      const AlgebraElement p = multiply(g, AlgebraElement::basis(x), AlgebraElement::basis(y));
      if (p.support_size() > 1) ++bad;
      for (const auto& [e, c] : p.terms()) {
        if (c != 1) ++bad;
        try {
          validate_element(g, e);
        } catch (const PreconditionError&) {
          ++bad;
        }
      }
    }
    const std::size_t len = count_len.at(name);
    Budget budget(20'000'000);
    const std::size_t engine = basis_enumerate(g, len, budget).size();
    const std::size_t oracle = oracle_basis_count(g, len);
    o.require(bad == 0, name + " product outside basis");
    o.require(engine == oracle, name + " count " + std::to_string(engine) + " vs " + std::to_string(oracle));
    o.detail << name << ": basis(" << len << ") = " << engine << " = oracle " << oracle << "; ";
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"golden normal form", golden},
      {"word problem crosscheck", crosscheck},
      {"rewriting soundness", rewriting},
      {"free inverse monoid embedding", fim_embedding},
      {"inverse semigroup axioms", axioms},
      {"semilattice laws", semilattice_laws},
      {"cylinder algebra", cylinders},
      {"cover theorem", covers},
      {"claim 1 identity", claim1},
      {"finite-maximal collapse", collapse},
      {"automorphism rigidity", automorphisms},
      {"basis closure", basis},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail << " [exception: " << ex.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << " (" << timing
              << "): " << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
