#include "isg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace isg {

std::string level_name(Level l) {
  switch (l) {
    case Level::Free: return "free";
    case Level::Toeplitz: return "toeplitz";
    case Level::Separated: return "separated";
  }
  return "?";
}

Level parse_level(std::string_view s) {
  if (s == "free") return Level::Free;
  if (s == "toeplitz") return Level::Toeplitz;
  if (s == "separated") return Level::Separated;
  throw InputError("unknown level '" + std::string(s) + "'");
}

bool element_less(const Element& a, const Element& b) {
  if (a.level() != b.level()) return a.level() < b.level();
  if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
  if (!(a.tree() == b.tree())) return lowerset_less(a.tree(), b.tree());
  return path_less(a.carrier(), b.carrier());
}

std::size_t ElementHash::operator()(const Element& e) const {
  if (e.is_zero()) return 0x51ed27;
  PathHash ph;
  std::size_t h = ph(e.carrier()) ^ (static_cast<std::size_t>(e.level()) << 3);
  for (const Path& p : e.tree().paths()) h = h * 1000003u ^ ph(p);
  return h;
}

namespace {

std::vector<Path> prefixes(const SeparatedGraph& g, const Path& p) {
  std::vector<Path> out;
  Path q = vertex_path(p.source);
  out.push_back(q);
  for (const Letter& x : p.letters) {
    push_letter(g, q, x);
    out.push_back(q);
  }
  return out;
}

LowerSet from_unsorted(VertexId base, std::vector<Path> ps) {
  std::sort(ps.begin(), ps.end(), PathLess{});
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return LowerSet::from_sorted(base, std::move(ps));
}

// T u g-down.
std::vector<Path> with_carrier(const SeparatedGraph& g, const LowerSet& t, const Path& p) {
  std::vector<Path> out = t.paths();
  for (Path& q : prefixes(g, p)) out.push_back(std::move(q));
  return out;
}

bool all_c_separated(const SeparatedGraph& g, const std::vector<Path>& ps) {
  return std::all_of(ps.begin(), ps.end(), [&](const Path& p) { return is_c_separated_path(g, p); });
}

}  // namespace

void validate_element(const SeparatedGraph& g, const Element& a) {
  if (a.is_zero()) return;
  const LowerSet& t = a.tree();
  const Path& c = a.carrier();
  auto fail = [](const std::string& m) { throw PreconditionError("invalid element: " + m); };
  if (c.source != t.base()) fail("carrier source differs from tree base");
  if (!is_reduced(c)) fail("carrier not reduced");
  for (const Path& p : t.paths()) {
    if (p.source != t.base() || !is_reduced(p)) fail("tree member not a reduced path at the base");
    if (!p.empty() && !t.contains(prefix(g, p, p.size() - 1))) fail("tree not lower-closed");
  }
  if (!t.contains(vertex_path(t.base()))) fail("tree misses the base vertex");
  if (a.level() == Level::Free) {
    if (!t.contains(c)) fail("carrier not in tree");
    return;
  }
  if (!t.contains(positive_part(g, c))) fail("positive part of carrier not in tree");
  if (!is_canonical(t)) fail("tree not canonical");
  if (a.level() == Level::Separated) {
    LowerSet tp = from_unsorted(t.base(), with_carrier(g, t, c));
    if (!all_c_separated(g, tp.paths())) fail("member not C-separated");
    if (!is_compatible_set(g, tp)) fail("T u g-down not C-compatible");
  }
}

Element from_vertex(const SeparatedGraph&, VertexId v, Level level) {
  return Element::make(level, LowerSet(v), vertex_path(v));
}

Element from_letter(const SeparatedGraph& g, Letter x, Level level) {
  const Path e = letter_path(g, Letter{x.edge, false});
  Element pos = Element::make(level, from_unsorted(e.source, prefixes(g, e)), e);
  return x.inverse ? inverse(g, pos) : pos;
}

Element from_token(const SeparatedGraph& g, const Token& t, Level level) {
  return t.is_vertex ? from_vertex(g, t.vertex, level) : from_letter(g, t.letter, level);
}

Element path_element(const SeparatedGraph& g, const Path& p, Level level) {
  LowerSet t = from_unsorted(p.source, prefixes(g, p));
  if (level == Level::Free) return Element::make(level, std::move(t), p);
  if (level == Level::Separated && !all_c_separated(g, t.paths())) return Element::zero(level);
  return Element::make(level, normalize_0(g, t), p);
}

Element idempotent_of(const SeparatedGraph& g, const LowerSet& t, Level level) {
  if (level == Level::Free) return Element::make(level, t, vertex_path(t.base()));
  if (level == Level::Separated &&
      (!all_c_separated(g, t.paths()) || !is_compatible_set(g, t))) {
    return Element::zero(level);
  }
  return Element::make(level, normalize_0(g, t), vertex_path(t.base()));
}

Element multiply(const SeparatedGraph& g, const Element& a, const Element& b) {
  if (a.level() != b.level()) throw PreconditionError("multiply: level mismatch");
  const Level level = a.level();
  if (a.is_zero() || b.is_zero()) return Element::zero(level);
  const Path& g1 = a.carrier();
  const Path& g2 = b.carrier();
  if (g1.range != g2.source) return Element::zero(level);
  Path prod = *translate(g, g1, g2);

  std::vector<Path> u;
  std::vector<Path> t2;
  if (level == Level::Free) {
    u = a.tree().paths();
    t2 = b.tree().paths();
  } else {
    u = with_carrier(g, a.tree(), g1);
    t2 = with_carrier(g, b.tree(), g2);
  }
  u.reserve(u.size() + t2.size());
  for (const Path& h : t2) u.push_back(*translate(g, g1, h));
  LowerSet un = from_unsorted(g1.source, std::move(u));
  if (level == Level::Free) return Element::make(level, std::move(un), std::move(prod));
  if (level == Level::Separated &&
      (!all_c_separated(g, un.paths()) || !is_compatible_configs(g, un))) {
    return Element::zero(level);
  }
  return Element::make(level, normalize_0(g, un), std::move(prod));
}

Element inverse(const SeparatedGraph& g, const Element& a) {
  if (a.is_zero()) return a;
  const Path ginv = inverse(g, a.carrier());
  std::vector<Path> src = a.level() == Level::Free ? a.tree().paths()
                                                   : with_carrier(g, a.tree(), a.carrier());
  std::vector<Path> out;
  out.reserve(src.size());
  for (const Path& h : src) out.push_back(*translate(g, ginv, h));
  LowerSet t = from_unsorted(ginv.source, std::move(out));
  if (a.level() != Level::Free) t = normalize_0(g, t);
  return Element::make(a.level(), std::move(t), ginv);
}

bool is_idempotent(const Element& a) { return a.is_zero() || a.carrier().empty(); }

bool natural_leq(const Element& a, const Element& b) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return a.level() == b.level() && a.carrier() == b.carrier() && b.tree().subset_of(a.tree());
}

FreeGroupWord grading(const Element& a) {
  if (a.is_zero()) throw PreconditionError("grading of zero");
  return omega(a.carrier());
}

Element to_level(const SeparatedGraph& g, const Element& a, Level target) {
  if (a.is_zero()) return Element::zero(target);
  if (a.level() == target) return a;
  if (static_cast<int>(target) < static_cast<int>(a.level())) {
    throw PreconditionError("to_level: cannot lift to a finer level");
  }
  Element cur = a;
  if (cur.level() == Level::Free) {
    cur = Element::make(Level::Toeplitz, normalize_0(g, cur.tree()), cur.carrier());
  }
  if (target == Level::Separated) {
    LowerSet tp = from_unsorted(cur.base(), with_carrier(g, cur.tree(), cur.carrier()));
    if (!all_c_separated(g, tp.paths()) || !is_compatible_set(g, tp)) {
      return Element::zero(target);
    }
    cur = Element::make(Level::Separated, cur.tree(), cur.carrier());
  }
  return cur;
}

Element parse_word(const SeparatedGraph& g, const std::vector<Token>& tokens, Level level) {
  if (tokens.empty()) throw InputError("empty word");
  Element acc = from_token(g, tokens.front(), level);
  for (std::size_t i = 1; i < tokens.size() && !acc.is_zero(); ++i) {
    acc = multiply(g, acc, from_token(g, tokens[i], level));
  }
  return acc;
}

Element parse_word(const SeparatedGraph& g, std::string_view text, Level level) {
  return parse_word(g, parse_tokens(g, text), level);
}

namespace {

std::string render_factors(const SeparatedGraph& g, std::vector<Path> factors, const Path& lambda) {
  std::sort(factors.begin(), factors.end(), PathLess{});
  std::string out;
  for (const Path& p : factors) out += "(" + render_path(g, p) + ")";
  return out + " | " + render_path(g, lambda);
}

void append_path_tokens(const SeparatedGraph& g, const Path& p, std::vector<Token>& out) {
  if (p.empty()) {
    out.push_back(Token{true, p.source, {}});
    return;
  }
  (void)g;
  for (const Letter& x : p.letters) out.push_back(Token{false, 0, x});
}

}  // namespace

std::string scheiblich_nf(const SeparatedGraph& g, const Element& a) {
  if (a.is_zero()) throw PreconditionError("zero has no normal form");
  return render_factors(g, max_elements(a.tree()), a.carrier());
}

std::string render_nf(const SeparatedGraph& g, const Element& a) {
  return a.is_zero() ? "0" : scheiblich_nf(g, a);
}

std::string render_all_leaves(const SeparatedGraph& g, const Element& a) {
  if (a.is_zero()) return "0";
  LowerSet tp = from_unsorted(a.base(), with_carrier(g, a.tree(), a.carrier()));
  return render_factors(g, max_elements(tp), a.carrier());
}

std::vector<Token> snf_word(const SeparatedGraph& g, const Element& a) {
  if (a.is_zero()) throw PreconditionError("zero has no normal form");
  std::vector<Token> out;
  for (const Path& p : max_elements(a.tree())) {
    append_path_tokens(g, p, out);
    append_path_tokens(g, inverse(g, p), out);
  }
  append_path_tokens(g, a.carrier(), out);
  return out;
}

Element parse_snf(const SeparatedGraph& g, std::string_view text, Level level) {
  std::string s(text);
  if (s.find_first_not_of(" \t") != std::string::npos &&
      s.substr(s.find_first_not_of(" \t"), 1) == "0" && s.find('|') == std::string::npos) {
    return Element::zero(level);
  }
  const auto bar = s.find('|');
  if (bar == std::string::npos) throw InputError("normal form lacks '|'");
  std::vector<Token> word;
  std::size_t pos = 0;
  const std::string head = s.substr(0, bar);
  while (true) {
    const auto open = head.find('(', pos);
    if (open == std::string::npos) break;
    const auto close = head.find(')', open);
    if (close == std::string::npos) throw InputError("unbalanced parenthesis in normal form");
    Path p = parse_path(g, head.substr(open + 1, close - open - 1));
    append_path_tokens(g, p, word);
    append_path_tokens(g, inverse(g, p), word);
    pos = close + 1;
  }
  append_path_tokens(g, parse_path(g, s.substr(bar + 1)), word);
  return parse_word(g, word, level);
}

bool theta_domain_contains(const SeparatedGraph& g, const Path& p, const LowerSet& t) {
  return p.source == t.base() && t.contains(positive_part(g, p));
}

LowerSet theta_apply(const SeparatedGraph& g, const Path& p, const LowerSet& t) {
  const Path pinv = inverse(g, p);
  if (!theta_domain_contains(g, pinv, t)) throw PreconditionError("theta: T outside D_{g^-1}");
  std::vector<Path> out;
  for (const Path& h : with_carrier(g, t, pinv)) out.push_back(*translate(g, p, h));
  return normalize_0(g, from_unsorted(p.source, std::move(out)));
}

std::vector<Automorphism> enumerate_automorphisms(const SeparatedGraph& g, Budget& budget) {
  std::vector<Automorphism> out;
  const int nv = g.vertex_count();
  const int ne = g.edge_count();
  std::vector<VertexId> vmap(nv);
  std::iota(vmap.begin(), vmap.end(), 0);
  std::vector<EdgeId> emap(ne, -1);
  std::vector<bool> used(ne, false);

  auto blocks_ok = [&]() {
    for (const Block& b : g.blocks()) {
      const int target = g.block_of(emap[b.edges.front()]);
      const Block& tb = g.block(target);
      if (tb.edges.size() != b.edges.size() || tb.cardinality != b.cardinality) return false;
      for (EdgeId e : b.edges) {
        if (g.block_of(emap[e]) != target) return false;
      }
    }
    return true;
  };
  auto assign = [&](auto&& self, int e) -> void {
    budget.tick();
    if (e == ne) {
      if (blocks_ok()) out.push_back({vmap, emap});
      return;
    }
    const Edge& ed = g.edge(e);
    for (EdgeId f = 0; f < ne; ++f) {
      if (used[f] || g.edge(f).source != vmap[ed.source] || g.edge(f).range != vmap[ed.range]) continue;
      used[f] = true;
      emap[e] = f;
      self(self, e + 1);
      used[f] = false;
    }
    emap[e] = -1;
  };
  do {
    budget.tick();
    assign(assign, 0);
  } while (std::next_permutation(vmap.begin(), vmap.end()));
  return out;
}

Path apply_automorphism(const SeparatedGraph& g, const Automorphism& phi, const Path& p) {
  Path q = vertex_path(phi.vertex_map[p.source]);
  for (const Letter& x : p.letters) push_letter(g, q, Letter{phi.edge_map[x.edge], x.inverse});
  return q;
}

Element apply_automorphism(const SeparatedGraph& g, const Automorphism& phi, const Element& a) {
  if (a.is_zero()) return a;
  std::vector<Path> ps;
  for (const Path& p : a.tree().paths()) ps.push_back(apply_automorphism(g, phi, p));
  return Element::make(a.level(), from_unsorted(phi.vertex_map[a.base()], std::move(ps)),
                       apply_automorphism(g, phi, a.carrier()));
}

std::string render_automorphism(const SeparatedGraph& g, const Automorphism& phi) {
  std::string out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += (out.empty() ? "" : " ") + g.vertex_name(v) + "->" + g.vertex_name(phi.vertex_map[v]);
  }
  out += " ;";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out += " " + g.edge(e).name + "->" + g.edge(phi.edge_map[e]).name;
  }
  return out;
}

}  // namespace isg
