#include "isg/sampling.hpp"

#include <algorithm>

namespace isg {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

bool try_add(const SeparatedGraph& g, LowerSet& cur, const Path& p) {
  if (cur.contains(p)) return false;
  std::vector<Path> gens = cur.paths();
  gens.push_back(p);
  LowerSet next = lower_closure_unchecked(g, cur.base(), gens);
  if (!is_compatible_set(g, next)) return false;
  cur = std::move(next);
  return true;
}

}  // namespace

std::vector<Token> all_tokens(const SeparatedGraph& g) {
  std::vector<Token> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(Token{true, v, {}});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out.push_back(Token{false, 0, Letter{e, false}});
    out.push_back(Token{false, 0, Letter{e, true}});
  }
  return out;
}

std::vector<Token> random_word(const SeparatedGraph& g, Rng& rng, std::size_t max_len) {
  const auto alpha = all_tokens(g);
  const std::size_t len = 1 + pick(rng, max_len);
  std::vector<Token> w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(alpha[pick(rng, alpha.size())]);
  return w;
}

std::vector<Token> random_walk(const SeparatedGraph& g, Rng& rng, std::size_t max_len) {
  const std::size_t len = 1 + pick(rng, max_len);
  VertexId at = static_cast<VertexId>(pick(rng, static_cast<std::size_t>(g.vertex_count())));
  std::vector<Token> w;
  for (std::size_t i = 0; i < len; ++i) {
    const auto opts = letters_at(g, at);
    if (opts.empty()) {
      if (w.empty()) w.push_back(Token{true, at, {}});
      break;
    }
    const Letter x = opts[pick(rng, opts.size())];
    w.push_back(Token{false, 0, x});
    at = letter_range(g, x);
  }
  return w;
}

LowerSet random_lower_set(const SeparatedGraph& g, Rng& rng, VertexId v, std::size_t max_len) {
  const auto paths = c_separated_paths(g, v, max_len);
  std::vector<Path> gens;
  const std::size_t n = pick(rng, 4);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(paths[pick(rng, paths.size())]);
  return lower_closure_unchecked(g, v, gens);
}

LowerSet random_y0(const SeparatedGraph& g, Rng& rng, const LowerSet& seed, std::size_t max_len,
                   std::size_t tries) {
  const auto paths = c_separated_paths(g, seed.base(), max_len);
  LowerSet cur = seed;
  const std::size_t n = pick(rng, tries + 1);
  for (std::size_t i = 0; i < n; ++i) try_add(g, cur, paths[pick(rng, paths.size())]);
  return cur;
}

std::optional<CylinderSet> random_cylinder(const SeparatedGraph& g, Rng& rng, VertexId v, std::size_t max_len) {
  LowerSet i = normalize_0(g, random_y0(g, rng, LowerSet(v), max_len > 0 ? max_len - 1 : 0, 3));
  Budget budget;
  const auto n = enumerate_N(g, i, max_len, budget);
  std::vector<Path> f;
  if (!n.empty()) {
    const std::size_t k = pick(rng, 3);
    for (std::size_t j = 0; j < k; ++j) f.push_back(n[pick(rng, n.size())]);
  }
  try {
    return make_cylinder(g, std::move(i), std::move(f));
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

FilterTruncation random_truncation(const SeparatedGraph& g, Rng& rng, VertexId v, std::size_t depth,
                                   const std::vector<Path>& hints) {
  LowerSet cur(v);
  std::vector<Path> order = hints;
  std::shuffle(order.begin(), order.end(), rng);
  for (const Path& h : order) {
    if (h.source == v && h.size() < depth && pick(rng, 2) == 0) try_add(g, cur, h);
  }
  cur = random_y0(g, rng, cur, depth - 1, 4);
  return make_truncation(g, std::move(cur), depth);
}

}  // namespace isg
