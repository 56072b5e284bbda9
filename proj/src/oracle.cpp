#include "isg/oracle.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_set>

#include "isg/errors.hpp"

namespace isg::oracle {

namespace {

bool same_block_pair(const SeparatedGraph& g, Letter a, Letter b) {
  return a.inverse && !b.inverse && g.block_of(a.edge) == g.block_of(b.edge);
}

// Cancels e^-1 f inside a block until none is left; nullopt is zero.
std::optional<std::vector<Letter>> separate(const SeparatedGraph& g, const std::vector<Letter>& in) {
  std::vector<Letter> st;
  st.reserve(in.size());
  for (Letter x : in) {
    if (!st.empty() && same_block_pair(g, st.back(), x)) {
      if (st.back().edge != x.edge) return std::nullopt;
      st.pop_back();
      continue;
    }
    st.push_back(x);
  }
  return st;
}

Path as_path(const SeparatedGraph& g, VertexId src, const std::vector<Letter>& ls) {
  Path p = vertex_path(src);
  for (Letter x : ls) push_letter(g, p, x);
  return p;
}

}  // namespace

std::string snf_string_algorithm(const SeparatedGraph& g, const std::vector<Token>& word) {
  auto composed = compose_tokens(g, word);
  if (!composed) return "0";
  const VertexId src = composed->source;
  auto cur = separate(g, composed->letters);
  if (!cur) return "0";

  std::vector<Path> factors;
  while (true) {
    std::size_t i = 0;
    while (i + 1 < cur->size() && !((*cur)[i + 1] == (*cur)[i].inv())) ++i;
    if (i + 1 >= cur->size()) break;
    // The cancelling pair is y y^-1 with y positive: y^-1 y was already cancelled.
    factors.push_back(as_path(g, src, {cur->begin(), cur->begin() + static_cast<long>(i) + 1}));
    std::vector<Letter> rest(cur->begin(), cur->begin() + static_cast<long>(i));
    rest.insert(rest.end(), cur->begin() + static_cast<long>(i) + 2, cur->end());
    cur = separate(g, rest);
    if (!cur) return "0";
  }
  const Path lambda = as_path(g, src, *cur);

  std::vector<Path> all = factors;
  all.push_back(lambda);
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (!is_c_compatible(g, all[a], all[b])) return "0";
    }
  }

  std::vector<Path> cand = factors;
  cand.push_back(positive_part(g, lambda));
  std::sort(cand.begin(), cand.end(), PathLess{});
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::string out;
  for (const Path& p : cand) {
    const bool covered = std::any_of(cand.begin(), cand.end(), [&](const Path& q) {
      return q.size() > p.size() && is_prefix(p, q);
    });
    if (!covered) out += "(" + render_path(g, p) + ")";
  }
  return out + " | " + render_path(g, lambda);
}

std::string snf_string_algorithm(const SeparatedGraph& g, std::string_view word) {
  return snf_string_algorithm(g, parse_tokens(g, word));
}

TokenCoder::TokenCoder(const SeparatedGraph& g)
    : edges_(g.edge_count()), alphabet_(2 * g.edge_count() + g.vertex_count()) {
  if (alphabet_ > 255) throw PreconditionError("rewriting oracle supports at most 255 tokens");
  source_.resize(alphabet_);
  range_.resize(alphabet_);
  for (EdgeId e = 0; e < edges_; ++e) {
    source_[2 * e] = range_[2 * e + 1] = g.edge(e).source;
    range_[2 * e] = source_[2 * e + 1] = g.edge(e).range;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) source_[2 * edges_ + v] = range_[2 * edges_ + v] = v;
}

std::string TokenCoder::encode(const std::vector<Token>& w) const {
  std::string s;
  for (const Token& t : w) {
    s.push_back(t.is_vertex ? vertex_token(t.vertex)
                            : static_cast<char>(2 * t.letter.edge + (t.letter.inverse ? 1 : 0)));
  }
  return s;
}

std::vector<Token> TokenCoder::decode(const std::string& s) const {
  std::vector<Token> w;
  for (char c : s) {
    const int k = static_cast<unsigned char>(c);
    if (is_vertex(c)) {
      w.push_back(Token{true, k - 2 * edges_, {}});
    } else {
      w.push_back(Token{false, 0, Letter{k / 2, (k & 1) != 0}});
    }
  }
  return w;
}

char TokenCoder::star(char c) const { return is_vertex(c) ? c : static_cast<char>(c ^ 1); }

void shrinking_neighbours(const SeparatedGraph& g, const TokenCoder& tc, const std::string& s,
                          std::size_t half, std::vector<std::string>& out, bool& zero) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const char a = s[i], b = s[i + 1];
    if (tc.range(a) != tc.source(b)) {
      zero = true;
      continue;
    }
    // s(x) x -> x and x r(x) -> x, vertices included.
    if (tc.is_vertex(a)) out.push_back(s.substr(0, i) + s.substr(i + 1));
    if (tc.is_vertex(b)) out.push_back(s.substr(0, i + 1) + s.substr(i + 2));
    if (!tc.is_vertex(a) && !tc.is_vertex(b)) {
      const int ka = static_cast<unsigned char>(a), kb = static_cast<unsigned char>(b);
      const Letter la{ka / 2, (ka & 1) != 0}, lb{kb / 2, (kb & 1) != 0};
      if (same_block_pair(g, la, lb)) {
        if (la.edge == lb.edge) {
          out.push_back(s.substr(0, i) + tc.vertex_token(tc.range(b)) + s.substr(i + 2));
        } else {
          zero = true;
        }
      }
    }
  }
  auto is_square = [&](std::size_t at, std::size_t len) {
    for (std::size_t k = 0; k < len; ++k) {
      if (s[at + len + k] != tc.star(s[at + len - 1 - k])) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t lu = 1; lu <= half && i + 2 * lu < n; ++lu) {
      if (!is_square(i, lu)) continue;
      const std::size_t j = i + 2 * lu;
      for (std::size_t lw = 1; lw <= half && j + 2 * lw <= n; ++lw) {
        if (!is_square(j, lw)) continue;
        std::string t = s.substr(0, i) + s.substr(j, 2 * lw) + s.substr(i, 2 * lu) + s.substr(j + 2 * lw);
        if (t != s) out.push_back(std::move(t));
      }
    }
  }
}

void growing_neighbours(const SeparatedGraph& g, const TokenCoder& tc, const std::string& s,
                        std::vector<std::string>& out) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.push_back(s.substr(0, i) + tc.vertex_token(tc.source(s[i])) + s.substr(i));
    out.push_back(s.substr(0, i + 1) + tc.vertex_token(tc.range(s[i])) + s.substr(i + 1));
    if (tc.is_vertex(s[i])) {
      const VertexId v = tc.source(s[i]);
      for (EdgeId e : g.in_edges(v)) {
        const std::string pair{static_cast<char>(2 * e + 1), static_cast<char>(2 * e)};
        out.push_back(s.substr(0, i) + pair + s.substr(i + 1));
      }
    }
  }
}

std::string equiv_name(Equiv e) { return e == Equiv::Connected ? "Connected" : "Unknown"; }

namespace {

struct Search {
  std::unordered_set<std::string> seen;
  bool zero = false;
};

// Explores the class of `start`; stops early once `stop` (if given) is met.
Search explore(const SeparatedGraph& g, const TokenCoder& tc, const std::string& start,
               std::size_t bound, Budget& budget, const Search* stop, bool& met) {
  Search r;
  std::deque<std::string> queue{start};
  r.seen.insert(start);
  std::vector<std::string> nb;
  while (!queue.empty()) {
    std::string s = std::move(queue.front());
    queue.pop_front();
    budget.tick();
    if (stop && stop->seen.count(s)) {
      met = true;
      return r;
    }
    nb.clear();
    bool z = false;
    shrinking_neighbours(g, tc, s, bound / 2, nb, z);
    if (z) {
      r.zero = true;
      if (stop && stop->zero) {
        met = true;
        return r;
      }
    }
    if (s.size() < bound) growing_neighbours(g, tc, s, nb);
    for (std::string& t : nb) {
      if (r.seen.insert(t).second) queue.push_back(std::move(t));
    }
  }
  return r;
}

}  // namespace

Equiv bfs_equiv(const SeparatedGraph& g, const std::vector<Token>& w1, const std::vector<Token>& w2,
                std::size_t len_bound, Budget& budget) {
  if (w1.empty() || w2.empty()) throw InputError("empty word");
  if (len_bound < std::max(w1.size(), w2.size())) {
    throw PreconditionError("bfs_equiv: length bound below word length");
  }
  const TokenCoder tc(g);
  const std::string a = tc.encode(w1), b = tc.encode(w2);
  if (a == b) return Equiv::Connected;
  bool met = false;
  Search first = explore(g, tc, a, len_bound, budget, nullptr, met);
  if (first.seen.count(b)) return Equiv::Connected;
  explore(g, tc, b, len_bound, budget, &first, met);
  return met ? Equiv::Connected : Equiv::Unknown;
}

RewriteClosure::RewriteClosure(const SeparatedGraph& g, std::size_t len_bound) : tc_(g), bound_(len_bound) {
  const std::size_t k = static_cast<std::size_t>(tc_.alphabet());
  offset_.assign(bound_ + 2, 0);
  std::size_t pw = 1;
  for (std::size_t len = 1; len <= bound_; ++len) {
    pw *= k;
    offset_[len + 1] = offset_[len] + pw;
  }
  const std::size_t total = offset_[bound_ + 1] + 1;
  if (total > 0xffffffffULL) throw PreconditionError("rewrite closure universe too large");
  parent_.resize(total);
  for (std::size_t i = 0; i < total; ++i) parent_[i] = static_cast<std::uint32_t>(i);
  std::vector<std::string> nb;
  for (std::size_t idx = 0; idx + 1 < total; ++idx) {
    const std::string s = word(idx);
    nb.clear();
    bool zero = false;
    shrinking_neighbours(g, tc_, s, bound_ / 2, nb, zero);
    if (zero) unite(idx, zero_index());
    for (const std::string& t : nb) unite(idx, index(t));
  }
}

std::size_t RewriteClosure::index(const std::string& s) const {
  if (s.empty() || s.size() > bound_) throw PreconditionError("word outside the rewrite universe");
  std::size_t v = 0;
  for (char c : s) v = v * static_cast<std::size_t>(tc_.alphabet()) + static_cast<unsigned char>(c);
  return offset_[s.size()] + v;
}

std::string RewriteClosure::word(std::size_t idx) const {
  std::size_t len = 1;
  while (offset_[len + 1] <= idx) ++len;
  std::size_t v = idx - offset_[len];
  std::string s(len, '\0');
  for (std::size_t i = len; i-- > 0;) {
    s[i] = static_cast<char>(v % static_cast<std::size_t>(tc_.alphabet()));
    v /= static_cast<std::size_t>(tc_.alphabet());
  }
  return s;
}

std::size_t RewriteClosure::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void RewriteClosure::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a < b) std::swap(a, b);
  parent_[a] = static_cast<std::uint32_t>(b);
}

MunnTree fim_munn_tree(const FimWord& w) {
  MunnTree t;
  FimWord cur;
  t.vertices.push_back(cur);
  for (int x : w) {
    if (x == 0) throw InputError("FIM letter 0 is not allowed");
    if (!cur.empty() && cur.back() == -x) {
      cur.pop_back();
    } else {
      cur.push_back(x);
    }
    t.vertices.push_back(cur);
  }
  std::sort(t.vertices.begin(), t.vertices.end());
  t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
  t.end = cur;
  return t;
}

bool fim_munn_eq(const FimWord& a, const FimWord& b) { return fim_munn_tree(a) == fim_munn_tree(b); }

std::string render_fim_word(const FimWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    out += (x < 0 ? "~x" : "x") + std::to_string(x < 0 ? -x : x);
  }
  return out;
}

std::vector<Token> phi_embed(const SeparatedGraph& g, const FimWord& w) {
  auto edge = [&](char kind, int i) {
    auto e = g.find_edge(std::string(1, kind) + std::to_string(i));
    if (!e) throw InputError(std::string("graph has no edge ") + kind + std::to_string(i));
    return *e;
  };
  std::vector<Token> out;
  if (w.empty()) {
    auto v = g.find_vertex("v");
    if (!v) throw InputError("graph has no vertex v");
    out.push_back(Token{true, *v, {}});
    return out;
  }
  for (int x : w) {
    const int i = x < 0 ? -x : x;
    const EdgeId e = edge('e', i), f = edge('f', i);
    if (x > 0) {
      out.push_back(Token{false, 0, Letter{e, false}});
      out.push_back(Token{false, 0, Letter{f, true}});
    } else {
      out.push_back(Token{false, 0, Letter{f, false}});
      out.push_back(Token{false, 0, Letter{e, true}});
    }
  }
  return out;
}

}  // namespace isg::oracle
