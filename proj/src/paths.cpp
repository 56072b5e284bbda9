#include "isg/paths.hpp"

#include <algorithm>
#include <sstream>

#include "isg/errors.hpp"

namespace isg {

VertexId letter_source(const SeparatedGraph& g, Letter x) {
  const Edge& e = g.edge(x.edge);
  return x.inverse ? e.range : e.source;
}

VertexId letter_range(const SeparatedGraph& g, Letter x) {
  const Edge& e = g.edge(x.edge);
  return x.inverse ? e.source : e.range;
}

bool letter_less(Letter a, Letter b) {
  if (a.inverse != b.inverse) return !a.inverse;
  return a.edge > b.edge;
}

bool path_less(const Path& a, const Path& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.source != b.source) return a.source < b.source;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.letters[i] == b.letters[i])) return letter_less(a.letters[i], b.letters[i]);
  }
  return false;
}

std::size_t PathHash::operator()(const Path& p) const {
  std::size_t h = static_cast<std::size_t>(p.source) * 0x9E3779B97F4A7C15ULL;
  for (const Letter& x : p.letters) {
    std::size_t c = static_cast<std::size_t>(x.edge) * 2 + (x.inverse ? 1 : 0);
    h ^= c + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Path vertex_path(VertexId v) { return Path{v, v, {}}; }

Path letter_path(const SeparatedGraph& g, Letter x) {
  return Path{letter_source(g, x), letter_range(g, x), {x}};
}

void push_letter(const SeparatedGraph& g, Path& p, Letter x) {
  p.letters.push_back(x);
  p.range = letter_range(g, x);
}

Path prefix(const SeparatedGraph& g, const Path& p, std::size_t k) {
  if (k >= p.size()) return p;
  Path q{p.source, p.source, {p.letters.begin(), p.letters.begin() + static_cast<long>(k)}};
  if (k > 0) q.range = letter_range(g, q.back());
  return q;
}

bool is_prefix(const Path& p, const Path& q) {
  if (p.source != q.source || p.size() > q.size()) return false;
  return std::equal(p.letters.begin(), p.letters.end(), q.letters.begin());
}

bool ends_inverse(const Path& p) { return !p.empty() && p.back().inverse; }

bool is_reduced(const Path& p) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p.letters[i] == p.letters[i - 1].inv()) return false;
  }
  return true;
}

Path reduce(const SeparatedGraph& g, const Path& w) {
  Path out{w.source, w.source, {}};
  for (const Letter& x : w.letters) {
    if (!out.empty() && out.back() == x.inv()) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(x);
    }
  }
  out.range = out.empty() ? out.source : letter_range(g, out.back());
  return out;
}

Path inverse(const SeparatedGraph& g, const Path& p) {
  Path out{p.range, p.source, {}};
  out.letters.reserve(p.size());
  for (auto it = p.letters.rbegin(); it != p.letters.rend(); ++it) out.letters.push_back(it->inv());
  (void)g;
  return out;
}

std::optional<Path> translate(const SeparatedGraph& g, const Path& a, const Path& b) {
  if (a.range != b.source) return std::nullopt;
  Path w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  w.range = b.range;
  return reduce(g, w);
}

namespace {

bool same_block(const SeparatedGraph& g, EdgeId a, EdgeId b) {
  return g.block_of(a) == g.block_of(b);
}

}  // namespace

bool is_c_separated_path(const SeparatedGraph& g, const Path& p) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    const Letter a = p.letters[i - 1];
    const Letter b = p.letters[i];
    if (a.inverse && !b.inverse && a.edge != b.edge && same_block(g, a.edge, b.edge)) return false;
  }
  return true;
}

bool is_c_separated_string(const SeparatedGraph& g, const Path& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    const Letter a = w.letters[i - 1];
    const Letter b = w.letters[i];
    if (a.inverse && !b.inverse && same_block(g, a.edge, b.edge)) return false;
  }
  return true;
}

Path longest_common_prefix(const SeparatedGraph& g, const Path& a, const Path& b) {
  if (a.source != b.source) throw PreconditionError("longest_common_prefix: source mismatch");
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a.letters[k] == b.letters[k]) ++k;
  return prefix(g, a, k);
}

bool is_c_compatible(const SeparatedGraph& g, const Path& a, const Path& b) {
  if (a.source != b.source) throw PreconditionError("is_c_compatible: source mismatch");
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a.letters[k] == b.letters[k]) ++k;
  if (k == a.size() || k == b.size()) return true;
  const Letter x = a.letters[k];
  const Letter y = b.letters[k];
  return !(!x.inverse && !y.inverse && same_block(g, x.edge, y.edge));
}

bool is_c_compatible_geodesic(const SeparatedGraph& g, const Path& a, const Path& b) {
  if (a.source != b.source) throw PreconditionError("is_c_compatible: source mismatch");
  auto t = translate(g, inverse(g, b), a);
  return t && is_c_separated_path(g, *t);
}

std::size_t positive_length(const Path& p) {
  std::size_t k = p.size();
  while (k > 0 && p.letters[k - 1].inverse) --k;
  return k;
}

PrefixDecomposition prefix_decompose(const SeparatedGraph& g, const Path& p) {
  const std::size_t k = positive_length(p);
  PrefixDecomposition d{prefix(g, p, k), {p.letters.begin() + static_cast<long>(k), p.letters.end()}};
  return d;
}

Path positive_part(const SeparatedGraph& g, const Path& p) { return prefix(g, p, positive_length(p)); }

FreeGroupWord omega(const Path& p) { return FreeGroupWord{p.letters}; }

FreeGroupWord fg_multiply(const FreeGroupWord& a, const FreeGroupWord& b) {
  FreeGroupWord out = a;
  for (const Letter& x : b.letters) {
    if (!out.letters.empty() && out.letters.back() == x.inv()) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(x);
    }
  }
  return out;
}

std::string render_free_group_word(const SeparatedGraph& g, const FreeGroupWord& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    const auto run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    out += g.edge(w.letters[i].edge).name;
    const long exponent = w.letters[i].inverse ? -run : run;
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

std::vector<Letter> letters_at(const SeparatedGraph& g, VertexId v) {
  std::vector<Letter> out;
  for (EdgeId e : g.out_edges(v)) out.push_back({e, false});
  for (EdgeId e : g.in_edges(v)) out.push_back({e, true});
  std::sort(out.begin(), out.end(), letter_less);
  return out;
}

std::vector<Token> parse_tokens(const SeparatedGraph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Token> out;
  for (std::string t; in >> t;) {
    Token tok;
    if (t[0] == '~') {
      auto e = g.find_edge(t.substr(1));
      if (!e) throw InputError("unknown token '" + t + "'");
      tok.letter = {*e, true};
    } else if (auto e = g.find_edge(t)) {
      tok.letter = {*e, false};
    } else if (auto v = g.find_vertex(t)) {
      tok.is_vertex = true;
      tok.vertex = *v;
    } else {
      throw InputError("unknown token '" + t + "'");
    }
    out.push_back(tok);
  }
  return out;
}

std::optional<Path> compose_tokens(const SeparatedGraph& g, const std::vector<Token>& tokens) {
  if (tokens.empty()) throw InputError("empty word");
  const Token& first = tokens.front();
  Path p = vertex_path(first.is_vertex ? first.vertex : letter_source(g, first.letter));
  for (const Token& t : tokens) {
    if (t.is_vertex) {
      if (t.vertex != p.range) return std::nullopt;
    } else {
      if (letter_source(g, t.letter) != p.range) return std::nullopt;
      push_letter(g, p, t.letter);
    }
  }
  return p;
}

std::string render_letter(const SeparatedGraph& g, Letter x) {
  return (x.inverse ? "~" : "") + g.edge(x.edge).name;
}

std::string render_tokens(const SeparatedGraph& g, const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.is_vertex ? g.vertex_name(t.vertex) : render_letter(g, t.letter);
  }
  return out;
}

std::string render_path(const SeparatedGraph& g, const Path& p) {
  if (p.empty()) return g.vertex_name(p.source);
  std::string out;
  for (const Letter& x : p.letters) {
    if (!out.empty()) out += ' ';
    out += render_letter(g, x);
  }
  return out;
}

Path parse_path(const SeparatedGraph& g, std::string_view text) {
  auto tokens = parse_tokens(g, text);
  if (tokens.empty()) throw InputError("empty path");
  auto p = compose_tokens(g, tokens);
  if (!p) throw InputError("path '" + std::string(text) + "' is not composable");
  return *p;
}

std::vector<Path> parse_path_list(const SeparatedGraph& g, std::string_view text) {
  std::string s(text);
  auto l = s.find_first_not_of(" \t");
  auto r = s.find_last_not_of(" \t");
  if (l == std::string::npos) return {};
  s = s.substr(l, r - l + 1);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw InputError("unbalanced braces in path list");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Path> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_path(g, item));
  }
  return out;
}

std::vector<Path> c_separated_paths(const SeparatedGraph& g, VertexId v, std::size_t max_len) {
  std::vector<Path> out{vertex_path(v)};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter x : letters_at(g, out[i].range)) {
        const Path& p = out[i];
        if (!p.empty()) {
          const Letter last = p.back();
          if (x == last.inv()) continue;
          if (last.inverse && !x.inverse && g.block_of(last.edge) == g.block_of(x.edge)) continue;
        }
        Path q = p;
        push_letter(g, q, x);
        out.push_back(std::move(q));
      }
    }
    begin = end;
  }
  std::sort(out.begin(), out.end(), PathLess{});
  return out;
}

}  // namespace isg
