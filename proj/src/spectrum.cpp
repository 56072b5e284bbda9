#include "isg/spectrum.hpp"

#include <algorithm>
#include <unordered_set>

namespace isg {

namespace {

void require_not_isolated(const SeparatedGraph& g, VertexId v) {
  if (g.out_edges(v).empty() && g.in_edges(v).empty()) {
    throw PreconditionError("spectrum operations exclude isolated vertex '" + g.vertex_name(v) + "'");
  }
}

bool blocks_clash(const SeparatedGraph& g, EdgeId a, EdgeId b) {
  return a != b && g.block_of(a) == g.block_of(b);
}

LowerSet sorted_set(VertexId base, std::vector<Path> ps) {
  std::sort(ps.begin(), ps.end(), PathLess{});
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return LowerSet::from_sorted(base, std::move(ps));
}

}  // namespace

FilterTruncation make_truncation(const SeparatedGraph& g, LowerSet z, std::size_t depth) {
  for (const Path& p : z.paths()) {
    if (!is_reduced(p) || !is_c_separated_path(g, p)) {
      throw PreconditionError("truncation member '" + render_path(g, p) + "' is not C-separated");
    }
    if (!p.empty() && !z.contains(prefix(g, p, p.size() - 1))) {
      throw PreconditionError("truncation is not lower-closed");
    }
  }
  if (!is_compatible_set(g, z)) throw PreconditionError("truncation is not C-compatible");
  return FilterTruncation{std::move(z), depth};
}

std::optional<LocalConfig> local_config_at(const SeparatedGraph& g, const FilterTruncation& z,
                                           const Path& p) {
  if (!z.z.contains(p)) throw PreconditionError("local_config_at: path not in Z");
  LocalConfig c;
  c.at = p.range;
  if (!p.empty()) c.tail = p.back().inv();
  for (Letter x : letters_at(g, p.range)) {
    if (c.tail && x == *c.tail) {
      c.letters.push_back(x);
      continue;
    }
    Path q = p;
    push_letter(g, q, x);
    if (z.z.contains(q)) c.letters.push_back(x);
  }
  if (c.letters.empty()) return std::nullopt;
  return c;
}

bool is_admissible(const SeparatedGraph& g, const LocalConfig& c) {
  for (std::size_t i = 0; i < c.letters.size(); ++i) {
    for (std::size_t j = i + 1; j < c.letters.size(); ++j) {
      const Letter a = c.letters[i];
      const Letter b = c.letters[j];
      if (!a.inverse && !b.inverse && blocks_clash(g, a.edge, b.edge)) return false;
    }
  }
  return true;
}

namespace {

bool config_maximal(const SeparatedGraph& g, const LocalConfig& c, bool finite_only) {
  if (!is_admissible(g, c)) return false;
  auto has = [&](Letter x) { return std::find(c.letters.begin(), c.letters.end(), x) != c.letters.end(); };
  for (EdgeId e : g.in_edges(c.at)) {
    if (!has(Letter{e, true})) return false;
  }
  for (int b : g.blocks_at(c.at)) {
    if (finite_only && !g.is_finite_block(b)) continue;
    const auto& edges = g.block(b).edges;
    const bool hit = std::any_of(edges.begin(), edges.end(), [&](EdgeId e) { return has(Letter{e, false}); });
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool is_maximal_config(const SeparatedGraph& g, const LocalConfig& c) {
  return config_maximal(g, c, false);
}

bool is_finite_maximal_config(const SeparatedGraph& g, const LocalConfig& c) {
  return config_maximal(g, c, true);
}

std::vector<LocalConfig> admissible_configs(const SeparatedGraph& g, VertexId v) {
  const auto letters = letters_at(g, v);
  std::vector<LocalConfig> out;
  const std::size_t n = letters.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    LocalConfig c;
    c.at = v;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) c.letters.push_back(letters[i]);
    }
    if (is_admissible(g, c)) out.push_back(std::move(c));
  }
  return out;
}

std::string render_certificate(const SeparatedGraph& g, const Certificate& c) {
  std::string out = c.pass ? "PASS depth=" + std::to_string(c.depth)
                           : "FAIL witness=" + render_path(g, *c.witness);
  if (c.infinite_caveat) out += " (infinite blocks checked on named edges only)";
  return out;
}

namespace {

Certificate check_truncation(const SeparatedGraph& g, const FilterTruncation& z, bool tight) {
  require_not_isolated(g, z.z.base());
  Certificate cert;
  cert.depth = z.depth;
  if (tight && z.z.size() == 1) {
    const auto src = infinite_sources(g);
    if (std::find(src.begin(), src.end(), z.z.base()) != src.end()) {
      cert.pass = true;
      cert.infinite_caveat = true;
      return cert;
    }
  }
  for (const Path& p : z.z.paths()) {
    if (p.size() >= z.depth) break;
    for (int b : g.blocks_at(p.range)) {
      if (!g.is_finite_block(b)) cert.infinite_caveat = true;
    }
    auto c = local_config_at(g, z, p);
    const bool ok = c && (tight ? is_finite_maximal_config(g, *c) : is_maximal_config(g, *c));
    if (!ok) {
      cert.witness = p;
      return cert;
    }
  }
  cert.pass = true;
  return cert;
}

}  // namespace

Certificate check_ultra_truncation(const SeparatedGraph& g, const FilterTruncation& z) {
  return check_truncation(g, z, false);
}

Certificate check_tight_truncation(const SeparatedGraph& g, const FilterTruncation& z) {
  return check_truncation(g, z, true);
}

TrimResult phi_trim(const SeparatedGraph& g, const FilterTruncation& z) {
  require_not_isolated(g, z.z.base());
  const auto& ps = z.z.paths();
  // rescued: has an extension in Z ending positively (or is itself positive);
  // boundary: some extension reaches the depth bound.
  std::unordered_set<Path, PathHash> rescued;
  std::unordered_set<Path, PathHash> boundary;
  for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
    const Path& p = *it;
    if (!ends_inverse(p)) rescued.insert(p);
    if (p.size() >= z.depth) boundary.insert(p);
    if (p.empty()) continue;
    const Path parent = prefix(g, p, p.size() - 1);
    if (rescued.count(p)) rescued.insert(parent);
    if (boundary.count(p)) boundary.insert(parent);
  }
  TrimResult r;
  std::vector<Path> kept;
  for (const Path& p : ps) {
    if (rescued.count(p)) {
      kept.push_back(p);
    } else if (boundary.count(p)) {
      r.unverified.push_back(p);
    }
  }
  r.trimmed = FilterTruncation{LowerSet::from_sorted(z.z.base(), std::move(kept)), z.depth};
  return r;
}

FilterTruncation psi_extend(const SeparatedGraph& g, const FilterTruncation& z, std::size_t depth) {
  require_not_isolated(g, z.z.base());
  std::vector<Path> out = z.z.paths();
  std::vector<Path> frontier;
  for (const Path& p : z.z.paths()) {
    if (p.size() >= depth) continue;
    for (EdgeId e : g.in_edges(p.range)) {
      const Letter x{e, true};
      if (!p.empty() && p.back() == x.inv()) continue;
      Path q = p;
      push_letter(g, q, x);
      if (z.z.contains(q)) continue;
      frontier.push_back(std::move(q));
    }
  }
  while (!frontier.empty()) {
    Path p = std::move(frontier.back());
    frontier.pop_back();
    if (p.size() < depth) {
      for (EdgeId e : g.in_edges(p.range)) {
        Path q = p;
        push_letter(g, q, Letter{e, true});
        frontier.push_back(std::move(q));
      }
    }
    out.push_back(std::move(p));
  }
  return FilterTruncation{sorted_set(z.z.base(), std::move(out)), depth};
}

bool in_N(const SeparatedGraph& g, const LowerSet& i, const Path& f) {
  if (f.source != i.base() || !is_reduced(f) || !is_c_separated_path(g, f)) return false;
  std::size_t k = 0;
  while (k < f.size() && i.contains(prefix(g, f, k + 1))) ++k;
  if (k == f.size()) return false;
  for (std::size_t j = k; j + 1 < f.size(); ++j) {
    if (!f.letters[j].inverse) return false;
  }
  if (f.back().inverse) return false;
  std::vector<Path> ps = i.paths();
  for (std::size_t j = k + 1; j <= f.size(); ++j) ps.push_back(prefix(g, f, j));
  return is_compatible_set(g, sorted_set(i.base(), std::move(ps)));
}

std::vector<Path> enumerate_N(const SeparatedGraph& g, const LowerSet& i, std::size_t max_len,
                              Budget& budget) {
  if (max_len < 1) throw PreconditionError("enumerate_N: max_len must be at least 1");
  std::vector<Path> out;
  // Stack of partial paths: a member of I followed by inverse letters only.
  std::vector<Path> stack;
  for (const Path& p : i.paths()) stack.push_back(p);
  while (!stack.empty()) {
    Path p = std::move(stack.back());
    stack.pop_back();
    budget.tick();
    if (p.size() >= max_len) continue;
    const bool in_i = i.contains(p);
    for (Letter x : letters_at(g, p.range)) {
      if (!p.empty()) {
        const Letter last = p.back();
        if (x == last.inv()) continue;
        if (last.inverse && !x.inverse && blocks_clash(g, last.edge, x.edge)) continue;
        if (last.inverse && !x.inverse && last.edge == x.edge) continue;
      }
      Path q = p;
      push_letter(g, q, x);
      if (in_i && i.contains(q)) continue;  // q is still inside I
      if (x.inverse) {
        stack.push_back(std::move(q));
      } else if (in_N(g, i, q)) {
        out.push_back(std::move(q));
      }
    }
  }
  std::sort(out.begin(), out.end(), PathLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validate_cylinder(const SeparatedGraph& g, const CylinderSet& b) {
  const LowerSet& i = b.i;
  for (const Path& p : i.paths()) {
    if (!is_reduced(p) || !is_c_separated_path(g, p)) {
      throw PreconditionError("cylinder: I member not C-separated");
    }
    if (!p.empty() && !i.contains(prefix(g, p, p.size() - 1))) {
      throw PreconditionError("cylinder: I not lower-closed");
    }
  }
  if (!is_compatible_set(g, i)) throw PreconditionError("cylinder: I not C-compatible");
  if (!is_canonical(i)) throw PreconditionError("cylinder: I has an inverse-ending maximal element");
  for (const Path& f : b.f) {
    if (!in_N(g, i, f)) {
      throw PreconditionError("cylinder: '" + render_path(g, f) + "' is not in N(I)");
    }
  }
}

CylinderSet make_cylinder(const SeparatedGraph& g, LowerSet i, std::vector<Path> f) {
  require_not_isolated(g, i.base());
  std::sort(f.begin(), f.end(), PathLess{});
  f.erase(std::unique(f.begin(), f.end()), f.end());
  CylinderSet b{std::move(i), std::move(f)};
  validate_cylinder(g, b);
  return b;
}

std::string render_cylinder(const SeparatedGraph& g, const CylinderSet& b) {
  return "Z(" + render_lower_set(g, b.i) + " \\ " + render_path_set(g, b.f) + ")";
}

bool cylinder_member(const SeparatedGraph& g, const FilterTruncation& z, const CylinderSet& b) {
  std::size_t need = b.i.max_length();
  for (const Path& f : b.f) need = std::max(need, f.size());
  if (z.depth <= need) throw PreconditionError("cylinder_member: truncation too shallow");
  (void)g;
  if (z.z.base() != b.i.base()) return false;
  if (!b.i.subset_of(z.z)) return false;
  return std::none_of(b.f.begin(), b.f.end(), [&](const Path& f) { return z.z.contains(f); });
}

std::optional<CylinderSet> cylinder_intersect(const SeparatedGraph& g, const CylinderSet& b1,
                                              const CylinderSet& b2) {
  if (b1.i.base() != b2.i.base()) return std::nullopt;
  LowerSet u = union_of(g, b1.i, b2.i);
  if (!is_compatible_set(g, u)) return std::nullopt;
  std::vector<Path> f;
  for (const auto* fs : {&b1.f, &b2.f}) {
    for (const Path& p : *fs) {
      if (u.contains(p)) return std::nullopt;
      // members incompatible with I1 u I2 can never be hit; drop them
      if (in_N(g, u, p)) f.push_back(p);
    }
  }
  return make_cylinder(g, std::move(u), std::move(f));
}

std::vector<CylinderSet> cylinder_difference(const SeparatedGraph& g, const CylinderSet& b1,
                                             const CylinderSet& b2) {
  if (b1.i.base() != b2.i.base()) return {b1};
  if (!cylinder_intersect(g, b1, b2)) return {b1};
  const LowerSet& i1 = b1.i;
  const LowerSet& i2 = b2.i;
  auto in_f1 = [&](const Path& p) { return std::binary_search(b1.f.begin(), b1.f.end(), p, PathLess{}); };
  std::vector<CylinderSet> out;

  if (!i2.subset_of(i1)) {
    // h = g0 g1 ... gn: g0 the longest prefix in I1, each later segment a run of
    // inverse letters closed by one positive letter.
    struct Split {
      Path h;
      std::vector<std::size_t> cuts;  // cuts[0] = |g0|, cuts[n] = |h|
    };
    std::vector<Split> splits;
    for (const Path& h : max_elements(i2)) {
      if (i1.contains(h)) continue;
      Split s{h, {}};
      std::size_t k = 0;
      while (k < h.size() && i1.contains(prefix(g, h, k + 1))) ++k;
      s.cuts.push_back(k);
      for (std::size_t j = k; j < h.size(); ++j) {
        if (!h.letters[j].inverse) s.cuts.push_back(j + 1);
      }
      if (in_f1(prefix(g, h, s.cuts[1]))) return {b1};
      splits.push_back(std::move(s));
    }
    std::vector<std::size_t> idx(splits.size(), 0);
    auto is_top = [&]() {
      for (std::size_t j = 0; j < splits.size(); ++j) {
        if (idx[j] + 1 != splits[j].cuts.size()) return false;
      }
      return true;
    };
    while (true) {
      if (!is_top()) {
        std::vector<Path> gens = i1.paths();
        std::vector<Path> fresh;
        for (std::size_t j = 0; j < splits.size(); ++j) {
          const Split& s = splits[j];
          gens.push_back(prefix(g, s.h, s.cuts[idx[j]]));
          if (idx[j] + 1 < s.cuts.size()) fresh.push_back(prefix(g, s.h, s.cuts[idx[j] + 1]));
        }
        LowerSet in = lower_closure_unchecked(g, i1.base(), gens);
        const bool empty = std::any_of(fresh.begin(), fresh.end(), [&](const Path& p) { return in.contains(p); });
        if (!empty) {
          std::vector<Path> fn = fresh;
          for (const Path& f : b1.f) {
            if (in_N(g, in, f)) fn.push_back(f);
          }
          out.push_back(make_cylinder(g, std::move(in), std::move(fn)));
        }
      }
      std::size_t j = 0;
      while (j < splits.size() && idx[j] + 1 == splits[j].cuts.size()) idx[j++] = 0;
      if (j == splits.size()) break;
      ++idx[j];
    }
  }

  std::vector<Path> f2_only;
  for (const Path& f : b2.f) {
    if (!in_f1(f)) f2_only.push_back(f);
  }
  const LowerSet i12 = union_of(g, i1, i2);
  const std::size_t n = f2_only.size();
  if (n > 20) throw BudgetExceeded("cylinder_difference: too many excluded paths in B2");
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Path> gens = i12.paths();
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) gens.push_back(f2_only[j]);
    }
    LowerSet u = lower_closure_unchecked(g, i1.base(), gens);
    if (!is_compatible_set(g, u)) continue;
    std::vector<Path> fh;
    for (const auto* fs : {&b1.f, &b2.f}) {
      for (const Path& p : *fs) {
        if (in_N(g, u, p)) fh.push_back(p);
      }
    }
    out.push_back(make_cylinder(g, std::move(u), std::move(fh)));
  }
  return out;
}

}  // namespace isg
