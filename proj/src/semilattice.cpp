#include "isg/semilattice.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace isg {

LowerSet LowerSet::from_sorted(VertexId base, std::vector<Path> paths) {
  LowerSet s;
  s.base_ = base;
  s.paths_ = std::move(paths);
  return s;
}

bool LowerSet::contains(const Path& p) const {
  return std::binary_search(paths_.begin(), paths_.end(), p, PathLess{});
}

bool LowerSet::subset_of(const LowerSet& other) const {
  if (base_ != other.base_) return false;
  return std::includes(other.paths_.begin(), other.paths_.end(), paths_.begin(), paths_.end(),
                       PathLess{});
}

bool lowerset_less(const LowerSet& a, const LowerSet& b) {
  if (a.base_ != b.base_) return a.base_ < b.base_;
  return std::lexicographical_compare(a.paths_.begin(), a.paths_.end(), b.paths_.begin(),
                                      b.paths_.end(), PathLess{});
}

LowerSet lower_closure_unchecked(const SeparatedGraph& g, VertexId base, const std::vector<Path>& a) {
  std::unordered_set<Path, PathHash> seen;
  std::vector<Path> out;
  auto add = [&](Path p) {
    if (seen.insert(p).second) out.push_back(std::move(p));
  };
  add(vertex_path(base));
  for (const Path& p : a) {
    if (p.source != base) throw PreconditionError("lower set: mixed sources");
    Path q = vertex_path(base);
    for (const Letter& x : p.letters) {
      push_letter(g, q, x);
      add(q);
    }
  }
  std::sort(out.begin(), out.end(), PathLess{});
  return LowerSet::from_sorted(base, std::move(out));
}

std::optional<Incompatible> find_incompatible_pair(const SeparatedGraph& g,
                                                   const std::vector<Path>& paths) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (!is_c_compatible(g, paths[i], paths[j])) return Incompatible{paths[i], paths[j]};
    }
  }
  return std::nullopt;
}

std::variant<LowerSet, Incompatible> lower_closure(const SeparatedGraph& g, const std::vector<Path>& a) {
  if (a.empty()) throw PreconditionError("lower_closure: empty family");
  for (const Path& p : a) {
    if (p.source != a.front().source) throw PreconditionError("lower_closure: mixed sources");
  }
  if (auto bad = find_incompatible_pair(g, a)) return *bad;
  return lower_closure_unchecked(g, a.front().source, a);
}

LowerSet union_of(const SeparatedGraph&, const LowerSet& a, const LowerSet& b) {
  if (a.base() != b.base()) throw PreconditionError("union of lower sets at different bases");
  std::vector<Path> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.paths().begin(), a.paths().end(), b.paths().begin(), b.paths().end(),
                 std::back_inserter(out), PathLess{});
  return LowerSet::from_sorted(a.base(), std::move(out));
}

std::vector<Path> max_elements(const LowerSet& i) {
  std::unordered_set<Path, PathHash> parents;
  for (const Path& p : i.paths()) {
    if (p.empty()) continue;
    Path q{p.source, p.source, {p.letters.begin(), p.letters.end() - 1}};
    parents.insert(std::move(q));
  }
  std::vector<Path> out;
  for (const Path& p : i.paths()) {
    if (!parents.count(p)) out.push_back(p);
  }
  return out;
}

LowerSet normalize_0(const SeparatedGraph& g, const LowerSet& i) {
  // Keep p iff p is a prefix of some positive part; members are sorted by
  // length, so marks propagate from the back.
  const auto& ps = i.paths();
  std::unordered_set<Path, PathHash> keep;
  for (const Path& p : ps) keep.insert(positive_part(g, p));
  for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
    if (!it->empty() && keep.count(*it)) keep.insert(prefix(g, *it, it->size() - 1));
  }
  std::vector<Path> out;
  for (const Path& p : ps) {
    if (keep.count(p)) out.push_back(p);
  }
  return LowerSet::from_sorted(i.base(), std::move(out));
}

bool is_canonical(const LowerSet& i) {
  for (const Path& p : max_elements(i)) {
    if (ends_inverse(p)) return false;
  }
  return true;
}

std::optional<LowerSet> meet(const SeparatedGraph& g, const LowerSet& i, const LowerSet& j) {
  if (i.base() != j.base()) return std::nullopt;
  LowerSet u = union_of(g, i, j);
  if (!is_compatible_set(g, u)) return std::nullopt;
  return u;
}

bool class_eq(const SeparatedGraph& g, const LowerSet& i, const LowerSet& j) {
  return normalize_0(g, i) == normalize_0(g, j);
}

bool class_leq(const SeparatedGraph& g, const LowerSet& i, const LowerSet& j) {
  return normalize_0(g, j).subset_of(normalize_0(g, i));
}

bool is_compatible_pairwise(const SeparatedGraph& g, const std::vector<Path>& paths) {
  for (const Path& p : paths) {
    if (!is_c_separated_path(g, p)) return false;
  }
  return !find_incompatible_pair(g, paths).has_value();
}

bool is_compatible_configs(const SeparatedGraph& g, const LowerSet& z) {
  // For every member, collect the positive letters of its local configuration:
  // positive children plus the tail when the member ends in an inverse letter.
  std::map<Path, std::vector<EdgeId>, PathLess> positives;
  for (const Path& p : z.paths()) {
    if (p.empty()) continue;
    const Letter x = p.back();
    if (!x.inverse) {
      positives[prefix(g, p, p.size() - 1)].push_back(x.edge);
    } else {
      positives[p].push_back(x.edge);
    }
  }
  for (const auto& [at, edges] : positives) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (edges[i] != edges[j] && g.block_of(edges[i]) == g.block_of(edges[j])) return false;
      }
    }
  }
  return true;
}

bool is_compatible_set(const SeparatedGraph& g, const LowerSet& z) {
  return is_compatible_configs(g, z);
}

std::string render_path_set(const SeparatedGraph& g, const std::vector<Path>& ps) {
  std::vector<Path> sorted = ps;
  std::sort(sorted.begin(), sorted.end(), PathLess{});
  std::string out = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ", ";
    out += render_path(g, sorted[i]);
  }
  return out + "}";
}

std::string render_lower_set(const SeparatedGraph& g, const LowerSet& i) {
  return render_path_set(g, i.paths());
}

LowerSet parse_lower_set(const SeparatedGraph& g, std::string_view text) {
  auto ps = parse_path_list(g, text);
  if (ps.empty()) throw InputError("empty path set");
  for (Path& p : ps) {
    if (!is_reduced(p)) throw InputError("path '" + render_path(g, p) + "' is not reduced");
    if (p.source != ps.front().source) throw InputError("paths have different sources");
  }
  return lower_closure_unchecked(g, ps.front().source, ps);
}

namespace {

struct TreeEnumerator {
  const SeparatedGraph& g;
  const LowerSet* floor;
  std::size_t max_len;
  bool canonical;
  Budget& budget;
  const std::function<void(const LowerSet&)>& visit;
  std::vector<Path> members;

  std::vector<Path> children(const Path& p) const {
    std::vector<Path> out;
    if (p.size() >= max_len) return out;
    for (Letter x : letters_at(g, p.range)) {
      if (!p.empty()) {
        const Letter last = p.back();
        if (x == last.inv()) continue;
        if (last.inverse && !x.inverse && g.block_of(last.edge) == g.block_of(x.edge)) continue;
      }
      Path q = p;
      push_letter(g, q, x);
      out.push_back(std::move(q));
    }
    return out;
  }

  void run(std::size_t next) {
    budget.tick();
    if (next == members.size()) {
      std::vector<Path> sorted = members;
      std::sort(sorted.begin(), sorted.end(), PathLess{});
      visit(LowerSet::from_sorted(members.front().source, std::move(sorted)));
      return;
    }
    const Path p = members[next];
    std::vector<Path> forced;
    std::vector<Path> optional;
    for (Path& c : children(p)) {
      if (floor && floor->contains(c)) {
        forced.push_back(std::move(c));
      } else if (canonical && c.back().inverse && c.size() >= max_len) {
        continue;  // would be an inverse-ending leaf
      } else {
        optional.push_back(std::move(c));
      }
    }
    const std::size_t k = optional.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<EdgeId> pos;
      for (const Path& c : forced) {
        if (!c.back().inverse) pos.push_back(c.back().edge);
      }
      std::size_t chosen = forced.size();
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        if (!(mask >> i & 1)) continue;
        ++chosen;
        const Letter x = optional[i].back();
        if (x.inverse) continue;
        for (EdgeId e : pos) {
          if (g.block_of(e) == g.block_of(x.edge)) ok = false;
        }
        pos.push_back(x.edge);
      }
      if (!ok) continue;
      if (canonical && ends_inverse(p) && chosen == 0) continue;
      const std::size_t before = members.size();
      members.insert(members.end(), forced.begin(), forced.end());
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) members.push_back(optional[i]);
      }
      run(next + 1);
      members.resize(before);
    }
  }
};

}  // namespace

void enumerate_y0(const SeparatedGraph& g, const LowerSet& floor, std::size_t max_len,
                  Budget& budget, const std::function<void(const LowerSet&)>& visit) {
  if (floor.max_length() > max_len) return;
  TreeEnumerator t{g, &floor, max_len, true, budget, visit, {vertex_path(floor.base())}};
  t.run(0);
}

void enumerate_lower_sets(const SeparatedGraph& g, VertexId v, std::size_t max_len, Budget& budget,
                          const std::function<void(const LowerSet&)>& visit) {
  TreeEnumerator t{g, nullptr, max_len, false, budget, visit, {vertex_path(v)}};
  t.run(0);
}

}  // namespace isg
