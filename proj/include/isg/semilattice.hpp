#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "isg/errors.hpp"
#include "isg/paths.hpp"

namespace isg {

// Finite prefix-closed set of paths from one base vertex, stored sorted under
// path_less. Compatibility is not part of the type; operations that need it
// check it explicitly.
class LowerSet {
 public:
  LowerSet() = default;
  explicit LowerSet(VertexId base) : base_(base), paths_{vertex_path(base)} {}
  // `paths` must be sorted, unique and lower-closed.
  static LowerSet from_sorted(VertexId base, std::vector<Path> paths);

  VertexId base() const { return base_; }
  const std::vector<Path>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }
  bool contains(const Path& p) const;
  bool subset_of(const LowerSet& other) const;
  std::size_t max_length() const { return paths_.empty() ? 0 : paths_.back().size(); }

  friend bool operator==(const LowerSet& a, const LowerSet& b) {
    return a.base_ == b.base_ && a.paths_ == b.paths_;
  }
  friend bool lowerset_less(const LowerSet& a, const LowerSet& b);

 private:
  VertexId base_ = 0;
  std::vector<Path> paths_;
};

bool lowerset_less(const LowerSet& a, const LowerSet& b);

struct Incompatible {
  Path a;
  Path b;
};

// All prefixes of the given paths, without a compatibility check.
LowerSet lower_closure_unchecked(const SeparatedGraph& g, VertexId base, const std::vector<Path>& a);
// A-down if pairwise compatible, otherwise a violating pair.
std::variant<LowerSet, Incompatible> lower_closure(const SeparatedGraph& g, const std::vector<Path>& a);
LowerSet union_of(const SeparatedGraph& g, const LowerSet& a, const LowerSet& b);

std::vector<Path> max_elements(const LowerSet& i);
LowerSet normalize_0(const SeparatedGraph& g, const LowerSet& i);
bool is_canonical(const LowerSet& i);

// Union when same base and compatible, otherwise nullopt (Zero).
std::optional<LowerSet> meet(const SeparatedGraph& g, const LowerSet& i, const LowerSet& j);
bool class_eq(const SeparatedGraph& g, const LowerSet& i, const LowerSet& j);
bool class_leq(const SeparatedGraph& g, const LowerSet& i, const LowerSet& j);

// Two implementations of compatibility for a lower set; both also require all
// members to be C-separated.
bool is_compatible_pairwise(const SeparatedGraph& g, const std::vector<Path>& paths);
bool is_compatible_configs(const SeparatedGraph& g, const LowerSet& z);
bool is_compatible_set(const SeparatedGraph& g, const LowerSet& z);
std::optional<Incompatible> find_incompatible_pair(const SeparatedGraph& g,
                                                   const std::vector<Path>& paths);

std::string render_lower_set(const SeparatedGraph& g, const LowerSet& i);
std::string render_path_set(const SeparatedGraph& g, const std::vector<Path>& ps);
LowerSet parse_lower_set(const SeparatedGraph& g, std::string_view text);

// Calls `visit` for every canonical lower set (Y0) at v containing `floor`
// whose members have length <= max_len. Budget is charged per visited set.
void enumerate_y0(const SeparatedGraph& g, const LowerSet& floor, std::size_t max_len,
                  Budget& budget, const std::function<void(const LowerSet&)>& visit);
// Every compatible lower set of C-separated paths at v with lengths <= max_len.
void enumerate_lower_sets(const SeparatedGraph& g, VertexId v, std::size_t max_len, Budget& budget,
                          const std::function<void(const LowerSet&)>& visit);

}  // namespace isg
