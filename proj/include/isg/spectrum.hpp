#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isg/semilattice.hpp"

namespace isg {

// A finite lower, compatible set of C-separated paths. Statements about it are
// certified only for members shorter than `depth`.
struct FilterTruncation {
  LowerSet z;
  std::size_t depth = 0;
};
FilterTruncation make_truncation(const SeparatedGraph& g, LowerSet z, std::size_t depth);

struct LocalConfig {
  VertexId at = 0;
  std::vector<Letter> letters;  // sorted by letter_less
  std::optional<Letter> tail;
};

// nullopt is the empty-configuration marker.
std::optional<LocalConfig> local_config_at(const SeparatedGraph& g, const FilterTruncation& z,
                                           const Path& p);
bool is_admissible(const SeparatedGraph& g, const LocalConfig& c);
bool is_maximal_config(const SeparatedGraph& g, const LocalConfig& c);
bool is_finite_maximal_config(const SeparatedGraph& g, const LocalConfig& c);
// Every admissible configuration at v, the empty one included (letters drawn
// from letters_at(v)).
std::vector<LocalConfig> admissible_configs(const SeparatedGraph& g, VertexId v);

struct Certificate {
  bool pass = false;
  std::size_t depth = 0;
  std::optional<Path> witness;
  // Some checked configuration sits at a vertex with an Infinite block, so
  // maximality only covered its named edges.
  bool infinite_caveat = false;
};
std::string render_certificate(const SeparatedGraph& g, const Certificate& c);

Certificate check_ultra_truncation(const SeparatedGraph& g, const FilterTruncation& z);
Certificate check_tight_truncation(const SeparatedGraph& g, const FilterTruncation& z);

struct TrimResult {
  FilterTruncation trimmed;
  // Removed members whose inverse-letter chains reach the depth boundary, so a
  // deeper truncation might still extend them positively.
  std::vector<Path> unverified;
};
TrimResult phi_trim(const SeparatedGraph& g, const FilterTruncation& z);
FilterTruncation psi_extend(const SeparatedGraph& g, const FilterTruncation& z, std::size_t depth);

bool in_N(const SeparatedGraph& g, const LowerSet& i, const Path& f);
std::vector<Path> enumerate_N(const SeparatedGraph& g, const LowerSet& i, std::size_t max_len,
                              Budget& budget);

struct CylinderSet {
  LowerSet i;
  std::vector<Path> f;  // sorted by path_less
  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;
};
// Sorts F and checks every invariant; throws PreconditionError otherwise.
CylinderSet make_cylinder(const SeparatedGraph& g, LowerSet i, std::vector<Path> f);
void validate_cylinder(const SeparatedGraph& g, const CylinderSet& b);
std::string render_cylinder(const SeparatedGraph& g, const CylinderSet& b);

bool cylinder_member(const SeparatedGraph& g, const FilterTruncation& z, const CylinderSet& b);
std::optional<CylinderSet> cylinder_intersect(const SeparatedGraph& g, const CylinderSet& b1,
                                              const CylinderSet& b2);
std::vector<CylinderSet> cylinder_difference(const SeparatedGraph& g, const CylinderSet& b1,
                                             const CylinderSet& b2);

}  // namespace isg
