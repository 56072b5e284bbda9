#pragma once

#include <functional>
#include <string>
#include <vector>

#include "isg/graph.hpp"
#include "isg/paths.hpp"
#include "isg/semilattice.hpp"

namespace isg::test {

inline SeparatedGraph graph(const std::string& name, GraphOptions opts = {}) {
  return load_graph(std::string(ISG_DATA_DIR) + "/" + name + ".sg", opts);
}
inline SeparatedGraph rose2t() { return graph("rose2t"); }
inline SeparatedGraph rose2f() { return graph("rose2f"); }
inline SeparatedGraph fim2() { return graph("fim2"); }

inline Path P(const SeparatedGraph& g, const std::string& s) { return parse_path(g, s); }
inline std::string R(const SeparatedGraph& g, const Path& p) { return render_path(g, p); }

// Every lower set of reduced paths at v up to max_len, compatible or not.
inline std::vector<LowerSet> all_lower_sets(const SeparatedGraph& g, VertexId v, std::size_t max_len) {
  std::vector<Path> nodes{vertex_path(v)};
  std::vector<int> parent{-1};
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k].size() >= max_len) continue;
    for (Letter x : letters_at(g, nodes[k].range)) {
      if (!nodes[k].empty() && x == nodes[k].back().inv()) continue;
      Path q = nodes[k];
      push_letter(g, q, x);
      nodes.push_back(q);
      parent.push_back(static_cast<int>(k));
    }
  }
  std::vector<LowerSet> out;
  std::vector<bool> in(nodes.size(), false);
  in[0] = true;
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == nodes.size()) {
      std::vector<Path> ps;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (in[i]) ps.push_back(nodes[i]);
      }
      out.push_back(lower_closure_unchecked(g, v, ps));
      return;
    }
    in[k] = false;
    walk(k + 1);
    if (in[static_cast<std::size_t>(parent[k])]) {
      in[k] = true;
      walk(k + 1);
      in[k] = false;
    }
  };
  walk(1);
  return out;
}

}  // namespace isg::test
