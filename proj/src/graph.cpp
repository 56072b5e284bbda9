#include "isg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "isg/errors.hpp"

namespace isg {

namespace {

bool valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](char c) {
    return c == '~' || c == '(' || c == ')' || c == '|' || c == ',' || c == '{' ||
           c == '}' || c == '\\' || static_cast<unsigned char>(c) <= ' ';
  });
}

std::vector<Block> singleton_blocks(const Skeleton& s) {
  std::vector<Block> blocks;
  for (EdgeId e = 0; e < static_cast<EdgeId>(s.edges.size()); ++e) {
    blocks.push_back({"B_" + s.edges[e].name, s.edges[e].source, {e}, Cardinality::Finite});
  }
  return blocks;
}

std::vector<Block> vertex_blocks(const Skeleton& s) {
  std::vector<Block> blocks;
  for (VertexId v = 0; v < static_cast<VertexId>(s.vertices.size()); ++v) {
    Block b{"B_" + s.vertices[v], v, {}, Cardinality::Finite};
    for (EdgeId e = 0; e < static_cast<EdgeId>(s.edges.size()); ++e) {
      if (s.edges[e].source == v) b.edges.push_back(e);
    }
    if (!b.edges.empty()) blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace

SeparatedGraph SeparatedGraph::build(Skeleton skeleton, std::vector<Block> blocks,
                                     GraphOptions options) {
  SeparatedGraph g;
  const int nv = static_cast<int>(skeleton.vertices.size());
  const int ne = static_cast<int>(skeleton.edges.size());
  std::set<std::string> names;
  for (VertexId v = 0; v < nv; ++v) {
    const auto& name = skeleton.vertices[v];
    if (!valid_identifier(name)) throw InputError("invalid vertex identifier '" + name + "'");
    if (!names.insert(name).second) throw InputError("duplicate identifier '" + name + "'");
    g.vertex_index_[name] = v;
  }
  for (EdgeId e = 0; e < ne; ++e) {
    const auto& ed = skeleton.edges[e];
    if (!valid_identifier(ed.name)) throw InputError("invalid edge identifier '" + ed.name + "'");
    if (!names.insert(ed.name).second) throw InputError("duplicate identifier '" + ed.name + "'");
    if (ed.source < 0 || ed.source >= nv || ed.range < 0 || ed.range >= nv) {
      throw InputError("edge '" + ed.name + "' has an unknown endpoint");
    }
    g.edge_index_[ed.name] = e;
  }
  g.out_.assign(nv, {});
  g.in_.assign(nv, {});
  for (EdgeId e = 0; e < ne; ++e) {
    g.out_[skeleton.edges[e].source].push_back(e);
    g.in_[skeleton.edges[e].range].push_back(e);
  }
  g.block_of_.assign(ne, -1);
  g.blocks_at_.assign(nv, {});
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    const Block& bl = blocks[b];
    if (!valid_identifier(bl.name)) throw InputError("invalid block identifier '" + bl.name + "'");
    if (!names.insert(bl.name).second) throw InputError("duplicate identifier '" + bl.name + "'");
    if (bl.edges.empty()) throw InputError("block '" + bl.name + "' is empty");
    for (EdgeId e : bl.edges) {
      if (e < 0 || e >= ne) throw InputError("block '" + bl.name + "' names an unknown edge");
      if (skeleton.edges[e].source != bl.source) {
        throw InputError("block '" + bl.name + "': edge '" + skeleton.edges[e].name +
                         "' has mismatched source");
      }
      if (g.block_of_[e] != -1) {
        throw InputError("partition violation: edge '" + skeleton.edges[e].name +
                         "' lies in two blocks");
      }
      g.block_of_[e] = b;
    }
    g.blocks_at_[bl.source].push_back(b);
    g.block_index_[bl.name] = b;
  }
  for (EdgeId e = 0; e < ne; ++e) {
    if (g.block_of_[e] == -1) {
      throw InputError("partition violation: edge '" + skeleton.edges[e].name +
                       "' lies in no block");
    }
  }
  g.skeleton_ = std::move(skeleton);
  g.blocks_ = std::move(blocks);
  if (!options.allow_isolated) {
    auto iso = isolated_vertices(g.skeleton_);
    if (!iso.empty()) {
      throw InputError("isolated vertex '" + g.skeleton_.vertices[iso.front()] +
                       "' (pass the allow-isolated override to accept it)");
    }
  }
  return g;
}

std::optional<VertexId> SeparatedGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> SeparatedGraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SeparatedGraph::find_block(std::string_view name) const {
  auto it = block_index_.find(std::string(name));
  if (it == block_index_.end()) return std::nullopt;
  return it->second;
}

SeparatedGraph SeparatedGraph::with_cardinality(int b, Cardinality c) const {
  SeparatedGraph copy = *this;
  copy.blocks_.at(b).cardinality = c;
  return copy;
}

SeparatedGraph parse_graph(std::string_view text, GraphOptions options) {
  Skeleton sk;
  struct PendingBlock {
    std::string name;
    Cardinality card;
    std::vector<std::string> edges;
    int line;
  };
  std::vector<PendingBlock> pending;
  std::optional<std::string> separation;
  std::unordered_map<std::string, VertexId> vidx;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> InputError {
    return InputError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "vertex") {
      if (tok.size() != 2) throw fail("expected 'vertex <id>'");
      if (!valid_identifier(tok[1])) throw fail("invalid identifier '" + tok[1] + "'");
      if (vidx.count(tok[1])) throw fail("duplicate identifier '" + tok[1] + "'");
      vidx[tok[1]] = static_cast<VertexId>(sk.vertices.size());
      sk.vertices.push_back(tok[1]);
    } else if (kw == "edge") {
      if (tok.size() != 4) throw fail("expected 'edge <id> <src> <rng>'");
      auto s = vidx.find(tok[2]);
      auto r = vidx.find(tok[3]);
      if (s == vidx.end()) throw fail("unknown identifier '" + tok[2] + "'");
      if (r == vidx.end()) throw fail("unknown identifier '" + tok[3] + "'");
      for (const auto& e : sk.edges) {
        if (e.name == tok[1]) throw fail("duplicate identifier '" + tok[1] + "'");
      }
      if (vidx.count(tok[1])) throw fail("duplicate identifier '" + tok[1] + "'");
      if (!valid_identifier(tok[1])) throw fail("invalid identifier '" + tok[1] + "'");
      sk.edges.push_back({tok[1], s->second, r->second});
    } else if (kw == "block") {
      if (tok.size() < 4) throw fail("expected 'block <id> finite|infinite <edge>...'");
      Cardinality c;
      if (tok[2] == "finite") {
        c = Cardinality::Finite;
      } else if (tok[2] == "infinite") {
        c = Cardinality::Infinite;
      } else {
        throw fail("expected 'finite' or 'infinite', got '" + tok[2] + "'");
      }
      pending.push_back({tok[1], c, {tok.begin() + 3, tok.end()}, lineno});
    } else if (kw == "separation") {
      if (tok.size() != 2 || (tok[1] != "trivial" && tok[1] != "free")) {
        throw fail("expected 'separation trivial|free'");
      }
      if (separation) throw fail("separation given twice");
      separation = tok[1];
    } else {
      throw fail("unknown keyword '" + kw + "'");
    }
  }
  if (separation && !pending.empty()) {
    lineno = pending.front().line;
    throw fail("'separation' and 'block' lines are mutually exclusive");
  }
  if (separation) {
    return *separation == "free" ? free_separation(sk, options) : trivial_separation(sk, options);
  }
  std::vector<Block> blocks;
  for (const auto& p : pending) {
    lineno = p.line;
    Block b{p.name, 0, {}, p.card};
    std::set<EdgeId> seen;
    for (const auto& en : p.edges) {
      auto it = std::find_if(sk.edges.begin(), sk.edges.end(),
                             [&](const Edge& e) { return e.name == en; });
      if (it == sk.edges.end()) throw fail("unknown identifier '" + en + "'");
      EdgeId e = static_cast<EdgeId>(it - sk.edges.begin());
      if (!seen.insert(e).second) throw fail("edge '" + en + "' repeated in block");
      b.edges.push_back(e);
    }
    b.source = sk.edges[b.edges.front()].source;
    blocks.push_back(std::move(b));
  }
  try {
    return SeparatedGraph::build(std::move(sk), std::move(blocks), options);
  } catch (const InputError& e) {
    throw InputError(std::string("graph: ") + e.what());
  }
}

SeparatedGraph load_graph(const std::string& path, GraphOptions options) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str(), options);
}

bool is_finitely_separated(const SeparatedGraph& g) {
  return std::all_of(g.blocks().begin(), g.blocks().end(),
                     [](const Block& b) { return b.cardinality == Cardinality::Finite; });
}

std::vector<VertexId> infinite_sources(const SeparatedGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.in_edges(v).empty() || g.out_edges(v).empty()) continue;
    bool all_inf = std::all_of(g.blocks_at(v).begin(), g.blocks_at(v).end(),
                               [&](int b) { return !g.is_finite_block(b); });
    if (all_inf) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> isolated_vertices(const Skeleton& s) {
  std::vector<bool> touched(s.vertices.size(), false);
  for (const auto& e : s.edges) {
    touched[e.source] = true;
    touched[e.range] = true;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(s.vertices.size()); ++v) {
    if (!touched[v]) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> isolated_vertices(const SeparatedGraph& g) {
  return isolated_vertices(g.skeleton());
}

SeparatedGraph trivial_separation(const Skeleton& s, GraphOptions options) {
  return SeparatedGraph::build(s, vertex_blocks(s), options);
}

SeparatedGraph free_separation(const Skeleton& s, GraphOptions options) {
  return SeparatedGraph::build(s, singleton_blocks(s), options);
}

std::string describe(const SeparatedGraph& g) {
  std::ostringstream os;
  auto list = [&](const std::vector<VertexId>& vs) {
    if (vs.empty()) return std::string("none");
    std::string s;
    for (VertexId v : vs) s += (s.empty() ? "" : " ") + g.vertex_name(v);
    return s;
  };
  os << "vertices: " << g.vertex_count() << "\n";
  os << "edges: " << g.edge_count() << "\n";
  os << "blocks: " << g.block_count() << "\n";
  for (const Block& b : g.blocks()) {
    os << "  " << b.name << " at " << g.vertex_name(b.source) << " "
       << (b.cardinality == Cardinality::Finite ? "finite" : "infinite") << ":";
    for (EdgeId e : b.edges) os << " " << g.edge(e).name;
    os << "\n";
  }
  std::vector<VertexId> sinks;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.out_edges(v).empty()) sinks.push_back(v);
  }
  os << "finitely separated: " << (is_finitely_separated(g) ? "yes" : "no") << "\n";
  os << "sinks: " << list(sinks) << "\n";
  os << "infinite sources: " << list(infinite_sources(g)) << "\n";
  os << "isolated vertices: " << list(isolated_vertices(g)) << "\n";
  os << "partition law: ok\n";
  return os.str();
}

}  // namespace isg
