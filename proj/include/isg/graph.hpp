#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace isg {

using VertexId = int;
using EdgeId = int;

enum class Cardinality { Finite, Infinite };

struct Edge {
  std::string name;
  VertexId source = 0;
  VertexId range = 0;
};

struct Block {
  std::string name;
  VertexId source = 0;
  std::vector<EdgeId> edges;
  Cardinality cardinality = Cardinality::Finite;
};

// Vertices and edges without a separation.
struct Skeleton {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

struct GraphOptions {
  // Isolated vertices are rejected unless this is set; spectrum operations
  // still refuse to work at an isolated vertex.
  bool allow_isolated = false;
};

// Immutable after construction. Vertex and edge ids are declaration indices.
class SeparatedGraph {
 public:
  static SeparatedGraph build(Skeleton skeleton, std::vector<Block> blocks,
                              GraphOptions options = {});

  int vertex_count() const { return static_cast<int>(skeleton_.vertices.size()); }
  int edge_count() const { return static_cast<int>(skeleton_.edges.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  const std::string& vertex_name(VertexId v) const { return skeleton_.vertices[v]; }
  const Edge& edge(EdgeId e) const { return skeleton_.edges[e]; }
  const Block& block(int b) const { return blocks_[b]; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Skeleton& skeleton() const { return skeleton_; }

  int block_of(EdgeId e) const { return block_of_[e]; }
  const std::vector<int>& blocks_at(VertexId v) const { return blocks_at_[v]; }
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[v]; }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_[v]; }
  bool is_finite_block(int b) const { return blocks_[b].cardinality == Cardinality::Finite; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  std::optional<int> find_block(std::string_view name) const;

  // Copy with one block's cardinality flag replaced.
  SeparatedGraph with_cardinality(int b, Cardinality c) const;

 private:
  Skeleton skeleton_;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
  std::vector<std::vector<int>> blocks_at_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::unordered_map<std::string, int> block_index_;
};

SeparatedGraph parse_graph(std::string_view text, GraphOptions options = {});
SeparatedGraph load_graph(const std::string& path, GraphOptions options = {});

bool is_finitely_separated(const SeparatedGraph& g);
std::vector<VertexId> infinite_sources(const SeparatedGraph& g);
std::vector<VertexId> isolated_vertices(const Skeleton& s);
std::vector<VertexId> isolated_vertices(const SeparatedGraph& g);

// One block per non-sink vertex.
SeparatedGraph trivial_separation(const Skeleton& s, GraphOptions options = {});
// One singleton block per edge.
SeparatedGraph free_separation(const Skeleton& s, GraphOptions options = {});

// Multi-line human readable summary used by `validate`.
std::string describe(const SeparatedGraph& g);

}  // namespace isg
