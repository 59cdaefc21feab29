#ifndef LPA_GRAPH_HPP
#define LPA_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpa {

using VertexId = std::string;
using EdgeId = std::string;
using VertexSet = std::set<VertexId>;

struct Edge {
  EdgeId id;
  VertexId src;
  VertexId dst;

  bool operator==(const Edge&) const = default;
};

/// Finite directed multigraph with labeled vertices and edges.
///
/// A Graph is an immutable value. Vertices and edges keep the order they were
/// supplied in (so serialization round-trips), and every label is resolved to
/// a dense index for the algorithms. Index-based accessors are the fast path;
/// label-based ones throw Error{UnknownVertex/UnknownEdge}.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(std::string_view v) const;
  bool has_edge(std::string_view e) const;
  std::optional<std::size_t> find_vertex(std::string_view v) const;
  std::optional<std::size_t> find_edge(std::string_view e) const;
  std::size_t vertex_index(std::string_view v) const;
  std::size_t edge_index(std::string_view e) const;

  const VertexId& vertex(std::size_t v) const { return vertices_[v]; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  std::size_t src(std::size_t e) const { return src_[e]; }
  std::size_t dst(std::size_t e) const { return dst_[e]; }

  /// s^{-1}(v) and r^{-1}(v) as edge indices, in edge order.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }
  const std::vector<std::size_t>& out_edges(std::string_view v) const;
  const std::vector<std::size_t>& in_edges(std::string_view v) const;

  bool is_sink(std::size_t v) const { return out_[v].empty(); }
  bool is_source(std::size_t v) const { return in_[v].empty(); }
  bool has_loop_at(std::size_t v) const;

  /// Same labeled vertex set and same labeled edges; order is ignored.
  bool operator==(const Graph& other) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_pos_;
  std::unordered_map<std::string, std::size_t> edge_pos_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> dst_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

bool is_valid_vertex_label(std::string_view label);
bool is_valid_edge_label(std::string_view label);

struct VertexClass {
  bool sink = false;
  bool source = false;
  bool isolated = false;
  bool regular = false;
  bool base_of_loop = false;

  bool operator==(const VertexClass&) const = default;
};

VertexClass classify_vertex(const Graph& g, std::string_view v);

/// Forward reachability closure of `seeds`, seeds included.
VertexSet hereditary_closure(const Graph& g, const VertexSet& seeds);

struct SubsetProperties {
  bool hereditary = false;
  bool saturated = false;

  bool operator==(const SubsetProperties&) const = default;
};

SubsetProperties subset_properties(const Graph& g, const VertexSet& subset);

bool is_totally_looped(const Graph& g);
bool is_acyclic(const Graph& g);

/// Vertex set `h`, edges emitted from `h`. Throws NotHereditary.
Graph restriction(const Graph& g, const VertexSet& h);

/// Labels of part i become "<i>.<label>".
Graph disjoint_union(const std::vector<Graph>& parts);

/// Throws NotSubgraph if `sub` is not contained in `g`.
bool is_complete_subgraph(const Graph& g, const Graph& sub);

/// Minimal-length path from v to w (vertices pairwise distinct). Among
/// minimal paths the lexicographically smallest edge-id sequence wins.
/// Empty when v == w, nullopt when w is unreachable.
std::optional<std::vector<EdgeId>> shortest_simple_path(const Graph& g, std::string_view v,
                                                        std::string_view w);

/// Unlabeled isomorphism of multigraphs (edge multiplicities between every
/// ordered vertex pair must match). Backtracking; meant for desk-scale graphs.
bool isomorphic(const Graph& a, const Graph& b);

/// The one-vertex, edgeless graph.
Graph trivial_graph(const VertexId& label = "v");

}  // namespace lpa

#endif  // LPA_GRAPH_HPP
