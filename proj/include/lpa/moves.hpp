#ifndef LPA_MOVES_HPP
#define LPA_MOVES_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// Ordered blocks of edge ids. Text form: "e1,e2|e3".
struct Partition {
  std::vector<std::vector<EdgeId>> blocks;

  bool operator==(const Partition&) const = default;
};

enum class MoveKind { SourceElim, IsolatedRemoval, MoveR, Collapse, InSplit, OutSplit };

std::string_view to_string(MoveKind kind);

struct MoveRecord {
  MoveKind kind;
  VertexId vertex;
  std::string detail;

  bool operator==(const MoveRecord&) const = default;
};

/// Strand lengths n_v >= 1 for every base vertex.
struct HairSpec {
  std::map<VertexId, int> lengths;
};

Graph source_eliminate(const Graph& g, std::string_view v);

struct SourceFreeResult {
  Graph sf;
  std::vector<VertexId> removed_isolated;
  std::vector<MoveRecord> trace;
};

/// Label of the synthetic one-vertex graph produced when source elimination
/// empties the input.
inline constexpr std::string_view kTrivialVertex = "triv";

SourceFreeResult sf_reduce(const Graph& g);

/// Move (R) at w; composite edges are labeled "[<e><f>]".
Graph move_r(const Graph& g, std::string_view w);

/// Collapse at a regular vertex that is not the base of a loop.
Graph collapse(const Graph& g, std::string_view v);

std::string composite_label(std::string_view e, std::string_view f);

/// v -> "<v>_<j>", edges out of v -> "<e>#<j>" (j is 1-based).
Graph in_split(const Graph& g, std::string_view v, const Partition& p);
std::string in_split_vertex(std::string_view v, std::size_t j);
std::string in_split_edge(std::string_view e, std::size_t j);

/// v -> "<v>^<j>", edges into v -> "<e>^<j>".
Graph out_split(const Graph& g, std::string_view v, const Partition& p);
std::string out_split_vertex(std::string_view v, std::size_t j);
std::string out_split_edge(std::string_view e, std::size_t j);

/// Adds a strand v^{n-1} -> ... -> v^1 -> v for each base vertex v with
/// n_v >= 2. Strand vertices are "<v>^<j>", strand edges "e_<v>^<j>".
Graph hair_extend(const Graph& g, const HairSpec& spec);
std::string strand_vertex(std::string_view v, int depth);
std::string strand_edge(std::string_view v, int depth);

/// Uniform hair extension E^+(n, ..., n).
Graph m_n_graph(const Graph& g, int n);

/// A_n: v_{n-1} -> ... -> v_0 with edges e_i: v_i -> v_{i-1}.
Graph line_graph(int n);

}  // namespace lpa

#endif  // LPA_MOVES_HPP
