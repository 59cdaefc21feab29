#ifndef LPA_PIPELINE_HPP
#define LPA_PIPELINE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/monoid.hpp"
#include "lpa/moves.hpp"
#include "lpa/projective.hpp"

namespace lpa {

/// Source elimination followed by collapses down to a totally looped graph.
struct DecompositionReport {
  std::size_t k = 0;
  std::vector<VertexId> removed_sinks;
  Graph F;
  std::vector<MoveRecord> trace;
  /// Graph before each trace entry, parallel to `trace`.
  std::vector<Graph> before;
};

/// Throws EmptyGraph.
DecompositionReport decompose(const Graph& g);

/// Collapse-order hook: picks the next vertex to collapse among the
/// candidates (regular, not the base of a loop), given in lexicographic
/// order. The default takes the first.
using CollapseChooser = std::function<std::size_t(const Graph&, const std::vector<VertexId>&)>;
DecompositionReport decompose(const Graph& g, const CollapseChooser& choose);

struct TraceStep {
  MoveRecord move;
  MonoidElement class_after;
};

struct CornerReport {
  std::vector<int> line_sizes;
  /// Present iff the class has mass left on F.
  std::optional<VertexSet> T;
  std::optional<Graph> G;
  std::optional<NormalizedClass> normalized;
  Graph output;
  std::size_t k = 0;
  Graph F;
  MonoidElement initial_class;
  MonoidElement residual_class;  // class on F^0
  std::vector<TraceStep> trace;
};

/// Graph whose Leavitt path algebra is the corner of L(g) by any idempotent
/// with class eps. Throws ZeroClass, EmptyGraph, ClassVanished.
CornerReport corner_graph(const Graph& g, const ProjectiveClass& eps);
CornerReport corner_graph(const Graph& g, const ProjectiveClass& eps, const CollapseChooser& choose);

/// Class of sum_{v in S} v. Throws EmptySet.
ProjectiveClass vertex_sum_class(const Graph& g, const VertexSet& s);

}  // namespace lpa

#endif  // LPA_PIPELINE_HPP
