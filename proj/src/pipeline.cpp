#include "lpa/pipeline.hpp"

#include <algorithm>
#include <limits>

#include "lpa/error.hpp"

namespace lpa {

namespace {

std::size_t first_candidate(const Graph&, const std::vector<VertexId>&) { return 0; }

std::vector<VertexId> collapse_candidates(const Graph& g) {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_sink(v) && !g.has_loop_at(v)) out.push_back(g.vertex(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DecompositionReport decompose(const Graph& g) { return decompose(g, first_candidate); }

DecompositionReport decompose(const Graph& g, const CollapseChooser& choose) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "cannot decompose the empty graph");
  DecompositionReport out;

  // Replay sf_reduce's trace so every step has its graph-before snapshot.
  const SourceFreeResult sf = sf_reduce(g);
  Graph cur = g;
  for (const auto& move : sf.trace) {
    out.before.push_back(cur);
    out.trace.push_back(move);
    cur = source_eliminate(cur, move.vertex);
  }
  out.removed_sinks = sf.removed_isolated;
  out.k = out.removed_sinks.size();
  cur = sf.sf;

  for (;;) {
    const auto candidates = collapse_candidates(cur);
    if (candidates.empty()) break;
    const std::size_t pick = choose(cur, candidates);
    if (pick >= candidates.size()) throw Error(ErrorKind::BadSpec, "collapse chooser returned an out-of-range index");
    const VertexId v = candidates[pick];
    Graph next = collapse(cur, v);
    out.before.push_back(std::move(cur));
    out.trace.push_back({MoveKind::Collapse, v, "collapsed regular vertex"});
    cur = std::move(next);
  }
  out.F = std::move(cur);
  return out;
}

CornerReport corner_graph(const Graph& g, const ProjectiveClass& eps) {
  return corner_graph(g, eps, first_candidate);
}

CornerReport corner_graph(const Graph& g, const ProjectiveClass& eps, const CollapseChooser& choose) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "cannot take a corner of the empty graph");
  if (eps.is_zero()) throw Error(ErrorKind::ZeroClass, "the class must be nonzero");
  for (const auto& [v, n] : eps.coeffs()) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "no vertex '" + v + "'");
  }

  const DecompositionReport d = decompose(g, choose);
  CornerReport out;
  out.k = d.k;
  out.F = d.F;
  out.initial_class = eps;

  MonoidElement cls = eps;
  for (std::size_t i = 0; i < d.trace.size(); ++i) {
    const MoveRecord& move = d.trace[i];
    if (move.kind == MoveKind::IsolatedRemoval) {
      const std::uint64_t n = cls[move.vertex];
      if (n > 0) {
        if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
          throw Error(ErrorKind::BadSpec, "line component too large");
        }
        out.line_sizes.push_back(static_cast<int>(n));
      }
    }
    cls = class_map_under_move(move, d.before[i], cls);
    out.trace.push_back({move, cls});
  }
  out.residual_class = cls;

  std::vector<Graph> parts;
  for (int n : out.line_sizes) parts.push_back(line_graph(n));
  if (cls.is_zero()) {
    if (out.line_sizes.empty()) throw Error(ErrorKind::ClassVanished, "class vanished without a line component");
  } else {
    const EndGraph eg = end_graph(unit_hair_extension(d.F), cls);
    out.T = eg.normalized.T;
    out.G = eg.G;
    out.normalized = eg.normalized;
    parts.push_back(eg.G);
  }
  out.output = parts.size() == 1 ? parts.front() : disjoint_union(parts);
  return out;
}

ProjectiveClass vertex_sum_class(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw Error(ErrorKind::EmptySet, "vertex set must be nonempty");
  ProjectiveClass out;
  for (const auto& v : s) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "no vertex '" + v + "'");
    out.add(v);
  }
  return out;
}

}  // namespace lpa
