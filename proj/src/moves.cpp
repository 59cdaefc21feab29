#include "lpa/moves.hpp"

#include <algorithm>
#include <set>

#include "lpa/error.hpp"

namespace lpa {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::SourceElim: return "SourceElim";
    case MoveKind::IsolatedRemoval: return "IsolatedRemoval";
    case MoveKind::MoveR: return "MoveR";
    case MoveKind::Collapse: return "Collapse";
    case MoveKind::InSplit: return "InSplit";
    case MoveKind::OutSplit: return "OutSplit";
  }
  return "Move";
}

std::string composite_label(std::string_view e, std::string_view f) {
  std::string s;
  s.reserve(e.size() + f.size() + 2);
  s += '[';
  s += e;
  s += f;
  s += ']';
  return s;
}

std::string in_split_vertex(std::string_view v, std::size_t j) {
  return std::string(v) + "_" + std::to_string(j);
}
std::string in_split_edge(std::string_view e, std::size_t j) {
  return std::string(e) + "#" + std::to_string(j);
}
std::string out_split_vertex(std::string_view v, std::size_t j) {
  return std::string(v) + "^" + std::to_string(j);
}
std::string out_split_edge(std::string_view e, std::size_t j) {
  return std::string(e) + "^" + std::to_string(j);
}
std::string strand_vertex(std::string_view v, int depth) {
  return depth == 0 ? std::string(v) : std::string(v) + "^" + std::to_string(depth);
}
std::string strand_edge(std::string_view v, int depth) {
  return "e_" + std::string(v) + "^" + std::to_string(depth);
}

Graph source_eliminate(const Graph& g, std::string_view v) {
  const std::size_t i = g.vertex_index(v);
  if (!g.is_source(i)) {
    throw Error(ErrorKind::NotASource, "vertex '" + std::string(v) + "' receives edges");
  }
  std::vector<VertexId> vs;
  for (const auto& u : g.vertices()) {
    if (u != v) vs.push_back(u);
  }
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (e.src != v) es.push_back(e);
  }
  return Graph(std::move(vs), std::move(es));
}

SourceFreeResult sf_reduce(const Graph& g) {
  SourceFreeResult out;
  if (g.num_vertices() == 1 && g.num_edges() == 0) {
    out.sf = g;
    return out;
  }
  Graph cur = g;
  for (;;) {
    const VertexId* pick = nullptr;
    for (std::size_t v = 0; v < cur.num_vertices(); ++v) {
      if (cur.is_source(v) && !cur.is_sink(v) && (!pick || cur.vertex(v) < *pick)) {
        pick = &cur.vertex(v);
      }
    }
    if (!pick) break;
    const VertexId v = *pick;
    const std::size_t emitted = cur.out_edges(cur.vertex_index(v)).size();
    cur = source_eliminate(cur, v);
    out.trace.push_back({MoveKind::SourceElim, v, "eliminated source emitting " + std::to_string(emitted) + " edge(s)"});
  }
  std::vector<VertexId> isolated;
  for (std::size_t v = 0; v < cur.num_vertices(); ++v) {
    if (cur.is_source(v) && cur.is_sink(v)) isolated.push_back(cur.vertex(v));
  }
  std::sort(isolated.begin(), isolated.end());
  for (const auto& v : isolated) {
    cur = source_eliminate(cur, v);
    out.trace.push_back({MoveKind::IsolatedRemoval, v, "removed isolated vertex"});
  }
  out.removed_isolated = std::move(isolated);
  out.sf = cur.empty() ? trivial_graph(std::string(kTrivialVertex)) : std::move(cur);
  return out;
}

Graph move_r(const Graph& g, std::string_view w) {
  const std::size_t wi = g.vertex_index(w);
  const auto& out = g.out_edges(wi);
  const std::string ws(w);
  if (out.size() != 1) {
    throw Error(ErrorKind::MoveRNotApplicable, "'" + ws + "' must emit exactly one edge");
  }
  const std::size_t f = out.front();
  if (g.dst(f) == wi) {
    throw Error(ErrorKind::MoveRNotApplicable, "the edge emitted by '" + ws + "' is a loop");
  }
  std::set<std::size_t> senders;
  for (std::size_t e : g.in_edges(wi)) senders.insert(g.src(e));
  if (senders.size() > 1) {
    throw Error(ErrorKind::MoveRNotApplicable, "'" + ws + "' receives from more than one vertex");
  }
  // With a single non-loop out edge this is exactly collapse at w.
  return collapse(g, w);
}

Graph collapse(const Graph& g, std::string_view v) {
  const std::size_t vi = g.vertex_index(v);
  if (g.is_sink(vi)) {
    throw Error(ErrorKind::VertexIsSink, "cannot collapse at sink '" + std::string(v) + "'");
  }
  if (g.has_loop_at(vi)) {
    throw Error(ErrorKind::LoopAtVertex, "'" + std::string(v) + "' is the base of a loop");
  }
  std::vector<VertexId> vs;
  for (const auto& u : g.vertices()) {
    if (u != v) vs.push_back(u);
  }
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (e.src != v && e.dst != v) es.push_back(e);
  }
  for (std::size_t e : g.in_edges(vi)) {
    for (std::size_t f : g.out_edges(vi)) {
      es.push_back({composite_label(g.edge(e).id, g.edge(f).id), g.edge(e).src, g.edge(f).dst});
    }
  }
  return Graph(std::move(vs), std::move(es));
}

namespace {

// Block index of each edge in `expected`; throws BadPartition unless the
// blocks are nonempty, disjoint and cover `expected` exactly.
std::vector<std::size_t> block_of(const Graph& g, const std::vector<std::size_t>& expected,
                                  const Partition& p) {
  std::vector<std::size_t> block(g.num_edges(), static_cast<std::size_t>(-1));
  std::size_t covered = 0;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].empty()) throw Error(ErrorKind::BadPartition, "empty block");
    for (const auto& id : p.blocks[b]) {
      auto e = g.find_edge(id);
      if (!e) throw Error(ErrorKind::BadPartition, "unknown edge '" + id + "'");
      if (std::find(expected.begin(), expected.end(), *e) == expected.end()) {
        throw Error(ErrorKind::BadPartition, "edge '" + id + "' is not in the partitioned set");
      }
      if (block[*e] != static_cast<std::size_t>(-1)) {
        throw Error(ErrorKind::BadPartition, "edge '" + id + "' appears twice");
      }
      block[*e] = b;
      ++covered;
    }
  }
  if (covered != expected.size()) {
    throw Error(ErrorKind::BadPartition, "blocks do not cover every edge");
  }
  return block;
}

}  // namespace

Graph in_split(const Graph& g, std::string_view v, const Partition& p) {
  const std::size_t vi = g.vertex_index(v);
  if (g.is_source(vi)) {
    throw Error(ErrorKind::SourceVertex, "cannot in-split at source '" + std::string(v) + "'");
  }
  const auto block = block_of(g, g.in_edges(vi), p);
  const std::size_t n = p.blocks.size();

  auto range_of = [&](std::size_t e) {
    return g.dst(e) == vi ? in_split_vertex(v, block[e] + 1) : g.edge(e).dst;
  };

  std::vector<VertexId> vs;
  for (const auto& u : g.vertices()) {
    if (u != v) {
      vs.push_back(u);
    } else {
      for (std::size_t j = 1; j <= n; ++j) vs.push_back(in_split_vertex(v, j));
    }
  }
  std::vector<Edge> es;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.src(e) == vi) {
      for (std::size_t j = 1; j <= n; ++j) {
        es.push_back({in_split_edge(g.edge(e).id, j), in_split_vertex(v, j), range_of(e)});
      }
    } else {
      es.push_back({g.edge(e).id, g.edge(e).src, range_of(e)});
    }
  }
  return Graph(std::move(vs), std::move(es));
}

Graph out_split(const Graph& g, std::string_view v, const Partition& p) {
  const std::size_t vi = g.vertex_index(v);
  if (g.is_sink(vi)) {
    throw Error(ErrorKind::SinkVertex, "cannot out-split at sink '" + std::string(v) + "'");
  }
  const auto block = block_of(g, g.out_edges(vi), p);
  const std::size_t n = p.blocks.size();

  auto source_of = [&](std::size_t e) {
    return g.src(e) == vi ? out_split_vertex(v, block[e] + 1) : g.edge(e).src;
  };

  std::vector<VertexId> vs;
  for (const auto& u : g.vertices()) {
    if (u != v) {
      vs.push_back(u);
    } else {
      for (std::size_t j = 1; j <= n; ++j) vs.push_back(out_split_vertex(v, j));
    }
  }
  std::vector<Edge> es;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.dst(e) == vi) {
      for (std::size_t j = 1; j <= n; ++j) {
        es.push_back({out_split_edge(g.edge(e).id, j), source_of(e), out_split_vertex(v, j)});
      }
    } else {
      es.push_back({g.edge(e).id, source_of(e), g.edge(e).dst});
    }
  }
  return Graph(std::move(vs), std::move(es));
}

Graph hair_extend(const Graph& g, const HairSpec& spec) {
  if (spec.lengths.size() != g.num_vertices()) {
    throw Error(ErrorKind::BadSpec, "hair lengths must cover exactly the base vertices");
  }
  for (const auto& [v, n] : spec.lengths) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::BadSpec, "hair length for unknown vertex '" + v + "'");
    if (n < 1) throw Error(ErrorKind::BadSpec, "hair length at '" + v + "' must be >= 1");
  }
  std::vector<VertexId> vs = g.vertices();
  std::vector<Edge> es = g.edges();
  for (const auto& v : g.vertices()) {
    const int n = spec.lengths.at(v);
    for (int j = 1; j < n; ++j) {
      vs.push_back(strand_vertex(v, j));
      es.push_back({strand_edge(v, j), strand_vertex(v, j), strand_vertex(v, j - 1)});
    }
  }
  return Graph(std::move(vs), std::move(es));
}

Graph m_n_graph(const Graph& g, int n) {
  if (n < 1) throw Error(ErrorKind::BadSpec, "M_n requires n >= 1");
  HairSpec spec;
  for (const auto& v : g.vertices()) spec.lengths[v] = n;
  return hair_extend(g, spec);
}

Graph line_graph(int n) {
  if (n < 1) throw Error(ErrorKind::BadSpec, "line graph requires n >= 1");
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = n - 1; i >= 0; --i) vs.push_back("v" + std::to_string(i));
  for (int i = n - 1; i >= 1; --i) {
    es.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i - 1)});
  }
  return Graph(std::move(vs), std::move(es));
}

}  // namespace lpa
