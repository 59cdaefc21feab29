#include "lpa/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "lpa/error.hpp"

namespace lpa {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::NotHereditary: return "NotHereditary";
    case ErrorKind::NotSubgraph: return "NotSubgraph";
    case ErrorKind::NotASource: return "NotASource";
    case ErrorKind::MoveRNotApplicable: return "MoveRNotApplicable";
    case ErrorKind::LoopAtVertex: return "LoopAtVertex";
    case ErrorKind::VertexIsSink: return "VertexIsSink";
    case ErrorKind::SourceVertex: return "SourceVertex";
    case ErrorKind::SinkVertex: return "SinkVertex";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::UnsupportedMoveKind: return "UnsupportedMoveKind";
    case ErrorKind::ZeroClass: return "ZeroClass";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::ClassVanished: return "ClassVanished";
    case ErrorKind::NotTotallyLooped: return "NotTotallyLooped";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotInCorner: return "NotInCorner";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

namespace {

bool has_forbidden(std::string_view label, std::string_view forbidden) {
  for (char c : label) {
    if (static_cast<unsigned char>(c) <= ' ' || forbidden.find(c) != std::string_view::npos) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_valid_vertex_label(std::string_view label) {
  return !label.empty() && !has_forbidden(label, ",:|\"");
}

bool is_valid_edge_label(std::string_view label) {
  return !label.empty() && !has_forbidden(label, ",:|\"");
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  vertex_pos_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_valid_vertex_label(vertices_[i])) {
      throw Error(ErrorKind::BadLabel, "invalid vertex label '" + vertices_[i] + "'");
    }
    if (!vertex_pos_.emplace(vertices_[i], i).second) {
      throw Error(ErrorKind::DuplicateLabel, "duplicate vertex '" + vertices_[i] + "'");
    }
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  src_.reserve(edges_.size());
  dst_.reserve(edges_.size());
  edge_pos_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!is_valid_edge_label(e.id)) {
      throw Error(ErrorKind::BadLabel, "invalid edge label '" + e.id + "'");
    }
    if (!edge_pos_.emplace(e.id, i).second) {
      throw Error(ErrorKind::DuplicateLabel, "duplicate edge '" + e.id + "'");
    }
    auto s = vertex_pos_.find(e.src);
    auto r = vertex_pos_.find(e.dst);
    if (s == vertex_pos_.end() || r == vertex_pos_.end()) {
      throw Error(ErrorKind::UnknownVertex, "edge '" + e.id + "' has an endpoint outside the graph");
    }
    src_.push_back(s->second);
    dst_.push_back(r->second);
    out_[s->second].push_back(i);
    in_[r->second].push_back(i);
  }
}

bool Graph::has_vertex(std::string_view v) const { return find_vertex(v).has_value(); }
bool Graph::has_edge(std::string_view e) const { return find_edge(e).has_value(); }

std::optional<std::size_t> Graph::find_vertex(std::string_view v) const {
  auto it = vertex_pos_.find(std::string(v));
  if (it == vertex_pos_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Graph::find_edge(std::string_view e) const {
  auto it = edge_pos_.find(std::string(e));
  if (it == edge_pos_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::vertex_index(std::string_view v) const {
  auto i = find_vertex(v);
  if (!i) throw Error(ErrorKind::UnknownVertex, "no vertex '" + std::string(v) + "'");
  return *i;
}

std::size_t Graph::edge_index(std::string_view e) const {
  auto i = find_edge(e);
  if (!i) throw Error(ErrorKind::UnknownEdge, "no edge '" + std::string(e) + "'");
  return *i;
}

const std::vector<std::size_t>& Graph::out_edges(std::string_view v) const {
  return out_[vertex_index(v)];
}

const std::vector<std::size_t>& Graph::in_edges(std::string_view v) const {
  return in_[vertex_index(v)];
}

bool Graph::has_loop_at(std::size_t v) const {
  return std::any_of(out_[v].begin(), out_[v].end(), [&](std::size_t e) { return dst_[e] == v; });
}

bool Graph::operator==(const Graph& other) const {
  if (num_vertices() != other.num_vertices() || num_edges() != other.num_edges()) return false;
  for (const auto& v : vertices_) {
    if (!other.has_vertex(v)) return false;
  }
  for (const auto& e : edges_) {
    auto j = other.find_edge(e.id);
    if (!j || !(other.edge(*j) == e)) return false;
  }
  return true;
}

Graph trivial_graph(const VertexId& label) { return Graph({label}, {}); }

VertexClass classify_vertex(const Graph& g, std::string_view v) {
  std::size_t i = g.vertex_index(v);
  VertexClass c;
  c.sink = g.is_sink(i);
  c.source = g.is_source(i);
  c.isolated = c.sink && c.source;
  c.regular = !c.sink;
  c.base_of_loop = g.has_loop_at(i);
  return c;
}

namespace {

std::vector<char> reach_from(const Graph& g, const std::vector<std::size_t>& seeds) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t s : seeds) {
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : g.out_edges(v)) {
      std::size_t w = g.dst(e);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<std::size_t> indices_of(const Graph& g, const VertexSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back(g.vertex_index(v));
  return out;
}

}  // namespace

VertexSet hereditary_closure(const Graph& g, const VertexSet& seeds) {
  auto seen = reach_from(g, indices_of(g, seeds));
  VertexSet out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (seen[v]) out.insert(g.vertex(v));
  }
  return out;
}

SubsetProperties subset_properties(const Graph& g, const VertexSet& subset) {
  std::vector<char> in(g.num_vertices(), 0);
  for (std::size_t v : indices_of(g, subset)) in[v] = 1;

  SubsetProperties p{true, true};
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (in[g.src(e)] && !in[g.dst(e)]) {
      p.hereditary = false;
      break;
    }
  }
  for (std::size_t v = 0; v < g.num_vertices() && p.saturated; ++v) {
    if (in[v] || g.is_sink(v)) continue;
    const auto& out = g.out_edges(v);
    bool all_in = std::all_of(out.begin(), out.end(), [&](std::size_t e) { return in[g.dst(e)]; });
    if (all_in) p.saturated = false;
  }
  return p;
}

bool is_totally_looped(const Graph& g) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_sink(v) && !g.has_loop_at(v)) return false;
  }
  return true;
}

bool is_acyclic(const Graph& g) {
  // Kahn's algorithm: acyclic iff every vertex gets peeled.
  std::vector<std::size_t> indeg(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) indeg[v] = g.in_edges(v).size();
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t peeled = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++peeled;
    for (std::size_t e : g.out_edges(v)) {
      if (--indeg[g.dst(e)] == 0) ready.push_back(g.dst(e));
    }
  }
  return peeled == g.num_vertices();
}

Graph restriction(const Graph& g, const VertexSet& h) {
  if (!subset_properties(g, h).hereditary) {
    throw Error(ErrorKind::NotHereditary, "restriction requires a hereditary vertex set");
  }
  std::vector<VertexId> vs;
  for (const auto& v : g.vertices()) {
    if (h.count(v)) vs.push_back(v);
  }
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (h.count(e.src)) es.push_back(e);
  }
  return Graph(std::move(vs), std::move(es));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string prefix = std::to_string(i) + ".";
    for (const auto& v : parts[i].vertices()) vs.push_back(prefix + v);
    for (const auto& e : parts[i].edges()) es.push_back({prefix + e.id, prefix + e.src, prefix + e.dst});
  }
  return Graph(std::move(vs), std::move(es));
}

bool is_complete_subgraph(const Graph& g, const Graph& sub) {
  for (const auto& v : sub.vertices()) {
    if (!g.has_vertex(v)) {
      throw Error(ErrorKind::NotSubgraph, "vertex '" + v + "' is not in the ambient graph");
    }
  }
  for (const auto& e : sub.edges()) {
    auto j = g.find_edge(e.id);
    if (!j || !(g.edge(*j) == e)) {
      throw Error(ErrorKind::NotSubgraph, "edge '" + e.id + "' is not in the ambient graph");
    }
  }
  for (std::size_t v = 0; v < sub.num_vertices(); ++v) {
    if (sub.is_sink(v)) continue;
    if (sub.out_edges(v).size() != g.out_edges(sub.vertex(v)).size()) return false;
  }
  return true;
}

std::optional<std::vector<EdgeId>> shortest_simple_path(const Graph& g, std::string_view v,
                                                        std::string_view w) {
  const std::size_t from = g.vertex_index(v);
  const std::size_t to = g.vertex_index(w);
  constexpr std::size_t kInf = static_cast<std::size_t>(-1);

  // Distances to `to` along reversed edges.
  std::vector<std::size_t> dist(g.num_vertices(), kInf);
  std::deque<std::size_t> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t e : g.in_edges(x)) {
      std::size_t y = g.src(e);
      if (dist[y] == kInf) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  if (dist[from] == kInf) return std::nullopt;

  // Greedy descent by smallest edge id is the lexicographically least
  // minimal path; distances strictly decrease, so vertices never repeat.
  std::vector<EdgeId> path;
  std::size_t cur = from;
  while (cur != to) {
    const EdgeId* best = nullptr;
    std::size_t next = kInf;
    for (std::size_t e : g.out_edges(cur)) {
      std::size_t y = g.dst(e);
      if (dist[y] != kInf && dist[y] + 1 == dist[cur] && (!best || g.edge(e).id < *best)) {
        best = &g.edge(e).id;
        next = y;
      }
    }
    path.push_back(*best);
    cur = next;
  }
  return path;
}

namespace {

using Counts = std::vector<std::vector<std::size_t>>;

Counts multiplicity_matrix(const Graph& g) {
  Counts m(g.num_vertices(), std::vector<std::size_t>(g.num_vertices(), 0));
  for (std::size_t e = 0; e < g.num_edges(); ++e) ++m[g.src(e)][g.dst(e)];
  return m;
}

using Signature = std::tuple<std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const Graph& g, const Counts& m) {
  std::vector<Signature> sig(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    sig[v] = {g.out_edges(v).size(), g.in_edges(v).size(), m[v][v]};
  }
  return sig;
}

struct IsoSearch {
  const Counts& ma;
  const Counts& mb;
  const std::vector<Signature>& sa;
  const std::vector<Signature>& sb;
  std::vector<std::size_t> order;
  std::vector<std::size_t> image;
  std::vector<char> used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const std::size_t a = order[depth];
    for (std::size_t b = 0; b < sb.size(); ++b) {
      if (used[b] || sa[a] != sb[b]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t a2 = order[k];
        const std::size_t b2 = image[a2];
        ok = ma[a][a2] == mb[b][b2] && ma[a2][a] == mb[b2][b];
      }
      if (!ok) continue;
      image[a] = b;
      used[b] = 1;
      if (extend(depth + 1)) return true;
      used[b] = 0;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const Counts ma = multiplicity_matrix(a);
  const Counts mb = multiplicity_matrix(b);
  const auto sa = signatures(a, ma);
  const auto sb = signatures(b, mb);
  {
    auto x = sa;
    auto y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  // Most constrained first: rarest signature, then highest degree.
  std::map<Signature, std::size_t> freq;
  for (const auto& s : sa) ++freq[s];
  std::vector<std::size_t> order(a.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (freq[sa[x]] != freq[sa[y]]) return freq[sa[x]] < freq[sa[y]];
    return std::get<0>(sa[x]) + std::get<1>(sa[x]) > std::get<0>(sa[y]) + std::get<1>(sa[y]);
  });
  IsoSearch search{ma, mb, sa, sb, std::move(order), std::vector<std::size_t>(a.num_vertices()),
                   std::vector<char>(b.num_vertices(), 0)};
  return search.extend(0);
}

}  // namespace lpa
