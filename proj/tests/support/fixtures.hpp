#ifndef LPA_TESTS_FIXTURES_HPP
#define LPA_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/graph.hpp"
#include "lpa/moves.hpp"

namespace lpa::testing {

using Rng = std::mt19937_64;

// Graphs from the worked examples.

// e1: v1->v2, e2: v2->v1, f1: v1->v3, f2: v3->v1, f: v1->v4.
inline Graph collapse_example() {
  return Graph({"v1", "v2", "v3", "v4"}, {{"e1", "v1", "v2"},
                                          {"e2", "v2", "v1"},
                                          {"f1", "v1", "v3"},
                                          {"f2", "v3", "v1"},
                                          {"f", "v1", "v4"}});
}

inline Graph collapse_f1() {
  return Graph({"v2", "v3", "v4"}, {{"[e2e1]", "v2", "v2"},
                                    {"[e2f1]", "v2", "v3"},
                                    {"[e2f]", "v2", "v4"},
                                    {"[f2e1]", "v3", "v2"},
                                    {"[f2f1]", "v3", "v3"},
                                    {"[f2f]", "v3", "v4"}});
}

inline Graph collapse_f2() {
  return Graph({"v1", "v4"}, {{"[e1e2]", "v1", "v1"}, {"[f1f2]", "v1", "v1"}, {"f", "v1", "v4"}});
}

// v1 with a loop, v1 -> v2.
inline Graph hair_example_base() { return Graph({"v1", "v2"}, {{"l", "v1", "v1"}, {"a", "v1", "v2"}}); }

// base^+(3, 2).
inline Graph hair_example_total() {
  return Graph({"v1", "v2", "v1^1", "v1^2", "v2^1"}, {{"l", "v1", "v1"},
                                                      {"a", "v1", "v2"},
                                                      {"e_v1^1", "v1^1", "v1"},
                                                      {"e_v1^2", "v1^2", "v1^1"},
                                                      {"e_v2^1", "v2^1", "v2"}});
}

// The totally looped F of the end-construction example.
inline Graph iso_base() {
  return Graph({"v1", "v2", "v3", "v4"}, {{"a", "v1", "v1"},
                                          {"b", "v1", "v2"},
                                          {"c", "v2", "v2"},
                                          {"d", "v2", "v2"},
                                          {"g", "v2", "v1"},
                                          {"h", "v2", "v3"},
                                          {"k", "v4", "v4"},
                                          {"l", "v4", "v3"}});
}

inline HairSpec iso_spec() { return HairSpec{{{"v1", 3}, {"v2", 1}, {"v3", 2}, {"v4", 3}}}; }

// F_T^+(2, 2, 1) for T = {v1, v2, v3}.
inline Graph iso_expected_g() {
  return Graph({"v1", "v2", "v3", "v1^1", "v2^1"}, {{"a", "v1", "v1"},
                                                    {"b", "v1", "v2"},
                                                    {"c", "v2", "v2"},
                                                    {"d", "v2", "v2"},
                                                    {"g", "v2", "v1"},
                                                    {"h", "v2", "v3"},
                                                    {"e_v1^1", "v1^1", "v1"},
                                                    {"e_v2^1", "v2^1", "v2"}});
}

// n loops at v, named e, f, g, ... for n <= 4 and l0, l1, ... beyond.
inline Graph rose(int n) {
  static const char* names[] = {"e", "f", "g", "h"};
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({n <= 4 ? names[i] : "l" + std::to_string(i), "v", "v"});
  }
  return Graph({"v"}, edges);
}

// Random graphs. Vertices "v0".., edges "e0"..; loops and parallel edges allowed.

inline Graph random_graph(Rng& rng, int max_vertices, int max_edges, int min_vertices = 1) {
  const int nv = std::uniform_int_distribution<int>(min_vertices, max_vertices)(rng);
  const int ne = std::uniform_int_distribution<int>(0, max_edges)(rng);
  std::vector<VertexId> vs;
  for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<int> pick(0, nv - 1);
  std::vector<Edge> es;
  for (int i = 0; i < ne; ++i) es.push_back({"e" + std::to_string(i), vs[pick(rng)], vs[pick(rng)]});
  return Graph(vs, es);
}

// Edges only go from higher to lower vertex index.
inline Graph random_acyclic_graph(Rng& rng, int max_vertices, int max_edges) {
  const int nv = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  const int ne = nv < 2 ? 0 : std::uniform_int_distribution<int>(0, max_edges)(rng);
  std::vector<VertexId> vs;
  for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<Edge> es;
  for (int i = 0; i < ne; ++i) {
    int a = std::uniform_int_distribution<int>(0, nv - 1)(rng);
    int b = std::uniform_int_distribution<int>(0, nv - 1)(rng);
    if (a == b) continue;
    if (a < b) std::swap(a, b);
    es.push_back({"e" + std::to_string(i), vs[a], vs[b]});
  }
  return Graph(vs, es);
}

// Every non-sink gets a loop.
inline Graph random_totally_looped_graph(Rng& rng, int max_vertices, int max_edges) {
  const Graph g = random_graph(rng, max_vertices, max_edges);
  std::vector<Edge> es = g.edges();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_sink(v) && !g.has_loop_at(v)) es.push_back({"l" + g.vertex(v), g.vertex(v), g.vertex(v)});
  }
  return Graph(g.vertices(), es);
}

// Random walk of length <= max_len from start, forwards.
inline PathTerm random_path_from(Rng& rng, const Graph& g, std::uint32_t start, int max_len) {
  PathTerm p{start, {}};
  const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::uint32_t at = start;
  for (int i = 0; i < len; ++i) {
    const auto& out = g.out_edges(at);
    if (out.empty()) break;
    const auto e = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
    p.edges.push_back(static_cast<std::uint32_t>(e));
    at = static_cast<std::uint32_t>(g.dst(e));
  }
  return p;
}

// Random walk of length <= max_len ending at end, built backwards.
inline PathTerm random_path_to(Rng& rng, const Graph& g, std::uint32_t end, int max_len) {
  std::vector<std::uint32_t> rev;
  const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::uint32_t at = end;
  for (int i = 0; i < len; ++i) {
    const auto& in = g.in_edges(at);
    if (in.empty()) break;
    const auto e = in[std::uniform_int_distribution<std::size_t>(0, in.size() - 1)(rng)];
    rev.push_back(static_cast<std::uint32_t>(e));
    at = static_cast<std::uint32_t>(g.src(e));
  }
  return PathTerm{at, {rev.rbegin(), rev.rend()}};
}

inline Monomial random_monomial(Rng& rng, const Graph& g, int max_len) {
  const auto v = std::uniform_int_distribution<std::uint32_t>(0, g.num_vertices() - 1)(rng);
  PathTerm p = random_path_from(rng, g, v, max_len);
  PathTerm q = random_path_to(rng, g, path_range(g, p), max_len);
  return Monomial{p, q};
}

inline Scalar random_scalar(Rng& rng, Field f) {
  long c = 0;
  while (c == 0) c = std::uniform_int_distribution<long>(-3, 3)(rng);
  if (f.prime == 0 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
    return Scalar(f, mpq_class(c, std::uniform_int_distribution<long>(2, 4)(rng)));
  }
  return Scalar(f, c);
}

inline AlgebraElement random_element(Rng& rng, const Graph& g, Field f, int max_terms, int max_len) {
  AlgebraElement a(f);
  const int n = std::uniform_int_distribution<int>(1, max_terms)(rng);
  for (int i = 0; i < n; ++i) a.add_term(random_monomial(rng, g, max_len), random_scalar(rng, f));
  return a;
}

// Exhaustive path enumeration from every vertex, up to max_len edges.
inline std::vector<PathTerm> all_paths(const Graph& g, int max_len) {
  std::vector<PathTerm> out;
  std::vector<PathTerm> layer;
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) layer.push_back({v, {}});
  for (int len = 0; len <= max_len && !layer.empty(); ++len) {
    std::vector<PathTerm> next;
    for (const auto& p : layer) {
      out.push_back(p);
      if (len == max_len) continue;
      for (auto e : g.out_edges(path_range(g, p))) {
        PathTerm q = p;
        q.edges.push_back(static_cast<std::uint32_t>(e));
        next.push_back(std::move(q));
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace lpa::testing

#endif  // LPA_TESTS_FIXTURES_HPP
