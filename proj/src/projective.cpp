#include "lpa/projective.hpp"

#include <limits>
#include <optional>
#include <tuple>

#include "lpa/error.hpp"

namespace lpa {

HairExtension make_hair_extension(const Graph& base, const HairSpec& spec) {
  if (!is_totally_looped(base)) {
    throw Error(ErrorKind::NotTotallyLooped, "hair extensions here need a totally looped base");
  }
  HairExtension h{base, spec, hair_extend(base, spec), {}};
  for (const auto& [v, n] : spec.lengths) {
    for (int j = 1; j < n; ++j) h.strand_map.emplace(strand_vertex(v, j), std::make_pair(v, j));
  }
  return h;
}

HairExtension unit_hair_extension(const Graph& base) {
  HairSpec spec;
  for (const auto& v : base.vertices()) spec.lengths[v] = 1;
  return make_hair_extension(base, spec);
}

ProjectiveClass descend_hair(const HairExtension& h, const ProjectiveClass& q) {
  ProjectiveClass out;
  for (const auto& [v, n] : q.coeffs()) {
    auto it = h.strand_map.find(v);
    if (it != h.strand_map.end()) {
      out.add(it->second.first, n);
    } else {
      if (!h.base.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "no vertex '" + v + "'");
      out.add(v, n);
    }
  }
  return out;
}

namespace {

// One replacement L v = L v + L r(e) + sum over s^{-1}(v) \ {loop, e}: the
// forward relation at v, written so that v keeps its copy through `loop`.
void replace_at(const Graph& g, ProjectiveClass& m, std::size_t v, std::size_t e) {
  std::optional<std::size_t> loop;
  for (std::size_t x : g.out_edges(v)) {
    if (g.dst(x) == v && (!loop || g.edge(x).id < g.edge(*loop).id)) loop = x;
  }
  m.add(g.vertex(g.dst(e)));
  for (std::size_t x : g.out_edges(v)) {
    if (x != *loop && x != e) m.add(g.vertex(g.dst(x)));
  }
}

}  // namespace

NormalizedClass normalize(const HairExtension& h, const ProjectiveClass& q) {
  if (q.is_zero()) throw Error(ErrorKind::ZeroClass, "the zero class has no normalization");
  const Graph& g = h.base;
  ProjectiveClass m = descend_hair(h, q);

  NormalizedClass out;
  out.chain.push_back(m);
  VertexSet support;
  for (const auto& [v, n] : m.coeffs()) support.insert(v);
  out.T = hereditary_closure(g, support);

  for (;;) {
    std::optional<std::tuple<std::size_t, VertexId, VertexId>> best;  // (length, v, z)
    std::vector<EdgeId> best_path;
    for (const auto& z : out.T) {
      if (m[z] > 0) continue;
      for (const auto& [v, n] : m.coeffs()) {
        auto path = shortest_simple_path(g, v, z);
        if (!path) continue;
        std::tuple<std::size_t, VertexId, VertexId> key{path->size(), v, z};
        if (!best || key < *best) {
          best = key;
          best_path = std::move(*path);
        }
      }
    }
    if (!best) break;
    const VertexId& z = std::get<2>(*best);
    for (const auto& id : best_path) {
      const std::size_t e = g.edge_index(id);
      replace_at(g, m, g.src(e), e);
      out.chain.push_back(m);
      if (m[z] > 0) break;
    }
  }
  out.mults = m.coeffs();
  return out;
}

bool is_generator(const HairExtension& h, const ProjectiveClass& q) {
  const NormalizedClass n = normalize(h, q);
  return n.T.size() == h.base.num_vertices();
}

EndGraph end_graph(const HairExtension& h, const ProjectiveClass& q) {
  EndGraph out{Graph(), normalize(h, q)};
  HairSpec spec;
  for (const auto& v : out.normalized.T) {
    const std::uint64_t n = out.normalized.mults.at(v);
    if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      throw Error(ErrorKind::BadSpec, "multiplicity too large for a hair strand");
    }
    spec.lengths[v] = static_cast<int>(n);
  }
  out.G = hair_extend(restriction(h.base, out.normalized.T), spec);
  return out;
}

}  // namespace lpa
