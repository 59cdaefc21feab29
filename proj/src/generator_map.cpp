#include "lpa/generator_map.hpp"

#include "lpa/error.hpp"

namespace lpa {

namespace {

using Kind = Generator::Kind;

Generator vtx(std::size_t i) { return {Kind::Vertex, i}; }
Generator edg(std::size_t i) { return {Kind::Edge, i}; }
Generator gst(std::size_t i) { return {Kind::Ghost, i}; }

const AlgebraElement& image_of(const Graph& src, const GeneratorMap& m, const Generator& x) {
  auto find = [](const auto& table, const std::string& key) -> const AlgebraElement& {
    auto it = table.find(key);
    if (it == table.end()) throw Error(ErrorKind::GraphMismatch, "generator map has no image for '" + key + "'");
    return it->second;
  };
  switch (x.kind) {
    case Kind::Vertex: return find(m.on_vertices, src.vertex(x.index));
    case Kind::Edge: return find(m.on_edges, src.edge(x.index).id);
    case Kind::Ghost: return find(m.on_ghost_edges, src.edge(x.index).id);
  }
  throw Error(ErrorKind::GraphMismatch, "bad generator");
}

Field map_field(const GeneratorMap& m) {
  if (!m.on_vertices.empty()) return m.on_vertices.begin()->second.field();
  return Field::rationals();
}

}  // namespace

std::vector<Relation> defining_relations(const Graph& g, Field f) {
  const Scalar one = Scalar::one(f);
  const Scalar minus_one = -one;
  std::vector<Relation> rels;
  const std::size_t nv = g.num_vertices();
  const std::size_t ne = g.num_edges();

  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t w = 0; w < nv; ++w) {
      Relation r{"(1) " + g.vertex(v) + "." + g.vertex(w), {{one, {vtx(v), vtx(w)}}}};
      if (v == w) r.terms.push_back({minus_one, {vtx(w)}});
      rels.push_back(std::move(r));
    }
  }
  for (std::size_t e = 0; e < ne; ++e) {
    const std::string& id = g.edge(e).id;
    const std::size_t s = g.src(e);
    const std::size_t t = g.dst(e);
    rels.push_back({"(2) s(" + id + ")." + id, {{one, {vtx(s), edg(e)}}, {minus_one, {edg(e)}}}});
    rels.push_back({"(2) " + id + ".r(" + id + ")", {{one, {edg(e)}}, {minus_one, {edg(e), vtx(t)}}}});
    rels.push_back({"(2) r(" + id + ")." + id + "*", {{one, {vtx(t), gst(e)}}, {minus_one, {gst(e)}}}});
    rels.push_back({"(2) " + id + "*.s(" + id + ")", {{one, {gst(e)}}, {minus_one, {gst(e), vtx(s)}}}});
  }
  for (std::size_t e = 0; e < ne; ++e) {
    for (std::size_t f2 = 0; f2 < ne; ++f2) {
      Relation r{"(3) " + g.edge(e).id + "*." + g.edge(f2).id, {{one, {gst(e), edg(f2)}}}};
      if (e == f2) r.terms.push_back({minus_one, {vtx(g.dst(e))}});
      rels.push_back(std::move(r));
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (g.is_sink(v)) continue;
    Relation r{"(4) " + g.vertex(v), {{one, {vtx(v)}}}};
    for (std::size_t e : g.out_edges(v)) r.terms.push_back({minus_one, {edg(e), gst(e)}});
    rels.push_back(std::move(r));
  }
  return rels;
}

GeneratorMap identity_map(const Graph& g, Field f) {
  GeneratorMap m;
  for (const auto& v : g.vertices()) m.on_vertices.emplace(v, AlgebraElement::vertex(g, f, v));
  for (const auto& e : g.edges()) {
    m.on_edges.emplace(e.id, AlgebraElement::edge(g, f, e.id));
    m.on_ghost_edges.emplace(e.id, AlgebraElement::ghost(g, f, e.id));
  }
  return m;
}

AlgebraElement apply_map(const Graph& src, const Graph& dst, const GeneratorMap& m, const Word& w) {
  if (w.empty()) throw Error(ErrorKind::GraphMismatch, "empty word");
  AlgebraElement acc = normal_form(dst, image_of(src, m, w.front()));
  for (std::size_t i = 1; i < w.size() && !acc.is_zero(); ++i) {
    acc = multiply(dst, acc, image_of(src, m, w[i]));
  }
  return acc;
}

AlgebraElement apply_map(const Graph& src, const Graph& dst, const GeneratorMap& m,
                         const Relation& r) {
  AlgebraElement total(r.terms.empty() ? map_field(m) : r.terms.front().first.field());
  for (const auto& [c, w] : r.terms) total += c * apply_map(src, dst, m, w);
  return normal_form(dst, total);
}

AlgebraElement apply_map(const Graph& src, const Graph& dst, const GeneratorMap& m,
                         const AlgebraElement& x) {
  validate(src, x);
  AlgebraElement total(x.field());
  for (const auto& [mono, c] : x.terms()) {
    Word w;
    if (mono.p.edges.empty() && mono.q.edges.empty()) {
      w.push_back(vtx(mono.p.start));
    } else {
      for (auto e : mono.p.edges) w.push_back(edg(e));
      for (auto it = mono.q.edges.rbegin(); it != mono.q.edges.rend(); ++it) w.push_back(gst(*it));
    }
    total += c * apply_map(src, dst, m, w);
  }
  return normal_form(dst, total);
}

AlgebraElement evaluate(const Graph& g, const Relation& r, Field f) {
  return apply_map(g, g, identity_map(g, f), r);
}

std::string format_word(const Graph& g, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    switch (w[i].kind) {
      case Kind::Vertex: s += g.vertex(w[i].index); break;
      case Kind::Edge: s += g.edge(w[i].index).id; break;
      case Kind::Ghost: s += g.edge(w[i].index).id + "*"; break;
    }
  }
  return s;
}

GeneratorMap move_r_psi(const Graph& e_graph, std::string_view w, Field f) {
  const Graph g = move_r(e_graph, w);
  const std::size_t wi = e_graph.vertex_index(w);
  const EdgeId& out = e_graph.edge(e_graph.out_edges(wi).front()).id;
  std::map<EdgeId, EdgeId> composite;  // [ef] -> e
  for (std::size_t e : e_graph.in_edges(wi)) composite.emplace(composite_label(e_graph.edge(e).id, out), e_graph.edge(e).id);

  GeneratorMap m;
  for (const auto& u : g.vertices()) m.on_vertices.emplace(u, AlgebraElement::vertex(e_graph, f, u));
  for (const auto& edge : g.edges()) {
    auto it = composite.find(edge.id);
    if (it != composite.end()) {
      m.on_edges.emplace(edge.id, AlgebraElement::path(e_graph, f, {it->second, out}, {}));
      m.on_ghost_edges.emplace(edge.id, AlgebraElement::path(e_graph, f, {}, {it->second, out}));
    } else {
      m.on_edges.emplace(edge.id, AlgebraElement::edge(e_graph, f, edge.id));
      m.on_ghost_edges.emplace(edge.id, AlgebraElement::ghost(e_graph, f, edge.id));
    }
  }
  return m;
}

GeneratorMap in_split_pi(const Graph& e_graph, std::string_view v, const Partition& p, Field f) {
  const Graph is = in_split(e_graph, v, p);
  const std::size_t vi = e_graph.vertex_index(v);

  std::map<EdgeId, std::size_t> block;  // 1-based block of each edge in r^{-1}(v)
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    for (const auto& id : p.blocks[b]) block[id] = b + 1;
  }
  std::vector<EdgeId> emitted;
  for (std::size_t e : e_graph.out_edges(vi)) emitted.push_back(e_graph.edge(e).id);

  GeneratorMap m;
  for (const auto& u : e_graph.vertices()) {
    const VertexId image = u == v ? in_split_vertex(v, 1) : u;
    m.on_vertices.emplace(u, AlgebraElement::vertex(is, f, image));
  }
  for (std::size_t e = 0; e < e_graph.num_edges(); ++e) {
    const EdgeId& id = e_graph.edge(e).id;
    const bool into_v = e_graph.dst(e) == vi;
    const bool from_v = e_graph.src(e) == vi;
    AlgebraElement t(f);
    if (into_v && !emitted.empty()) {
      // Sum over f in s^{-1}(v) of e' f_i f_1^*, with e' = e_1 for a loop.
      const std::size_t i = block.at(id);
      const EdgeId head = from_v ? in_split_edge(id, 1) : id;
      for (const auto& out : emitted) {
        t += AlgebraElement::path(is, f, {head, in_split_edge(out, i)}, {in_split_edge(out, 1)});
      }
    } else if (from_v) {
      t = AlgebraElement::edge(is, f, in_split_edge(id, 1));
    } else {
      t = AlgebraElement::edge(is, f, id);
    }
    m.on_ghost_edges.emplace(id, star(t));
    m.on_edges.emplace(id, std::move(t));
  }
  return m;
}

VerificationResult verify_generator_map(const Graph& src, const Graph& dst, const GeneratorMap& m) {
  VerificationResult result;
  const Field f = map_field(m);
  for (const auto& r : defining_relations(src, f)) {
    const AlgebraElement residual = apply_map(src, dst, m, r);
    if (!residual.is_zero()) {
      result.ok = false;
      result.failures.push_back({r.label, format_element(dst, residual)});
    }
  }
  AlgebraElement unit(f);
  for (const auto& v : src.vertices()) unit += image_of(src, m, vtx(src.vertex_index(v)));
  const AlgebraElement defect = multiply(dst, unit, unit) - normal_form(dst, unit);
  if (!normal_form(dst, defect).is_zero()) {
    result.ok = false;
    result.failures.push_back({"image of 1 is idempotent", format_element(dst, normal_form(dst, defect))});
  }
  return result;
}

}  // namespace lpa
