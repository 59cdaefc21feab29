#ifndef LPA_GENERATOR_MAP_HPP
#define LPA_GENERATOR_MAP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/graph.hpp"
#include "lpa/moves.hpp"

namespace lpa {

/// A generator of the free algebra on v, e, e^*.
struct Generator {
  enum class Kind { Vertex, Edge, Ghost };
  Kind kind;
  std::size_t index;

  bool operator==(const Generator&) const = default;
};

using Word = std::vector<Generator>;

/// LHS - RHS of one instance of a defining relation, kept as a formal
/// combination of words so it can be pushed through a generator map.
struct Relation {
  std::string label;
  std::vector<std::pair<Scalar, Word>> terms;
};

/// Every instance of relations (1)-(4) for g.
std::vector<Relation> defining_relations(const Graph& g, Field f = Field::rationals());

/// Images of the generators of a source graph, as elements over a target
/// graph.
struct GeneratorMap {
  std::map<VertexId, AlgebraElement> on_vertices;
  std::map<EdgeId, AlgebraElement> on_edges;
  std::map<EdgeId, AlgebraElement> on_ghost_edges;
};

GeneratorMap identity_map(const Graph& g, Field f = Field::rationals());

/// Multiplicative extension of m applied to a word of src generators,
/// normal-formed in dst.
AlgebraElement apply_map(const Graph& src, const Graph& dst, const GeneratorMap& m, const Word& w);
AlgebraElement apply_map(const Graph& src, const Graph& dst, const GeneratorMap& m,
                         const Relation& r);
/// Image of an element of L(src) (pq^* terms expanded into generator words).
AlgebraElement apply_map(const Graph& src, const Graph& dst, const GeneratorMap& m,
                         const AlgebraElement& x);

/// Identity-map evaluation of a relation in L(g).
AlgebraElement evaluate(const Graph& g, const Relation& r, Field f = Field::rationals());

std::string format_word(const Graph& g, const Word& w);

/// psi: L(G) -> L(E) for G = move_r(E, w): [ef] -> ef, [ef]^* -> f^*e^*,
/// everything else fixed.
GeneratorMap move_r_psi(const Graph& e_graph, std::string_view w, Field f = Field::rationals());

/// pi: L(E) -> L(E_is) given by Q_u, T_e, T_{e^*}.
GeneratorMap in_split_pi(const Graph& e_graph, std::string_view v, const Partition& p,
                         Field f = Field::rationals());

struct VerificationFailure {
  std::string relation;
  std::string residual;
};

struct VerificationResult {
  bool ok = true;
  std::vector<VerificationFailure> failures;
};

/// Pushes every defining relation of src through m and normal-forms it in
/// dst; also checks that the image of 1 is idempotent.
VerificationResult verify_generator_map(const Graph& src, const Graph& dst, const GeneratorMap& m);

}  // namespace lpa

#endif  // LPA_GENERATOR_MAP_HPP
