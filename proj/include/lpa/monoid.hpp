#ifndef LPA_MONOID_HPP
#define LPA_MONOID_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/moves.hpp"

namespace lpa {

/// Element of the free abelian monoid on the vertices. Zero coefficients are
/// never stored.
class MonoidElement {
 public:
  MonoidElement() = default;
  explicit MonoidElement(const std::map<VertexId, std::uint64_t>& coeffs);

  std::uint64_t operator[](const VertexId& v) const;
  void add(const VertexId& v, std::uint64_t n = 1);
  /// Throws std::invalid_argument if fewer than n copies are present.
  void remove(const VertexId& v, std::uint64_t n = 1);
  void erase(const VertexId& v) { coeffs_.erase(v); }

  const std::map<VertexId, std::uint64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::uint64_t mass() const;
  bool contains(const MonoidElement& other) const;

  MonoidElement& operator+=(const MonoidElement& other);
  friend MonoidElement operator+(MonoidElement a, const MonoidElement& b) { return a += b; }
  friend MonoidElement operator*(std::uint64_t k, const MonoidElement& a);

  auto operator<=>(const MonoidElement&) const = default;
  bool operator==(const MonoidElement&) const = default;

 private:
  std::map<VertexId, std::uint64_t> coeffs_;
};

/// sum_{e in s^{-1}(v)} r(e). Throws SinkVertex.
MonoidElement amp_relation(const Graph& g, const VertexId& v);

/// One forward or backward application of a defining relation.
std::set<MonoidElement> step_neighbors(const Graph& g, const MonoidElement& m);

enum class Verdict { Equivalent, Inequivalent, Unknown };

std::string_view to_string(Verdict v);

struct CongruenceVerdict {
  Verdict status = Verdict::Unknown;
  /// For Equivalent: a, ..., b with consecutive entries one step apart.
  std::optional<std::vector<MonoidElement>> witness;
  std::size_t states_visited = 0;
};

/// Bounded bidirectional breadth-first search for a ~ b. `max_states` bounds
/// the distinct elements visited over both sides.
CongruenceVerdict congruent_within(const Graph& g, const MonoidElement& a, const MonoidElement& b,
                                   std::size_t max_states);

/// Image of `m` after a SourceElim, Collapse or IsolatedRemoval at
/// move.vertex, which must be a vertex of g_before.
MonoidElement class_map_under_move(const MoveRecord& move, const Graph& g_before,
                                   const MonoidElement& m);

namespace monoid_kernels {

/// Dense form over a fixed graph: counts indexed by vertex.
using Counts = std::vector<std::uint32_t>;

struct RelationTable {
  explicit RelationTable(const Graph& g);
  std::vector<char> regular;
  std::vector<Counts> rhs;  // amp_relation per vertex, dense
};

Counts to_counts(const Graph& g, const MonoidElement& m);
MonoidElement from_counts(const Graph& g, const Counts& c);

/// Neighbors of every frontier element, concatenated in frontier order, each
/// element's neighbors sorted. OpenMP-parallel over the frontier.
std::vector<std::vector<Counts>> expand_frontier(const RelationTable& t,
                                                 const std::vector<Counts>& frontier);
/// Serial reference for expand_frontier.
std::vector<std::vector<Counts>> expand_frontier_serial(const RelationTable& t,
                                                        const std::vector<Counts>& frontier);

}  // namespace monoid_kernels

}  // namespace lpa

#endif  // LPA_MONOID_HPP
