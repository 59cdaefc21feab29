#ifndef LPA_PROJECTIVE_HPP
#define LPA_PROJECTIVE_HPP

#include <map>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/monoid.hpp"
#include "lpa/moves.hpp"

namespace lpa {

/// Class of a finitely generated projective as a vertex multiset; must be
/// nonzero wherever an operation says so.
using ProjectiveClass = MonoidElement;

/// A totally looped base together with a strands-of-hair extension of it.
struct HairExtension {
  Graph base;
  HairSpec spec;
  Graph total;
  /// strand vertex -> (base vertex, depth >= 1)
  std::map<VertexId, std::pair<VertexId, int>> strand_map;
};

/// Throws NotTotallyLooped or BadSpec.
HairExtension make_hair_extension(const Graph& base, const HairSpec& spec);
/// base as base^+(1, ..., 1).
HairExtension unit_hair_extension(const Graph& base);

struct NormalizedClass {
  VertexSet T;
  std::map<VertexId, std::uint64_t> mults;
  /// Class after hair descent, then after every replacement step; every
  /// consecutive pair is a sequence of forward monoid steps.
  std::vector<MonoidElement> chain;
};

ProjectiveClass descend_hair(const HairExtension& h, const ProjectiveClass& q);

/// Rewrites q over a hereditary T in the base with every multiplicity >= 1.
/// Missing vertices are reached along shortest simple paths, closest
/// (support, missing) pair first with lexicographic ties; each step keeps the
/// smallest loop at the current vertex. Throws ZeroClass.
NormalizedClass normalize(const HairExtension& h, const ProjectiveClass& q);

bool is_generator(const HairExtension& h, const ProjectiveClass& q);

struct EndGraph {
  Graph G;
  NormalizedClass normalized;
};

/// G = (base restricted to T)^+(m_v : v in T).
EndGraph end_graph(const HairExtension& h, const ProjectiveClass& q);

}  // namespace lpa

#endif  // LPA_PROJECTIVE_HPP
