#ifndef LPA_END_ISO_HPP
#define LPA_END_ISO_HPP

#include "lpa/algebra.hpp"
#include "lpa/projective.hpp"

namespace lpa {

/// Block (i, y), (j, z) of the matrix isomorphism between End(Q) and L(G):
/// rows of vertex i at strand depth y (0 = i itself), columns of j at depth z.
struct CornerIndex {
  VertexId i;
  int y = 0;
  VertexId j;
  int z = 0;
};

/// The path from the depth-`depth` strand vertex above v down to v in g_out,
/// as an element (v itself for depth 0). Throws BadSpec if the strand is too
/// short.
AlgebraElement strand_path(const Graph& g_out, const VertexId& v, int depth, Field f);

/// p_i^y x (p_j^z)^* in L(g_out), for x in v_i L(h.total) v_j. Throws
/// NotInCorner when x is not fixed by the corner projection.
AlgebraElement end_iso_phi(const HairExtension& h, const Graph& g_out, const CornerIndex& idx,
                           const AlgebraElement& x);

}  // namespace lpa

#endif  // LPA_END_ISO_HPP
