#include "lpa/end_iso.hpp"

#include "lpa/error.hpp"
#include "lpa/moves.hpp"

namespace lpa {

AlgebraElement strand_path(const Graph& g_out, const VertexId& v, int depth, Field f) {
  if (depth < 0 || !g_out.has_vertex(strand_vertex(v, depth))) {
    throw Error(ErrorKind::BadSpec, "no strand vertex of depth " + std::to_string(depth) + " above '" + v + "'");
  }
  if (depth == 0) return AlgebraElement::vertex(g_out, f, v);
  std::vector<EdgeId> edges;
  for (int k = depth; k >= 1; --k) edges.push_back(strand_edge(v, k));
  return AlgebraElement::path(g_out, f, edges, {});
}

AlgebraElement end_iso_phi(const HairExtension& h, const Graph& g_out, const CornerIndex& idx,
                           const AlgebraElement& x) {
  const Graph& e = h.total;
  const Field f = x.field();
  const AlgebraElement vi = AlgebraElement::vertex(e, f, idx.i);
  const AlgebraElement vj = AlgebraElement::vertex(e, f, idx.j);
  const AlgebraElement projected = multiply(e, multiply(e, vi, x), vj);
  if (!equal(e, projected, x)) {
    throw Error(ErrorKind::NotInCorner, "element is not in " + idx.i + " L " + idx.j);
  }
  AlgebraElement moved(f);
  try {
    moved = transport(e, g_out, normal_form(e, x));
  } catch (const Error&) {
    throw Error(ErrorKind::NotInCorner, "element uses generators outside the restricted graph");
  }
  const AlgebraElement left = strand_path(g_out, idx.i, idx.y, f);
  const AlgebraElement right = star(strand_path(g_out, idx.j, idx.z, f));
  return multiply(g_out, multiply(g_out, left, moved), right);
}

}  // namespace lpa
