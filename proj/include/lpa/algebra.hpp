#ifndef LPA_ALGEBRA_HPP
#define LPA_ALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

/// Path given by a start vertex and a sequence of edge indices; the empty
/// sequence is the length-0 path at `start`.
struct PathTerm {
  std::uint32_t start = 0;
  std::vector<std::uint32_t> edges;

  std::size_t length() const { return edges.size(); }
  auto operator<=>(const PathTerm&) const = default;
  bool operator==(const PathTerm&) const = default;
};

std::uint32_t path_range(const Graph& g, const PathTerm& p);
bool is_valid_path(const Graph& g, const PathTerm& p);
/// Concatenation; the caller guarantees r(a) == s(b).
PathTerm concat(const PathTerm& a, const PathTerm& b);

/// The monomial p q^*, with r(p) == r(q).
struct Monomial {
  PathTerm p;
  PathTerm q;

  int degree() const { return static_cast<int>(p.length()) - static_cast<int>(q.length()); }
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

bool is_valid_monomial(const Graph& g, const Monomial& m);

/// Finite K-combination of pq^* monomials over a graph the caller keeps
/// track of. Zero coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit AlgebraElement(Field f = Field::rationals()) : field_(f) {}

  static AlgebraElement vertex(const Graph& g, Field f, std::string_view v);
  static AlgebraElement edge(const Graph& g, Field f, std::string_view e);
  static AlgebraElement ghost(const Graph& g, Field f, std::string_view e);
  static AlgebraElement path(const Graph& g, Field f, const std::vector<EdgeId>& p,
                             const std::vector<EdgeId>& q);
  static AlgebraElement of(Field f, const Monomial& m);

  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Scalar& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);

  /// Term-wise equality. Use `equal` for equality in the algebra.
  bool operator==(const AlgebraElement& o) const = default;

 private:
  Field field_;
  Terms terms_;
};

/// Throws Error{GraphMismatch} if some monomial is not a valid pq^* over g.
void validate(const Graph& g, const AlgebraElement& a);

/// Canonical representative: rewrites p'γ(q'γ)^* with γ the smallest edge
/// (by id) out of the common vertex until no such monomial is left. The
/// surviving monomials form a basis of L_K(g).
AlgebraElement normal_form(const Graph& g, const AlgebraElement& a);
AlgebraElement normal_form_serial(const Graph& g, const AlgebraElement& a);

/// True iff the monomial is already reduced.
bool is_reduced(const Graph& g, const Monomial& m);

/// Product in L_K(g), returned in normal form.
AlgebraElement multiply(const Graph& g, const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement multiply_serial(const Graph& g, const AlgebraElement& a, const AlgebraElement& b);

bool equal(const Graph& g, const AlgebraElement& a, const AlgebraElement& b);

/// pq^* -> qp^* (scalars are fixed: the fields here carry trivial involution).
AlgebraElement star(const AlgebraElement& a);

/// Homogeneous components by |p| - |q|.
std::map<int, AlgebraElement> degree_split(const Graph& g, const AlgebraElement& a);

/// Re-expresses `a` over `to` by matching vertex and edge labels.
AlgebraElement transport(const Graph& from, const Graph& to, const AlgebraElement& a);

/// Text form: "2*[e1.e2|f1] + 1*[v]" means 2 (e1 e2)(f1)^* + v. A side of
/// "[p|q]" is a vertex label, a dot-separated edge sequence, or empty (the
/// length-0 path at the other side's range); "[p]" means q is trivial.
std::string format_element(const Graph& g, const AlgebraElement& a);
AlgebraElement parse_element(const Graph& g, Field f, std::string_view text);

}  // namespace lpa

#endif  // LPA_ALGEBRA_HPP
