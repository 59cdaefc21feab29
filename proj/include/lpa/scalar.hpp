#ifndef LPA_SCALAR_HPP
#define LPA_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lpa {

/// Coefficient field: exact rationals (prime == 0) or GF(prime).
struct Field {
  std::uint64_t prime = 0;

  static Field rationals() { return {}; }
  static Field gf(std::uint64_t p);

  bool is_rational() const { return prime == 0; }
  bool operator==(const Field&) const = default;
};

/// Exact field element. Mixing elements of different fields throws
/// Error{FieldMismatch}.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(Field f, long value);
  Scalar(Field f, const mpq_class& value);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }
  /// "a", "-a" or "a/b" with integers a, b. Throws Error{ParseError}.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_negative() const;  // rational mode only; residues are never negative

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  bool operator==(const Scalar& o) const;

  std::string to_string() const;

 private:
  void check(const Scalar& o) const;
  void reduce();

  Field field_{};
  mpq_class q_{0};       // rational mode
  std::uint64_t r_ = 0;  // prime mode, in [0, prime)
};

}  // namespace lpa

#endif  // LPA_SCALAR_HPP
