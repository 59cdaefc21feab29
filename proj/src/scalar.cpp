#include "lpa/scalar.hpp"

#include <charconv>

#include "lpa/error.hpp"

namespace lpa {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (e) {
    if (e & 1) result = mulmod(result, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t residue(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % mpz_class(std::to_string(p));
  if (m < 0) m += mpz_class(std::to_string(p));
  return std::stoull(m.get_str());
}

}  // namespace

Field Field::gf(std::uint64_t p) {
  if (!is_prime(p) || p > (1ull << 62)) {
    throw Error(ErrorKind::ParseError, "field characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return Field{p};
}

Scalar::Scalar(Field f, long value) : field_(f) {
  if (f.is_rational()) {
    q_ = value;
    return;
  }
  const auto p = static_cast<__int128>(f.prime);
  r_ = static_cast<std::uint64_t>(((static_cast<__int128>(value) % p) + p) % p);
}

Scalar::Scalar(Field f, const mpq_class& value) : field_(f), q_(value) { reduce(); }

void Scalar::reduce() {
  if (field_.is_rational()) {
    q_.canonicalize();
    return;
  }
  const std::uint64_t num = residue(q_.get_num(), field_.prime);
  const std::uint64_t den = residue(q_.get_den(), field_.prime);
  if (den == 0) throw Error(ErrorKind::ParseError, "denominator vanishes modulo the characteristic");
  r_ = mulmod(num, powmod(den, field_.prime - 2, field_.prime), field_.prime);
  q_ = 0;
}

Scalar Scalar::parse(Field f, std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty number in '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error(ErrorKind::ParseError, "bad number '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error(ErrorKind::ParseError, "bad number '" + std::string(text) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits);
  };
  const auto slash = text.find('/');
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = slash == std::string_view::npos ? mpz_class(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Scalar(f, mpq_class(num, den));
}

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "scalars from different fields");
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }
bool Scalar::is_negative() const { return field_.is_rational() && q_ < 0; }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.prime - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + o.r_) % field_.prime);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = mulmod(r_, o.r_, field_.prime);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = powmod(r_, field_.prime - 2, field_.prime);
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && (field_.is_rational() ? q_ == o.q_ : r_ == o.r_);
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace lpa
