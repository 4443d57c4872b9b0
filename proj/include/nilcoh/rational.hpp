#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace nilcoh {

// Arbitrary-precision rational scalar. Values are kept canonical at all
// times: denominator > 0 and gcd(|numerator|, denominator) = 1.
//
// All operators return plain values (no expression templates leak out of
// the GMP backend), so the type works as an Eigen scalar.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}                       // NOLINT(google-explicit-constructor)
  Rational(long n) : q_(n) {}                      // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : q_(num, den) { canonicalize(); }
  explicit Rational(const mpz_class& n) : q_(n) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { canonicalize(); }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Bits of |numerator| plus bits of denominator; the pivot-selection
  // measure for exact elimination.
  std::size_t bit_size() const;

  // Shortest form: "p" when the denominator is 1, else "p/q".
  std::string str() const { return q_.get_str(); }
  // Always "p/q", including "/1".
  std::string str_slash() const;

  double to_double() const { return q_.get_d(); }

  // Accepts "p" or "p/q" with an optional leading sign; no whitespace.
  static std::optional<Rational> parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_), canonical_tag{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_), canonical_tag{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_), canonical_tag{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ / b.q_), canonical_tag{});
  }
  Rational operator-() const { return Rational(mpq_class(-q_), canonical_tag{}); }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    q_ /= o.q_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend Rational abs(const Rational& a) {
    return Rational(mpq_class(::abs(a.q_)), canonical_tag{});
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  struct canonical_tag {};
  Rational(mpq_class q, canonical_tag) : q_(std::move(q)) {}
  void canonicalize() { q_.canonicalize(); }

  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace nilcoh

namespace Eigen {

template <>
struct NumTraits<nilcoh::Rational> : GenericNumTraits<nilcoh::Rational> {
  typedef nilcoh::Rational Real;
  typedef nilcoh::Rational NonInteger;
  typedef nilcoh::Rational Nested;

  static inline Real epsilon() { return nilcoh::Rational(0); }
  static inline Real dummy_precision() { return nilcoh::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen
