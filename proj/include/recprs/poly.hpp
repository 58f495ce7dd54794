#pragma once

#include <compare>
#include <optional>
#include <cstddef>
#include <utility>
#include <vector>

#include "recprs/rational.hpp"

namespace recprs {

/// Polynomial degree with a distinguished negative-infinity value for the
/// zero polynomial. Converting the sentinel to a number throws.
class Degree {
 public:
  constexpr Degree() = default;  // negative infinity
  constexpr explicit Degree(int value) : value_(value), finite_(true) {}

  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const noexcept { return !finite_; }
  /// Throws ZeroPolynomial for the sentinel.
  int value() const;

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(Degree a, int b) { return a == Degree(b); }
  friend constexpr std::strong_ordering operator<=>(Degree a, int b) { return a <=> Degree(b); }

 private:
  int value_ = 0;
  bool finite_ = false;
};

/// Coefficient column, highest power first, with an explicit declared degree.
struct CoeffVector {
  std::vector<Rational> entries;

  int declared_degree() const { return static_cast<int>(entries.size()) - 1; }
  /// Coefficient of x^power; zero outside 0..declared_degree.
  Rational at_power(int power) const;

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

/// Dense univariate polynomial over the rationals. Coefficients are stored in
/// ascending powers and trimmed so the top stored coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  /// Ascending coefficients a_0, ..., a_n; trailing zeros are dropped.
  explicit Poly(std::vector<Rational> ascending);
  Poly(std::initializer_list<Rational> ascending)
      : Poly(std::vector<Rational>(ascending)) {}

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int power);
  static Poly x() { return monomial(1, 1); }
  /// Highest degree first.
  static Poly from_descending(std::vector<Rational> descending);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  Degree degree() const;
  /// Throws ZeroPolynomial.
  const Rational& lc() const;
  /// Coefficient of x^power, zero beyond the degree.
  Rational coeff(int power) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Poly derivative() const;
  Poly scaled(const Rational& c) const;
  Rational evaluate(const Rational& at) const;

  /// Column of length declared_degree+1, highest power first. Throws
  /// DegreeTooSmall if declared_degree < degree().
  CoeffVector coeff_vector(int declared_degree) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(const Poly& a) { return a.scaled(-1); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Field division p = quotient*q + remainder, deg(remainder) < deg(q).
/// Throws DivisionByZeroPoly.
DivRem divrem(const Poly& p, const Poly& q);

Poly pow(const Poly& p, unsigned exponent);

/// Returns c with a == c*b when such a nonzero rational exists (both zero
/// counts, returning 1); otherwise nullopt.
std::optional<Rational> proportionality(const Poly& a, const Poly& b);

}  // namespace recprs
