#include "recprs/poly.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "recprs/error.hpp"

namespace recprs {

int Degree::value() const {
  if (!finite_) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  return value_;
}

Rational CoeffVector::at_power(int power) const {
  const int d = declared_degree();
  if (power < 0 || power > d) return 0;
  return entries[static_cast<std::size_t>(d - power)];
}

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int power) {
  if (power < 0) throw Error(ErrorKind::IndexOutOfRange, "negative monomial power");
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_descending(std::vector<Rational> descending) {
  std::reverse(descending.begin(), descending.end());
  return Poly(std::move(descending));
}

Degree Poly::degree() const {
  if (coeffs_.empty()) return Degree::neg_infinity();
  return Degree(static_cast<int>(coeffs_.size()) - 1);
}

const Rational& Poly::lc() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "lc of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::coeff(int power) const {
  if (power < 0 || static_cast<std::size_t>(power) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

Rational Poly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

CoeffVector Poly::coeff_vector(int declared_degree) const {
  if (degree() > declared_degree) {
    throw Error(ErrorKind::DegreeTooSmall,
                "declared degree " + std::to_string(declared_degree) + " below actual degree");
  }
  CoeffVector v;
  v.entries.resize(static_cast<std::size_t>(declared_degree) + 1);
  for (int p = 0; p <= declared_degree; ++p) {
    v.entries[static_cast<std::size_t>(declared_degree - p)] = coeff(p);
  }
  return v;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

DivRem divrem(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
  std::vector<Rational> rem = p.coefficients();
  const auto& d = q.coefficients();
  const std::size_t dq = d.size() - 1;
  if (rem.size() <= dq) return {Poly{}, p};
  std::vector<Rational> quot(rem.size() - dq);
  const Rational inv_lc = 1 / d.back();
  for (std::size_t top = rem.size(); top-- > dq;) {
    if (rem[top] == 0) continue;
    Rational c = rem[top] * inv_lc;
    const std::size_t shift = top - dq;
    quot[shift] = c;
    for (std::size_t i = 0; i <= dq; ++i) rem[shift + i] -= c * d[i];
  }
  rem.resize(dq);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly out = Poly::constant(1);
  for (unsigned i = 0; i < exponent; ++i) out *= p;
  return out;
}

std::optional<Rational> proportionality(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Rational(1);
  if (a.is_zero() || b.is_zero() || a.degree() != b.degree()) return std::nullopt;
  Rational c = a.lc() / b.lc();
  if (a == b.scaled(c)) return c;
  return std::nullopt;
}

}  // namespace recprs
