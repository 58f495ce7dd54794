#include "recprs/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "recprs/error.hpp"

namespace recprs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::DegreeOrder: return "DegreeOrder";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::JOutOfRange: return "JOutOfRange";
    case ErrorKind::IncompletePrs: return "IncompletePrs";
    case ErrorKind::SingularU: return "SingularU";
    case ErrorKind::EmptySequence: return "EmptySequence";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::InvalidRule: return "InvalidRule";
    case ErrorKind::InexactDivision: return "InexactDivision";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw std::invalid_argument("invalid rational literal: " + std::string(text));
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("invalid rational literal: " + std::string(text));
  }
  Integer d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return make_rational(parse_integer(num), d);
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace recprs
