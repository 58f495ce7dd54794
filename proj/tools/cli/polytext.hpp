#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "recprs/poly.hpp"

namespace recprs::cli {

/// Malformed polynomial text. Maps to the usage exit code.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses an expression in x such as "75/16*x^6 - x + 3/2" or
/// "(x+2)^2*((x-3)*(x+1))^3". Juxtaposition multiplies ("4x^7", "2(x+1)").
Poly parse_expression(std::string_view text);

/// Parses a JSON array of coefficients, highest degree first. Entries may be
/// integers or strings holding "p" or "p/q".
Poly parse_coefficient_array(const nlohmann::json& array);

/// Accepts an expression, a JSON array, or "@path" naming a file holding
/// either form.
Poly parse_poly_text(std::string_view text);

/// Canonical expression text, highest power first; parse_expression inverts it.
std::string to_text(const Poly& p);

/// Coefficients as fraction strings, highest degree first ("[]" for zero).
nlohmann::json to_json_coefficients(const Poly& p);

/// {"degree", "coefficients", "text"}; degree is null for the zero polynomial.
nlohmann::json to_json(const Poly& p);

nlohmann::json to_json(const Rational& q);

}  // namespace recprs::cli
