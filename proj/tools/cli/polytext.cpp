#include "polytext.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "recprs/rational.hpp"

namespace recprs::cli {

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'X' || c == '(';
  }

  Poly expression() {
    Poly acc;
    bool first = true;
    for (;;) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        return acc;
      }
      Poly t = term();
      acc += negate ? -t : t;
      first = false;
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (starts_factor(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected a nonnegative integer exponent");
      if (digits.size() > 4) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Poly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return Poly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      const std::size_t save = pos_;
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::string den = read_digits();
        if (den.empty()) {
          pos_ = save;
          fail("expected a denominator");
        }
        num += "/" + den;
      }
      try {
        return Poly::constant(parse_rational(num));
      } catch (const std::invalid_argument&) {
        fail("invalid number \"" + num + "\"");
      }
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool looks_like_json_array(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '[';
  }
  return false;
}

}  // namespace

Poly parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

Poly parse_coefficient_array(const nlohmann::json& array) {
  if (!array.is_array()) throw ParseError("coefficient list must be a JSON array");
  std::vector<Rational> desc;
  for (const auto& entry : array) {
    if (entry.is_number_integer()) {
      desc.emplace_back(entry.dump());
    } else if (entry.is_string()) {
      try {
        desc.push_back(parse_rational(entry.get<std::string>()));
      } catch (const std::invalid_argument&) {
        throw ParseError("invalid coefficient \"" + entry.get<std::string>() + "\"");
      }
    } else {
      throw ParseError("coefficients must be integers or fraction strings, got " + entry.dump());
    }
  }
  return Poly::from_descending(std::move(desc));
}

Poly parse_poly_text(std::string_view text) {
  if (!text.empty() && text.front() == '@') {
    const std::string path(text.substr(1));
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string content = buf.str();
    if (content.find('@') == 0) throw ParseError("nested @file reference in " + path);
    return parse_poly_text(content);
  }
  if (looks_like_json_array(text)) {
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_coefficient_array(parsed);
  }
  return parse_expression(text);
}

std::string to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& a = p.coefficients();
  for (int e = static_cast<int>(a.size()) - 1; e >= 0; --e) {
    const Rational& c = a[static_cast<std::size_t>(e)];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (e == 0 || !unit) out += mag.get_str();
    if (e > 0) {
      if (!unit) out += "*";
      out += "x";
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

nlohmann::json to_json(const Rational& q) { return q.get_str(); }

nlohmann::json to_json_coefficients(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  const auto& a = p.coefficients();
  for (auto it = a.rbegin(); it != a.rend(); ++it) arr.push_back(it->get_str());
  return arr;
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json out;
  out["degree"] = p.is_zero() ? nlohmann::json(nullptr) : nlohmann::json(p.degree().value());
  out["coefficients"] = to_json_coefficients(p);
  out["text"] = to_text(p);
  return out;
}

}  // namespace recprs::cli
