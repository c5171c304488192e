#include "quadraform/rational.hpp"

#include <cctype>

#include "quadraform/errors.hpp"

namespace quadraform {

namespace {

bool is_integer_token(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_integer_token(den)) {
      throw Error(ErrorCode::ParseError, "bad rational literal: '" + std::string(text) + "'");
    }
  }
  if (!is_integer_token(num)) {
    throw Error(ErrorCode::ParseError, "bad rational literal: '" + std::string(text) + "'");
  }
  mpz_class numerator(std::string(num), 10);
  mpz_class denominator = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (denominator == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

}  // namespace quadraform
