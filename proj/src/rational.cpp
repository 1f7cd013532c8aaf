#include "ellfm/rational.hpp"

#include <cctype>
#include <string>

#include "ellfm/errors.hpp"

namespace ellfm {

namespace {

// Validates [sign]digits starting at `pos`; returns one past the end.
std::size_t scan_integer(std::string_view text, std::size_t pos, bool allow_sign) {
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t digits_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_begin) {
    throw ParseError("expected digit in rational '" + std::string(text) + "'", pos + 1);
  }
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational", 1);
  const std::size_t num_end = scan_integer(text, 0, true);
  std::string numerator(text.substr(0, num_end));
  if (!numerator.empty() && numerator.front() == '+') numerator.erase(0, 1);

  std::string denominator = "1";
  if (num_end < text.size()) {
    if (text[num_end] != '/') {
      throw ParseError("unexpected character '" + std::string(1, text[num_end]) +
                           "' in rational '" + std::string(text) + "'",
                       num_end + 1);
    }
    const std::size_t den_end = scan_integer(text, num_end + 1, false);
    if (den_end != text.size()) {
      throw ParseError("trailing characters in rational '" + std::string(text) + "'",
                       den_end + 1);
    }
    denominator = std::string(text.substr(num_end + 1, den_end - num_end - 1));
  }

  const mpz_class num(numerator, 10);
  const mpz_class den(denominator, 10);
  if (den == 0) {
    throw ParseError("zero denominator in rational '" + std::string(text) + "'", num_end + 2);
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace ellfm
