#include "l2limits/rational.hpp"

#include "l2limits/error.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace l2limits {

std::string to_string(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw MalformedInput("malformed rational '" + std::string(whole) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw MalformedInput("malformed rational '" + std::string(whole) + "'");
  }
  return BigInt(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw MalformedInput("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string format_double(double x) {
  if (x == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) return std::to_string(x);
  return std::string(buf.data(), end);
}

}  // namespace l2limits
