#include "boxworld/rational.hpp"

#include <cctype>

#include "boxworld/error.hpp"

namespace boxworld {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ShapeError("empty number in '" + std::string(whole) + "'");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) throw ShapeError("malformed number '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ShapeError("malformed number '" + std::string(whole) + "'");
  }
  return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ShapeError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    if (int_part.empty() || int_part == "-" || int_part == "+") int_part = "0";
    BigInt whole = parse_integer(int_part, text);
    if (whole < 0) whole = -whole;
    BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
    if (!frac_part.empty() && (frac_part[0] == '-' || frac_part[0] == '+'))
      throw ShapeError("malformed number '" + std::string(text) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Rational r = Rational(whole) + Rational(frac, scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(text, text));
}

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

BigInt binomial(const BigInt& n, long long k) {
  if (n < 0 || k < 0 || BigInt(k) > n) return 0;
  if (BigInt(2 * k) > n) return binomial(n, static_cast<long long>(n - k));
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) {
    if (x != 0) g = boost::multiprecision::gcd(g, x);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& x : v) x /= g;
}

std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(x)));
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
  make_primitive(out);
  return out;
}

}  // namespace boxworld
