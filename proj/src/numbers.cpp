#include "arr/numbers.hpp"

#include <vector>

#include "arr/errors.hpp"

namespace arr {

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer n(s.substr(0, slash));
    Integer d(s.substr(slash + 1));
    if (d == 0) return std::nullopt;
    return Rational(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

std::vector<Rational> primitive_vector(std::vector<Rational> v) {
  Integer lcm = 1;
  for (const Rational& x : v) lcm = boost::multiprecision::lcm(lcm, den(x));
  Integer gcd = 0;
  for (Rational& x : v) {
    x *= lcm;
    gcd = boost::multiprecision::gcd(gcd, num(x));
  }
  if (gcd == 0) return v;
  for (Rational& x : v) x /= gcd;
  for (const Rational& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Rational& y : v) y = -y;
    break;
  }
  return v;
}

}  // namespace arr
