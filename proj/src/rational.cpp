#include "symcap/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace symcap {

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational::from_double: non-finite");
  if (x == 0.0) return Rational();
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  for (int i = 0; i < 53 && m != std::floor(m); ++i) {
    m *= 2.0;
    --exp;
  }
  BigInt num(static_cast<long long>(m));
  if (exp >= 0) {
    num <<= exp;
    return Rational(num);
  }
  BigInt den(1);
  den <<= -exp;
  return Rational(num, den);
}

std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    auto p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!is_int(p) || !is_int(q)) return std::nullopt;
    BigInt den{std::string(q)};
    if (den == 0) return std::nullopt;
    return Rational(BigInt(std::string(p)), den);
  }
  auto dot = s.find('.');
  if (dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (fp.empty() || !is_int(fp) || fp[0] == '-' || fp[0] == '+') return std::nullopt;
    if (!ip.empty() && !is_int(ip) && ip != "-" && ip != "+") return std::nullopt;
    bool neg = !ip.empty() && ip[0] == '-';
    std::string digits = (ip == "-" || ip == "+" || ip.empty())
                             ? std::string()
                             : std::string(ip.substr(ip[0] == '-' || ip[0] == '+' ? 1 : 0));
    digits += std::string(fp);
    if (digits.empty()) return std::nullopt;
    BigInt num{digits};
    BigInt den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    if (neg) num = -num;
    return Rational(num, den);
  }
  if (!is_int(s)) return std::nullopt;
  return Rational(BigInt{std::string(s)});
}

std::string Rational::str() const {
  std::string out = num().str();
  if (!is_integer()) {
    out += "/";
    out += den().str();
  }
  return out;
}

BigInt Rational::floor() const {
  BigInt n = num(), d = den();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational();
  if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
  // 0 < lo <= hi. Walk the continued fraction of the interval.
  BigInt p_lo = lo.num(), q_lo = lo.den();
  BigInt p_hi = hi.num(), q_hi = hi.den();
  // Accumulate the matrix [[a,b],[c,d]] of the partial quotients.
  BigInt a = 1, b = 0, c = 0, d = 1;
  for (;;) {
    BigInt fl = p_lo / q_lo;  // floor(lo), lo > 0
    BigInt k = (p_lo % q_lo == 0) ? fl : fl + 1;  // ceil(lo)
    if (k * q_hi <= p_hi) {
      // The integer k lies in [lo, hi]; minimal continuation.
      return Rational(a * k + b, c * k + d);
    }
    // No integer inside: both endpoints share floor fl. Recurse on
    // y = 1/(x - fl), whose interval is [1/(hi-fl), 1/(lo-fl)].
    BigInt np_lo = q_hi, nq_lo = p_hi - fl * q_hi;
    BigInt np_hi = q_lo, nq_hi = p_lo - fl * q_lo;
    BigInt na = a * fl + b, nc = c * fl + d;
    b = a; d = c; a = na; c = nc;
    p_lo = np_lo; q_lo = nq_lo;
    p_hi = np_hi; q_hi = nq_hi;
  }
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  BigInt sn = sqrt(x.num()), sd = sqrt(x.den());
  if (sn * sn == x.num() && sd * sd == x.den()) return Rational(sn, sd);
  return std::nullopt;
}

}  // namespace symcap
