#include "duha/polynomial.hpp"

#include <numeric>

#include "duha/errors.hpp"

namespace duha {

void trim(RationalPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPolynomial trimmed(RationalPolynomial p) {
  trim(p);
  return p;
}

int degree(const RationalPolynomial& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

RationalPolynomial poly_add(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

RationalPolynomial poly_sub(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

RationalPolynomial poly_mul(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  RationalPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RationalPolynomial poly_scale(const RationalPolynomial& a, const Rational& c) {
  if (c == 0) return {};
  RationalPolynomial out(a);
  for (auto& x : out) x *= c;
  trim(out);
  return out;
}

std::pair<RationalPolynomial, RationalPolynomial> poly_divmod(const RationalPolynomial& a,
                                                              const RationalPolynomial& b) {
  const int db = degree(b);
  if (db < 0) throw DivisionByZero();
  RationalPolynomial rem = trimmed(a);
  const int da = degree(rem);
  if (da < db) return {{}, rem};
  RationalPolynomial quot(static_cast<std::size_t>(da - db + 1));
  const Rational lead = b[static_cast<std::size_t>(db)];
  for (int k = da; k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int t = 0; t <= db; ++t) {
      rem[static_cast<std::size_t>(k - db + t)] -= c * b[static_cast<std::size_t>(t)];
    }
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

RationalPolynomial t_power_minus_one(int n) {
  RationalPolynomial p(static_cast<std::size_t>(n) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] += 1;
  trim(p);
  return p;
}

RationalPolynomial cyclotomic(int n) {
  if (n < 1) throw UsageError("cyclotomic: n must be positive");
  RationalPolynomial divisor = poly({1});
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) divisor = poly_mul(divisor, cyclotomic(d));
  }
  auto [quot, rem] = poly_divmod(t_power_minus_one(n), divisor);
  if (!rem.empty()) throw ConsistencyError("cyclotomic: inexact division");
  return quot;
}

int totient(int n) {
  if (n < 1) throw UsageError("totient: n must be positive");
  int count = 0;
  for (int k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++count;
  }
  return count;
}

RationalPolynomial poly(std::initializer_list<long> coeffs) {
  RationalPolynomial p;
  p.reserve(coeffs.size());
  for (long c : coeffs) p.emplace_back(c);
  trim(p);
  return p;
}

std::string to_string(const RationalPolynomial& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    std::string c = to_string(p[i]);
    if (!out.empty() && c[0] != '-') out += "+";
    if (i == 0) {
      out += c;
      continue;
    }
    if (c == "-1") {
      out += "-";
    } else if (c != "1") {
      out += c + "*";
    }
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace duha
