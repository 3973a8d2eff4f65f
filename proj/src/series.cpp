#include "duha/series.hpp"

#include <algorithm>
#include <sstream>

#include "duha/errors.hpp"

namespace duha {

LaurentSeries::LaurentSeries(int lo, int hi) : lo_(lo) {
  if (hi < lo - 1) throw UsageError("LaurentSeries: hi < lo - 1");
  coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
}

LaurentSeries::LaurentSeries(int lo, std::vector<Rational> coeffs)
    : lo_(lo), coeffs_(std::move(coeffs)) {}

const Rational& LaurentSeries::operator[](int degree) const {
  if (degree < lo_ || degree > hi()) {
    throw UsageError("coefficient of t^" + std::to_string(degree) + " outside window [" +
                     std::to_string(lo_) + "," + std::to_string(hi()) + "]");
  }
  return coeffs_[static_cast<std::size_t>(degree - lo_)];
}

void LaurentSeries::set(int degree, Rational value) {
  (void)(*this)[degree];
  coeffs_[static_cast<std::size_t>(degree - lo_)] = std::move(value);
}

void LaurentSeries::add(int degree, const Rational& value) {
  (void)(*this)[degree];
  coeffs_[static_cast<std::size_t>(degree - lo_)] += value;
}

LaurentSeries LaurentSeries::restrict(int lo, int hi) const {
  // Below lo_ the series is known to vanish, so only the top is constrained.
  if (hi > this->hi()) {
    throw UsageError("restrict: [" + std::to_string(lo) + "," + std::to_string(hi) +
                     "] exceeds known window [" + std::to_string(lo_) + "," +
                     std::to_string(this->hi()) + "]");
  }
  LaurentSeries out(lo, hi);
  for (int e = std::max(lo, lo_); e <= hi; ++e) out.set(e, (*this)[e]);
  return out;
}

LaurentSeries LaurentSeries::substitute_power(int l) const {
  if (l < 1) throw UsageError("substitute_power: exponent must be >= 1");
  LaurentSeries out(l * lo_, l * (hi() + 1) - 1);
  for (int e = lo_; e <= hi(); ++e) out.set(l * e, (*this)[e]);
  return out;
}

bool LaurentSeries::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0; });
}

void LaurentSeries::require_same_window(const LaurentSeries& other, const char* op) const {
  if (lo_ != other.lo_ || hi() != other.hi()) {
    throw UsageError(std::string(op) + ": window mismatch [" + std::to_string(lo_) + "," +
                     std::to_string(hi()) + "] vs [" + std::to_string(other.lo_) + "," +
                     std::to_string(other.hi()) + "]");
  }
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& rhs) {
  require_same_window(rhs, "operator+");
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] += rhs.coeffs_[p];
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& rhs) {
  require_same_window(rhs, "operator-");
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] -= rhs.coeffs_[p];
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const int lo = a.lo() + b.lo();
  const int hi = std::min(a.hi() + b.lo(), a.lo() + b.hi());
  LaurentSeries out(lo, std::max(hi, lo - 1));
  for (int e = lo; e <= hi; ++e) {
    Rational sum = 0;
    for (int i = a.lo(); i <= e - b.lo(); ++i) sum += a[i] * b[e - i];
    out.set(e, sum);
  }
  return out;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  a.require_same_window(b, "operator==");
  return a.coeffs_ == b.coeffs_;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  os << "[" << lo_ << "," << hi() << "]:";
  for (const auto& c : coeffs_) os << " " << duha::to_string(c);
  return os.str();
}

nlohmann::json to_json(const LaurentSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return {{"lo", s.lo()}, {"hi", s.hi()}, {"coeffs", coeffs}};
}

LaurentSeries monomial_series(int degree, const Rational& c, int lo, int hi) {
  LaurentSeries out(lo, hi);
  if (degree >= lo && degree <= hi) out.set(degree, c);
  return out;
}

RationalFunction::RationalFunction(RationalPolynomial numerator, RationalPolynomial denominator,
                                   int shift)
    : num_(trimmed(std::move(numerator))), den_(trimmed(std::move(denominator))), shift_(shift) {
  if (den_.empty()) throw DomainError("rational function with zero denominator");
  std::size_t v = 0;
  while (den_[v] == 0) ++v;
  den_.erase(den_.begin(), den_.begin() + static_cast<std::ptrdiff_t>(v));
  shift_ -= static_cast<int>(v);
}

LaurentSeries RationalFunction::expand(int lo, int hi) const {
  // q = num / den as a power series, needed on [0, hi - shift].
  const int top = hi - shift_;
  std::vector<Rational> q(static_cast<std::size_t>(std::max(top + 1, 0)), Rational(0));
  for (int m = 0; m <= top; ++m) {
    Rational acc = m < static_cast<int>(num_.size()) ? num_[static_cast<std::size_t>(m)] : 0;
    for (int i = 1; i <= m && i < static_cast<int>(den_.size()); ++i) {
      acc -= den_[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(m - i)];
    }
    q[static_cast<std::size_t>(m)] = acc / den_[0];
  }
  for (int m = 0; m <= top; ++m) {
    Rational back = 0;
    for (int i = 0; i <= m && i < static_cast<int>(den_.size()); ++i) {
      back += den_[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(m - i)];
    }
    const Rational want = m < static_cast<int>(num_.size()) ? num_[static_cast<std::size_t>(m)] : 0;
    if (back != want) throw ConsistencyError("series expansion failed its division check");
  }
  LaurentSeries out(lo, hi);
  for (int e = lo; e <= hi; ++e) {
    const int m = e - shift_;
    if (m >= 0) out.set(e, q[static_cast<std::size_t>(m)]);
  }
  return out;
}

namespace {

void require_power_series(const LaurentSeries& f, const char* op) {
  for (int e = f.lo(); e < 0 && e <= f.hi(); ++e) {
    if (f[e] != 0) throw DomainError(std::string(op) + ": negative powers of t present");
  }
  if (f.hi() < 0) throw UsageError(std::string(op) + ": empty window");
}

}  // namespace

LaurentSeries log_series(const LaurentSeries& f) {
  require_power_series(f, "log_series");
  const int hi = f.hi();
  if (f.lo() > 0 || f[0] != 1) throw DomainError("log_series: constant term must be 1");
  LaurentSeries x = f.restrict(0, hi);
  x.set(0, 0);
  LaurentSeries out(0, hi);
  LaurentSeries power = monomial_series(0, 1, 0, hi);
  for (int m = 1; m <= hi; ++m) {
    power = (power * x).restrict(0, hi);
    Rational c(1, m);
    if (m % 2 == 0) c = -c;
    out += c * power;
  }
  return out;
}

LaurentSeries exp_series(const LaurentSeries& g) {
  require_power_series(g, "exp_series");
  const int hi = g.hi();
  if (g.lo() <= 0 && g[0] != 0) throw DomainError("exp_series: constant term must be 0");
  LaurentSeries x = g.restrict(0, hi);
  LaurentSeries out = monomial_series(0, 1, 0, hi);
  LaurentSeries power = out;
  Rational factorial = 1;
  for (int m = 1; m <= hi; ++m) {
    power = (power * x).restrict(0, hi);
    factorial *= m;
    out += Rational(1) / factorial * power;
  }
  return out;
}

namespace {

// log(1 - t^l) on [0, N].
LaurentSeries log_one_minus(int l, int N) {
  LaurentSeries f = monomial_series(0, 1, 0, N);
  if (l <= N) f.set(l, -1);
  return log_series(f);
}

}  // namespace

LaurentSeries igusa_chi(int N) {
  if (N < 1) throw UsageError("igusa_chi: N must be >= 1");
  LaurentSeries out(0, N);
  for (int l = 1; l <= N; ++l) {
    const Rational w(totient(l), l);
    out -= w * (log_one_minus(2 * l, N) + Rational(2) * log_one_minus(l, N));
  }
  return out;
}

LaurentSeries igusa_chi(const LaurentSeries& hilbert, int N) {
  if (N < 1) throw UsageError("igusa_chi: N must be >= 1");
  const LaurentSeries h = hilbert.restrict(0, N);
  LaurentSeries out(0, N);
  for (int l = 1; l <= N; ++l) {
    const LaurentSeries hl = h.substitute_power(l).restrict(0, N);
    out += Rational(totient(l), l) * log_series(hl);
  }
  return out;
}

LaurentSeries totient_log_sum(int N) {
  if (N < 1) throw UsageError("totient_log_sum: N must be >= 1");
  LaurentSeries out(0, N);
  for (int l = 1; l <= N; ++l) out += Rational(totient(l), l) * log_one_minus(l, N);
  return out;
}

namespace {

RationalPolynomial one_minus_t_pow(int n) {
  RationalPolynomial p(static_cast<std::size_t>(n + 1), Rational(0));
  p[0] = 1;
  p[static_cast<std::size_t>(n)] -= 1;
  return trimmed(p);
}

}  // namespace

RationalFunction s1() { return {poly({0, 2, 3}), poly({1, 0, -1})}; }
RationalFunction s2() { return {poly({0, 0, 1}), poly({1, 0, 0, 0, -1})}; }

RationalFunction f_n(int n) {
  const RationalPolynomial base = one_minus_t_pow(n);
  return {poly({1}), poly_mul(one_minus_t_pow(4), poly_mul(base, base))};
}

RationalFunction g_n(int n) {
  RationalPolynomial num(static_cast<std::size_t>(std::max(2 * n, 2) + 1), Rational(0));
  num[2] += 1;
  num[static_cast<std::size_t>(2 * n)] -= 1;
  return {num, one_minus_t_pow(4)};
}

RationalFunction h_n(int n) {
  // 2t(1 - t^{n-1}) / ((1 - t)(1 - t^n)); zero for n = 1.
  RationalPolynomial num = n == 1 ? RationalPolynomial{} : poly_scale(one_minus_t_pow(n - 1), 2);
  num.insert(num.begin(), Rational(0));
  return {num, poly_mul(one_minus_t_pow(1), one_minus_t_pow(n))};
}

std::string to_string(CatalogItem item) {
  switch (item) {
    case CatalogItem::F1: return "F1";
    case CatalogItem::F2NonRoot: return "F2 non-root";
    case CatalogItem::RootEven: return "root, n even >= 4";
    case CatalogItem::RootOdd: return "root, n odd >= 3";
    case CatalogItem::RootTwo: return "root, n = 2";
    case CatalogItem::RootOne: return "root, n = 1";
  }
  return "?";
}

CatalogItem catalog_item(const CaseSpec& c) {
  switch (c.family) {
    case Family::F1: return CatalogItem::F1;
    case Family::F2NonRoot: return CatalogItem::F2NonRoot;
    case Family::F2Root:
      if (c.n == 1) return CatalogItem::RootOne;
      if (c.n == 2) return CatalogItem::RootTwo;
      return c.n % 2 == 0 ? CatalogItem::RootEven : CatalogItem::RootOdd;
    case Family::Unclassified: break;
  }
  throw UnsupportedCase("no closed form for an unclassified algebra");
}

LaurentSeries catalog_homology(CatalogItem item, int n, int i, int lo, int hi) {
  if (i < 0) throw UsageError("catalog_homology: negative homological degree");
  if (i > 3) return LaurentSeries(lo, hi);
  const auto ex = [lo, hi](const RationalFunction& f) { return f.expand(lo, hi); };
  const LaurentSeries one = monomial_series(0, 1, lo, hi);
  const LaurentSeries hh0_generic = ex({poly({1, 2, 2}), poly({1, 0, -1})});
  switch (item) {
    case CatalogItem::F1:
      if (i == 0) return hh0_generic;
      if (i == 1) return ex(s1());
      return LaurentSeries(lo, hi);
    case CatalogItem::F2NonRoot: {
      const LaurentSeries e = ex({poly({0, 0, 0, 0, 1}), one_minus_t_pow(8)});
      if (i == 0) return hh0_generic;
      if (i == 1) return ex(s1()) + e;
      if (i == 2) return Rational(2) * e;
      return e;
    }
    case CatalogItem::RootEven:
    case CatalogItem::RootOdd: {
      if (n < 3 || (item == CatalogItem::RootEven && (n % 2 != 0 || n < 4)) ||
          (item == CatalogItem::RootOdd && n % 2 == 0)) {
        throw UsageError("catalog_homology: n = " + std::to_string(n) + " does not fit " +
                         to_string(item));
      }
      const LaurentSeries hh0 = item == CatalogItem::RootEven
                                    ? ex(f_n(n)) + ex(h_n(n)) + ex(s2())
                                    : ex(f_n(n)) + ex(g_n(n)) + ex(h_n(n));
      const RationalFunction f = f_n(n);
      const LaurentSeries top = ex({poly({0, 0, 0, 0, 1}), f.denominator()});
      if (i == 0) return hh0;
      if (i == 1) return top + Rational(2) * (hh0 - one) - ex(s1());
      if (i == 2) return Rational(2) * top + hh0 - ex(s1()) - one;
      return top;
    }
    case CatalogItem::RootTwo: {
      const RationalPolynomial den =
          poly_mul(poly_mul(poly({1, 0, -1}), poly({1, 0, -1})), poly({1, 0, 1}));
      if (i == 0) return ex({poly({1, 2, 2, 0, -1, -2}), den});
      if (i == 1) return ex({poly({0, 2, 3, 0, 1, -2}), den});
      if (i == 2) return ex({poly({0, 0, 0, 0, 2}), den});
      return ex({poly({0, 0, 0, 0, 1}), one_minus_t_pow(4)});
    }
    case CatalogItem::RootOne: {
      const RationalPolynomial sq = poly({1, -2, 1});
      if (i == 0) return ex({poly({1}), sq});
      if (i == 1) return ex({poly_mul(poly({0, 2, -1}), poly({1, 0, 1})), sq});
      if (i == 2) return ex({poly({0, 0, 0, 2, 2, -2}), poly_mul(poly({1, 0, -1}), poly({1, -1}))});
      return ex({poly({0, 0, 0, 0, 1}), poly({1, 0, -1})});
    }
  }
  throw UsageError("catalog_homology: unknown item");
}

LaurentSeries catalog_homology(const CaseSpec& c, int i, int lo, int hi) {
  return catalog_homology(catalog_item(c), c.n, i, lo, hi);
}

LaurentSeries catalog_cohomology(const CaseSpec& c, int i, int lo, int hi) {
  if (c.family != Family::F1) {
    throw UnsupportedCase("cohomology closed forms exist only for F1; use Calabi-Yau duality");
  }
  switch (i) {
    case 0: return monomial_series(0, 1, lo, hi);
    case 1: return monomial_series(0, 2, lo, hi);
    case 2:
      return monomial_series(-2, 1, lo, hi) + monomial_series(0, 2, lo, hi) +
             RationalFunction(poly({0, 0, 1}), poly({1, 0, -1})).expand(lo, hi);
    case 3: return RationalFunction(poly({1}), poly({1, 0, -1}), -4).expand(lo, hi);
    default:
      if (i < 0) throw UsageError("catalog_cohomology: negative cohomological degree");
      return LaurentSeries(lo, hi);
  }
}

GoodwillieSeries goodwillie(const LaurentSeries& hh0bar, const LaurentSeries& hh3) {
  const LaurentSeries s = s1().expand(hh0bar.lo(), hh0bar.hi());
  GoodwillieSeries out;
  out.hc0bar = hh0bar;
  out.hc1bar = hh0bar + hh3 - s;
  out.hc2bar = hh3;
  out.hh1 = Rational(2) * hh0bar + hh3 - s;
  out.hh2 = hh0bar + Rational(2) * hh3 - s;
  out.consistent = out.hc1bar.is_nonnegative() && out.hh1.is_nonnegative() &&
                   out.hh2.is_nonnegative() && hh0bar.is_nonnegative() && hh3.is_nonnegative();
  return out;
}

}  // namespace duha
