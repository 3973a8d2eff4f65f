#ifndef DUHA_SERIES_HPP
#define DUHA_SERIES_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "duha/pbw.hpp"
#include "duha/polynomial.hpp"
#include "duha/rational.hpp"

namespace duha {

/// Truncated Laurent series in t. Coefficients are known on [lo, hi]; the
/// series is zero below lo and unknown above hi. Reading outside the window
/// throws, and binary operations insist on matching windows.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  /// Zero series on [lo, hi]; hi = lo - 1 gives an empty window.
  LaurentSeries(int lo, int hi);
  LaurentSeries(int lo, std::vector<Rational> coeffs);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  const Rational& operator[](int degree) const;
  void set(int degree, Rational value);
  void add(int degree, const Rational& value);

  /// Same series on the narrower window [lo, hi].
  LaurentSeries restrict(int lo, int hi) const;
  /// f(t^l) for l >= 1; the known window grows to [l*lo, l*(hi+1)-1].
  LaurentSeries substitute_power(int l) const;

  bool is_nonnegative() const;

  LaurentSeries& operator+=(const LaurentSeries& rhs);
  LaurentSeries& operator-=(const LaurentSeries& rhs);
  LaurentSeries& operator*=(const Rational& c);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const Rational& c, LaurentSeries a) { return a *= c; }
  /// Cauchy product on [a.lo+b.lo, min(a.hi+b.lo, a.lo+b.hi)].
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  /// Throws UsageError when the windows differ.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  std::string to_string() const;

 private:
  void require_same_window(const LaurentSeries& other, const char* op) const;

  int lo_ = 0;
  std::vector<Rational> coeffs_;
};

nlohmann::json to_json(const LaurentSeries& s);

/// Monomial c * t^degree, known on [lo, hi].
LaurentSeries monomial_series(int degree, const Rational& c, int lo, int hi);

/// t^shift * numerator / denominator. Powers of t dividing the denominator
/// are moved into the shift at construction.
class RationalFunction {
 public:
  RationalFunction(RationalPolynomial numerator, RationalPolynomial denominator, int shift = 0);

  const RationalPolynomial& numerator() const { return num_; }
  const RationalPolynomial& denominator() const { return den_; }
  int shift() const { return shift_; }

  /// Long division, re-multiplied by the denominator as a self-check.
  LaurentSeries expand(int lo, int hi) const;

 private:
  RationalPolynomial num_;
  RationalPolynomial den_;
  int shift_ = 0;
};

/// Formal logarithm of a power series with constant term 1, via
/// log(1 + x) = sum (-1)^{m+1} x^m / m. Result window [0, hi].
LaurentSeries log_series(const LaurentSeries& f);
/// Formal exponential of a power series with constant term 0.
LaurentSeries exp_series(const LaurentSeries& g);

/// -sum_{l <= N} totient(l)/l [log(1 - t^{2l}) + 2 log(1 - t^l)] on [0, N].
LaurentSeries igusa_chi(int N);
/// sum_{l <= N} totient(l)/l log h(t^l) on [0, N] for a Hilbert series h
/// known at least on [0, N].
LaurentSeries igusa_chi(const LaurentSeries& hilbert, int N);
/// sum_{l <= N} totient(l)/l log(1 - t^l) on [0, N].
LaurentSeries totient_log_sum(int N);

// Building blocks of the homology series.
RationalFunction s1();
RationalFunction s2();
RationalFunction f_n(int n);
RationalFunction g_n(int n);
RationalFunction h_n(int n);

/// The printed closed forms, one entry per case of the homology theorem.
enum class CatalogItem { F1, F2NonRoot, RootEven, RootOdd, RootTwo, RootOne };
std::string to_string(CatalogItem item);

/// Catalog entry for a classified case; Unclassified throws UnsupportedCase.
CatalogItem catalog_item(const CaseSpec& c);

/// Printed Hilbert series of HH_i for the given item (n used by RootEven and
/// RootOdd), expanded on [lo, hi].
LaurentSeries catalog_homology(CatalogItem item, int n, int i, int lo, int hi);
LaurentSeries catalog_homology(const CaseSpec& c, int i, int lo, int hi);
/// Printed Hilbert series of HH^i; only the F1 family has one.
LaurentSeries catalog_cohomology(const CaseSpec& c, int i, int lo, int hi);

struct GoodwillieSeries {
  LaurentSeries hc0bar, hc1bar, hc2bar, hh1, hh2;
  /// False when some predicted dimension is negative.
  bool consistent = true;
};

/// HC_0 = HH_0, HC_1 = HH_0 + HH_3 - s1, HC_2 = HH_3, HH_1 = 2 HH_0 + HH_3 - s1,
/// HH_2 = HH_0 + 2 HH_3 - s1, all reduced.
GoodwillieSeries goodwillie(const LaurentSeries& hh0bar, const LaurentSeries& hh3);

}  // namespace duha

#endif  // DUHA_SERIES_HPP
