#ifndef DUHA_FIELD_HPP
#define DUHA_FIELD_HPP

#include <memory>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "duha/polynomial.hpp"
#include "duha/rational.hpp"

namespace duha {

/// Q[θ]/(m(θ)) for a monic m of degree >= 1. Degree 1 is Q itself.
/// Irreducibility of m is not checked here; FieldElement::inverse reports a
/// reducible modulus when it meets a zero divisor.
class NumberField {
 public:
  explicit NumberField(RationalPolynomial modulus);

  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const RationalPolynomial& modulus() const { return modulus_; }

  bool operator==(const NumberField& other) const { return modulus_ == other.modulus_; }

  static std::shared_ptr<const NumberField> rationals();

 private:
  RationalPolynomial modulus_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// A residue class in Q[θ]/(m). An element without a field pointer is a
/// rational constant and combines with elements of any field; this is what
/// lets Eigen build `Scalar(0)` and `Scalar(1)` without context.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(int value);  // NOLINT(google-explicit-constructor): Eigen literals
  FieldElement(long value);  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& value);  // NOLINT(google-explicit-constructor)
  FieldElement(FieldPtr field, RationalPolynomial coeffs);

  /// θ itself.
  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const RationalPolynomial& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_rational() const { return coeffs_.size() <= 1; }
  /// Throws DomainError when the element is not in Q.
  Rational rational_value() const;

  /// Throws DivisionByZero, or ReducibleModulus when gcd(a, m) != 1.
  FieldElement inverse() const;
  /// Negative exponents go through inverse().
  FieldElement pow(long exponent) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Coefficient-list equality. Throws UsageError for elements of two
  /// different fields.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// "p/q" for rationals, "c0+c1*t+..." otherwise (t is the field generator).
  std::string to_string() const;

 private:
  void adopt_field(const FieldElement& other);
  void reduce();

  FieldPtr field_;
  RationalPolynomial coeffs_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// The coefficient field together with the two roots r1, r2 of t^2 - αt - β.
struct FieldSpec {
  FieldPtr field;
  FieldElement r1;
  FieldElement r2;

  FieldElement alpha() const { return r1 + r2; }
  FieldElement beta() const { return -(r1 * r2); }
};

/// Validates the invariants (r1 != 0 after swapping if needed, (α,β) != (0,0),
/// both roots satisfy t^2 - αt - β = 0) and returns the normalized spec.
FieldSpec make_field_spec(FieldPtr field, FieldElement r1, FieldElement r2);

/// Smallest 1 <= k <= bound with a^k = 1.
std::optional<int> root_of_unity_order(const FieldElement& a, int bound);

/// r1^i r2^j != 1 for all 0 <= i, j <= bound, (i, j) != (0, 0).
bool genericity_check(const FieldSpec& spec, int bound);

}  // namespace duha

namespace Eigen {

template <>
struct NumTraits<duha::FieldElement> : GenericNumTraits<duha::FieldElement> {
  using Real = duha::FieldElement;
  using NonInteger = duha::FieldElement;
  using Nested = duha::FieldElement;
  using Literal = duha::FieldElement;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 100
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // DUHA_FIELD_HPP
