#include "duha/field.hpp"

#include <ostream>

#include "duha/errors.hpp"

namespace duha {

NumberField::NumberField(RationalPolynomial modulus) : modulus_(trimmed(std::move(modulus))) {
  if (duha::degree(modulus_) < 1) throw UsageError("field modulus must have degree >= 1");
  const Rational lead = modulus_.back();
  if (lead != 1) {
    for (auto& c : modulus_) c /= lead;
  }
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = std::make_shared<const NumberField>(poly({0, 1}));
  return q;
}

FieldElement::FieldElement(int value) : FieldElement(Rational(value)) {}

FieldElement::FieldElement(long value) : FieldElement(Rational(value)) {}

FieldElement::FieldElement(const Rational& value) {
  if (value != 0) coeffs_.push_back(value);
}

FieldElement::FieldElement(FieldPtr field, RationalPolynomial coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw UsageError("FieldElement: null field");
  reduce();
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  return FieldElement(field, poly({0, 1}));
}

bool FieldElement::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw DomainError("field element " + to_string() + " is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

void FieldElement::adopt_field(const FieldElement& other) {
  if (!other.field_) return;
  if (!field_) {
    field_ = other.field_;
    return;
  }
  if (field_ != other.field_ && !(*field_ == *other.field_)) {
    throw UsageError("arithmetic between elements of different fields");
  }
}

void FieldElement::reduce() {
  trim(coeffs_);
  if (!field_) {
    if (coeffs_.size() > 1) throw ConsistencyError("non-constant element without a field");
    return;
  }
  const auto& m = field_->modulus();
  const int dm = field_->degree();
  for (int top = static_cast<int>(coeffs_.size()) - 1; top >= dm; --top) {
    const Rational c = coeffs_[static_cast<std::size_t>(top)];
    if (c == 0) continue;
    for (int t = 0; t <= dm; ++t) {
      coeffs_[static_cast<std::size_t>(top - dm + t)] -= c * m[static_cast<std::size_t>(t)];
    }
  }
  if (coeffs_.size() > static_cast<std::size_t>(dm)) coeffs_.resize(static_cast<std::size_t>(dm));
  trim(coeffs_);
}

FieldElement FieldElement::operator-() const {
  FieldElement out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  adopt_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim(coeffs_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  adopt_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim(coeffs_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  adopt_field(rhs);
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  if (coeffs_.size() == 1 && rhs.coeffs_.size() == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  coeffs_ = poly_mul(coeffs_, rhs.coeffs_);
  reduce();
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  adopt_field(rhs);
  return *this *= rhs.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (coeffs_.size() == 1) {
    FieldElement out(*this);
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // Extended Euclid on (m, a): keeps s_k with s_k * a ≡ r_k (mod m).
  RationalPolynomial r0 = field_->modulus();
  RationalPolynomial r1 = coeffs_;
  RationalPolynomial s0;
  RationalPolynomial s1 = poly({1});
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    RationalPolynomial s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) > 0) {
    throw ReducibleModulus("modulus " + duha::to_string(field_->modulus()) +
                           " is reducible: shares factor " + duha::to_string(r0) + " with " +
                           to_string());
  }
  return FieldElement(field_, poly_scale(s0, 1 / r0[0]));
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result(1);
  result.adopt_field(*this);
  FieldElement base(*this);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_ && !(*a.field_ == *b.field_)) {
    throw UsageError("comparison between elements of different fields");
  }
  return a.coeffs_ == b.coeffs_;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return duha::to_string(rational_value());
  return duha::to_string(coeffs_, "t");
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

FieldSpec make_field_spec(FieldPtr field, FieldElement r1, FieldElement r2) {
  if (!field) field = NumberField::rationals();
  // Lift rational constants into the field so every element carries it.
  r1 += FieldElement(field, {});
  r2 += FieldElement(field, {});
  if (r1.is_zero()) std::swap(r1, r2);
  if (r1.is_zero()) throw UnsupportedCase("(alpha, beta) = (0, 0) is not supported");
  FieldSpec spec{field, r1, r2};
  const FieldElement alpha = spec.alpha();
  const FieldElement beta = spec.beta();
  for (const auto& r : {r1, r2}) {
    if (!(r * r - alpha * r - beta).is_zero()) {
      throw ConsistencyError("root does not satisfy t^2 - alpha t - beta");
    }
  }
  return spec;
}

std::optional<int> root_of_unity_order(const FieldElement& a, int bound) {
  if (a.is_zero()) throw DomainError("root_of_unity_order: zero has no multiplicative order");
  FieldElement power = a;
  for (int k = 1; k <= bound; ++k) {
    if (power.is_one()) return k;
    power *= a;
  }
  return std::nullopt;
}

bool genericity_check(const FieldSpec& spec, int bound) {
  FieldElement r1_pow = 1;
  for (int i = 0; i <= bound; ++i) {
    FieldElement product = r1_pow;
    for (int j = 0; j <= bound; ++j) {
      if ((i != 0 || j != 0) && product.is_one()) return false;
      product *= spec.r2;
    }
    r1_pow *= spec.r1;
  }
  return true;
}

}  // namespace duha
