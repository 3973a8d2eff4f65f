#include "duha/pbw.hpp"

#include "duha/errors.hpp"

namespace duha {

namespace {

constexpr int kPowerCache = 256;

void append_power(std::string& out, char letter, int e) {
  if (e == 0) return;
  if (!out.empty()) out += ' ';
  out += letter;
  if (e > 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const Monomial& m) {
  std::string out;
  append_power(out, 'u', m.i);
  append_power(out, 'w', m.j);
  append_power(out, 'd', m.k);
  return out.empty() ? "1" : out;
}

AlgebraElement::AlgebraElement(const Monomial& m, const FieldElement& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

FieldElement AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement(0) : it->second;
}

void AlgebraElement::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<Bidegree> AlgebraElement::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  const Bidegree first = terms_.begin()->first.bidegree();
  for (const auto& [m, c] : terms_) {
    if (m.bidegree() != first) return std::nullopt;
  }
  return first;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + duha::to_string(m);
  }
  return out;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::F1:
      return "F1";
    case Family::F2NonRoot:
      return "F2-nonroot";
    case Family::F2Root:
      return "F2-root";
    case Family::Unclassified:
      return "unclassified";
  }
  return "?";
}

CaseSpec classify(const FieldSpec& field, int genericity_window, std::string name) {
  CaseSpec c;
  c.name = std::move(name);
  c.field = field;
  c.alpha = field.alpha();
  c.beta = field.beta();
  c.genericity_window = genericity_window;
  if (c.alpha.is_zero() && c.beta.is_zero()) {
    throw UnsupportedCase("A(0,0,0) is not supported");
  }
  if (c.beta == FieldElement(-1)) {
    // A root of unity of order n in a degree-D field has φ(n) <= D, and
    // φ(n) >= sqrt(n/2), so n <= 2 D^2 bounds the search exactly.
    const int dim = field.field ? field.field->degree() : 1;
    const auto order = root_of_unity_order(field.r1, std::max(2 * dim * dim, 2));
    c.family = order ? Family::F2Root : Family::F2NonRoot;
    c.n = order.value_or(0);
  } else if (genericity_check(field, genericity_window)) {
    c.family = Family::F1;
  } else {
    c.family = Family::Unclassified;
  }
  return c;
}

DownUpAlgebra::DownUpAlgebra(CaseSpec spec) : spec_(std::move(spec)) {
  r1_pow_.reserve(kPowerCache);
  r2_pow_.reserve(kPowerCache);
  phi_over_r1_.reserve(kPowerCache);
  FieldElement a = 1;
  FieldElement b = 1;
  for (int p = 0; p < kPowerCache; ++p) {
    r1_pow_.push_back(a);
    r2_pow_.push_back(b);
    a *= r1();
    b *= r2();
  }
  const FieldElement inv_r1 = r1().inverse();
  for (int p = 0; p < kPowerCache; ++p) phi_over_r1_.push_back(phi(p - 1) * inv_r1);
}

FieldElement DownUpAlgebra::r1_power(int p) const {
  if (p >= 0 && p < static_cast<int>(r1_pow_.size())) return r1_pow_[static_cast<std::size_t>(p)];
  return r1().pow(p);
}

FieldElement DownUpAlgebra::r2_power(int p) const {
  if (p >= 0 && p < static_cast<int>(r2_pow_.size())) return r2_pow_[static_cast<std::size_t>(p)];
  return r2().pow(p);
}

FieldElement DownUpAlgebra::phi(int p) const {
  if (p < -1) throw UsageError("phi: p must be >= -1");
  FieldElement sum = 0;
  for (int i = 0; i <= p; ++i) sum += r1_power(i) * r2_power(p - i);
  return sum;
}

AlgebraElement DownUpAlgebra::left_d(const AlgebraElement& x) const {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) {
    if (m.i >= 1) {
      const FieldElement t = m.i < static_cast<int>(phi_over_r1_.size())
                                 ? phi_over_r1_[static_cast<std::size_t>(m.i)]
                                 : phi(m.i - 1) / r1();
      out.add_term({m.i - 1, m.j + 1, m.k}, c * t);
    }
    out.add_term({m.i, m.j, m.k + 1}, c * r2_power(m.i) * r1_power(m.j));
  }
  return out;
}

AlgebraElement DownUpAlgebra::multiply(const Monomial& x, const Monomial& y) const {
  AlgebraElement acc(y);
  for (int s = 0; s < x.k; ++s) acc = left_d(acc);
  AlgebraElement out;
  for (const auto& [m, c] : acc.terms()) {
    // u^a w^b · u^i w^j d^k = r1^{b i} u^{a+i} w^{b+j} d^k
    out.add_term({m.i + x.i, m.j + x.j, m.k}, c * r1_power(x.j * m.i));
  }
  return out;
}

AlgebraElement DownUpAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      const FieldElement c = cx * cy;
      const AlgebraElement prod = multiply(mx, my);
      for (const auto& [m, cm] : prod.terms()) out.add_term(m, c * cm);
    }
  }
  return out;
}

AlgebraElement DownUpAlgebra::power(const AlgebraElement& x, int e) const {
  if (e < 0) throw UsageError("power: negative exponent");
  AlgebraElement out = one();
  for (int s = 0; s < e; ++s) out = multiply(out, x);
  return out;
}

AlgebraElement DownUpAlgebra::w2() const {
  // du = (1/r1) w1 + r2 ud, hence β ud + r2 du = (r2/r1) w1 + (β + r2^2) ud.
  AlgebraElement out(Monomial{0, 1, 0}, r2() / r1());
  out.add_term({1, 0, 1}, spec_.beta + r2() * r2());
  return out;
}

AlgebraElement DownUpAlgebra::sigma(const AlgebraElement& x) const {
  if (spec_.beta.is_zero()) throw UnsupportedCase("Nakayama automorphism needs beta != 0");
  const FieldElement su = -spec_.beta.inverse();
  const FieldElement sd = -spec_.beta;
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) out.add_term(m, c * su.pow(m.i) * sd.pow(m.k));
  return out;
}

std::vector<Monomial> graded_basis(Bidegree bd) {
  std::vector<Monomial> out;
  if (bd.deg < 0) return out;
  for (int i = 0; i <= bd.deg; ++i) {
    const int k = i - bd.sdeg;
    if (k < 0) continue;
    const int rest = bd.deg - i - k;
    if (rest < 0 || rest % 2 != 0) continue;
    out.push_back({i, rest / 2, k});
  }
  return out;
}

int dim_bigraded(Bidegree bd) { return static_cast<int>(graded_basis(bd).size()); }

int dim_total(int deg) {
  int total = 0;
  for (int s = -deg; s <= deg; ++s) total += dim_bigraded({deg, s});
  return total;
}

}  // namespace duha
