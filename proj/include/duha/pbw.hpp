#ifndef DUHA_PBW_HPP
#define DUHA_PBW_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "duha/field.hpp"

namespace duha {

/// (usual degree, special degree). u has (1, 1), d has (1, -1), w1 has (2, 0).
struct Bidegree {
  int deg = 0;
  int sdeg = 0;

  auto operator<=>(const Bidegree&) const = default;
  Bidegree operator+(const Bidegree& o) const { return {deg + o.deg, sdeg + o.sdeg}; }
};

/// The basis word u^i w1^j d^k.
struct Monomial {
  int i = 0;
  int j = 0;
  int k = 0;

  auto operator<=>(const Monomial&) const = default;

  int degree() const { return i + 2 * j + k; }
  int special_degree() const { return i - k; }
  Bidegree bidegree() const { return {degree(), special_degree()}; }
};

/// "u^i w^j d^k", zero exponents dropped, exponent 1 written as the bare
/// letter, "1" for the empty word.
std::string to_string(const Monomial& m);

/// Finite linear combination of basis words; zero coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, FieldElement>;

  AlgebraElement() = default;
  explicit AlgebraElement(const Monomial& m, const FieldElement& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const FieldElement& c);

  /// The common bidegree of all terms; nullopt for zero or inhomogeneous elements.
  std::optional<Bidegree> bidegree() const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const FieldElement& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const FieldElement& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Terms terms_;
};

enum class Family { F1, F2NonRoot, F2Root, Unclassified };

std::string to_string(Family f);

/// Algebra parameters plus classification. gamma is identically zero and not
/// stored.
struct CaseSpec {
  std::string name;
  FieldSpec field;
  Family family = Family::Unclassified;
  int n = 0;  ///< order of r1 when family == F2Root, else 0
  FieldElement alpha;
  FieldElement beta;
  int genericity_window = 0;  ///< exponent window used to accept F1
};

/// Dispatches on β = -1 (F2, root-of-unity order found exactly) versus the
/// genericity hypothesis checked on [0, genericity_window]^2 (F1). Anything
/// else is Unclassified: homology can still be computed, the closed-form
/// catalog does not apply.
CaseSpec classify(const FieldSpec& field, int genericity_window, std::string name = {});

/// Multiplication in A(α, β, 0) in the basis u^i w1^j d^k. Products are built
/// by left multiplication one generator at a time:
///   d·u^i w^j d^k = (φ_{i-1}/r1) u^{i-1} w^{j+1} d^k + r2^i r1^j u^i w^j d^{k+1}
///   w·u^i w^j d^k = r1^i u^i w^{j+1} d^k
/// so every intermediate stays in one graded component.
class DownUpAlgebra {
 public:
  explicit DownUpAlgebra(CaseSpec spec);

  const CaseSpec& spec() const { return spec_; }
  const FieldElement& r1() const { return spec_.field.r1; }
  const FieldElement& r2() const { return spec_.field.r2; }

  /// φ_p = Σ_{i=0}^{p} r1^i r2^{p-i} by summation; φ_{-1} = 0.
  FieldElement phi(int p) const;
  FieldElement r1_power(int p) const;
  FieldElement r2_power(int p) const;

  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement multiply(const Monomial& x, const Monomial& y) const;
  /// x^e for e >= 0.
  AlgebraElement power(const AlgebraElement& x, int e) const;

  AlgebraElement one() const { return AlgebraElement(Monomial{0, 0, 0}); }
  AlgebraElement u() const { return AlgebraElement(Monomial{1, 0, 0}); }
  AlgebraElement d() const { return AlgebraElement(Monomial{0, 0, 1}); }
  AlgebraElement w1() const { return AlgebraElement(Monomial{0, 1, 0}); }
  /// w2 = β ud + r2 du written in the w1 basis.
  AlgebraElement w2() const;

  /// Nakayama automorphism: u -> -β^{-1} u, d -> -β d, w1 fixed. Throws
  /// UnsupportedCase when β = 0.
  AlgebraElement sigma(const AlgebraElement& x) const;

 private:
  AlgebraElement left_d(const AlgebraElement& x) const;

  CaseSpec spec_;
  std::vector<FieldElement> r1_pow_;
  std::vector<FieldElement> r2_pow_;
  std::vector<FieldElement> phi_over_r1_;  ///< φ_{p-1}/r1 at index p
};

/// Free-function spelling of DownUpAlgebra::multiply.
inline AlgebraElement normal_product(const DownUpAlgebra& a, const AlgebraElement& x,
                                     const AlgebraElement& y) {
  return a.multiply(x, y);
}

/// All u^i w^j d^k with i+2j+k = deg and i-k = sdeg, lexicographic in (i, j, k).
std::vector<Monomial> graded_basis(Bidegree bd);
int dim_bigraded(Bidegree bd);
int dim_total(int deg);

}  // namespace duha

#endif  // DUHA_PBW_HPP
