#ifndef DUHA_KOSZUL_HPP
#define DUHA_KOSZUL_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "duha/field.hpp"
#include "duha/linalg.hpp"
#include "duha/pbw.hpp"

namespace duha {

/// Tensor factors of the Koszul complexes, in their fixed row/column order.
/// The dual generator D sits in bidegree (-1, 1), the dual of d = (1, -1).
enum class Generator {
  Unit,    ///< A
  V_u,     ///< A ⊗ u
  V_d,     ///< A ⊗ d
  R_d2u,   ///< A ⊗ d²u
  R_du2,   ///< A ⊗ du²
  Omega,   ///< A ⊗ d²u²
  Dual_U,
  Dual_D,
  Dual_D2U,
  Dual_DU2,
  Dual_D2U2,
};

Bidegree generator_bidegree(Generator g);
std::string label(Generator g);

/// Linear combination of generator ⊗ algebra element.
using Chain = std::map<Generator, AlgebraElement>;

/// One graded component of a term of the complex: a direct sum of copies of
/// A_{bd - bideg(g)}, one per generator.
class GradedSpace {
 public:
  struct Component {
    Generator generator;
    std::vector<Monomial> basis;
  };

  GradedSpace() = default;
  GradedSpace(Bidegree bd, const std::vector<Generator>& generators);

  Bidegree bidegree() const { return bidegree_; }
  const std::vector<Component>& components() const { return components_; }
  Eigen::Index dim() const { return dim_; }

  /// Flat index, or -1 when (g, m) is not a basis element of this space.
  Eigen::Index index_of(Generator g, const Monomial& m) const;
  std::pair<Generator, Monomial> element(Eigen::Index index) const;
  std::vector<std::string> labels() const;

  /// Coordinates of a chain. A term outside the declared basis is a
  /// homogeneity violation and throws ConsistencyError.
  VectorX<FieldElement> coordinates(const Chain& chain) const;

 private:
  Bidegree bidegree_;
  std::vector<Component> components_;
  Eigen::Index dim_ = 0;
};

/// A differential restricted to one bidegree, columns = domain basis.
struct GradedMap {
  GradedSpace rows;
  GradedSpace cols;
  MatrixX<FieldElement> entries;
};

nlohmann::json to_json(const GradedMap& map);

/// Terms of  A⊗Ω -> A⊗R -> A⊗V -> A  at bidegree bd; level 0 is A, 3 is A⊗Ω.
GradedSpace homology_space(int level, Bidegree bd);
/// Terms of  A -> V*⊗A -> R*⊗A -> Ω*⊗A; level 0 is A, 3 is Ω*⊗A.
GradedSpace cohomology_space(int level, Bidegree bd);

struct HomologySpaces {
  GradedSpace omega, r, v, a;
};
HomologySpaces homology_spaces(Bidegree bd);

/// Chain-level differentials on a single generator ⊗ element (γ = 0).
Chain homology_differential(const DownUpAlgebra& A, Generator g, const AlgebraElement& a);
Chain cohomology_differential(const DownUpAlgebra& A, Generator g, const AlgebraElement& a);

GradedMap assemble_d1(const DownUpAlgebra& A, Bidegree bd);
GradedMap assemble_d2(const DownUpAlgebra& A, Bidegree bd);
GradedMap assemble_d3(const DownUpAlgebra& A, Bidegree bd);
GradedMap assemble_d0star(const DownUpAlgebra& A, Bidegree bd);
GradedMap assemble_d1star(const DownUpAlgebra& A, Bidegree bd);
GradedMap assemble_d2star(const DownUpAlgebra& A, Bidegree bd);

}  // namespace duha

#endif  // DUHA_KOSZUL_HPP
