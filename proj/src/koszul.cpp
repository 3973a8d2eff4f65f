#include "duha/koszul.hpp"

#include "duha/errors.hpp"

namespace duha {

Bidegree generator_bidegree(Generator g) {
  switch (g) {
    case Generator::Unit: return {0, 0};
    case Generator::V_u: return {1, 1};
    case Generator::V_d: return {1, -1};
    case Generator::R_d2u: return {3, -1};
    case Generator::R_du2: return {3, 1};
    case Generator::Omega: return {4, 0};
    case Generator::Dual_U: return {-1, -1};
    case Generator::Dual_D: return {-1, 1};
    case Generator::Dual_D2U: return {-3, 1};
    case Generator::Dual_DU2: return {-3, -1};
    case Generator::Dual_D2U2: return {-4, 0};
  }
  throw UsageError("unknown generator");
}

std::string label(Generator g) {
  switch (g) {
    case Generator::Unit: return "1";
    case Generator::V_u: return "u";
    case Generator::V_d: return "d";
    case Generator::R_d2u: return "d^2u";
    case Generator::R_du2: return "du^2";
    case Generator::Omega: return "d^2u^2";
    case Generator::Dual_U: return "U";
    case Generator::Dual_D: return "D";
    case Generator::Dual_D2U: return "D^2U";
    case Generator::Dual_DU2: return "DU^2";
    case Generator::Dual_D2U2: return "D^2U^2";
  }
  throw UsageError("unknown generator");
}

GradedSpace::GradedSpace(Bidegree bd, const std::vector<Generator>& generators) : bidegree_(bd) {
  for (Generator g : generators) {
    const Bidegree gb = generator_bidegree(g);
    Component c{g, graded_basis({bd.deg - gb.deg, bd.sdeg - gb.sdeg})};
    dim_ += static_cast<Eigen::Index>(c.basis.size());
    components_.push_back(std::move(c));
  }
}

Eigen::Index GradedSpace::index_of(Generator g, const Monomial& m) const {
  Eigen::Index offset = 0;
  for (const auto& c : components_) {
    if (c.generator == g) {
      for (std::size_t p = 0; p < c.basis.size(); ++p) {
        if (c.basis[p] == m) return offset + static_cast<Eigen::Index>(p);
      }
      return -1;
    }
    offset += static_cast<Eigen::Index>(c.basis.size());
  }
  return -1;
}

std::pair<Generator, Monomial> GradedSpace::element(Eigen::Index index) const {
  for (const auto& c : components_) {
    if (index < static_cast<Eigen::Index>(c.basis.size())) {
      return {c.generator, c.basis[static_cast<std::size_t>(index)]};
    }
    index -= static_cast<Eigen::Index>(c.basis.size());
  }
  throw UsageError("GradedSpace::element: index out of range");
}

std::vector<std::string> GradedSpace::labels() const {
  std::vector<std::string> out;
  for (const auto& c : components_) {
    for (const auto& m : c.basis) {
      out.push_back(c.generator == Generator::Unit ? to_string(m)
                                                   : label(c.generator) + "|" + to_string(m));
    }
  }
  return out;
}

VectorX<FieldElement> GradedSpace::coordinates(const Chain& chain) const {
  VectorX<FieldElement> v = VectorX<FieldElement>::Zero(dim_);
  for (const auto& [g, element] : chain) {
    for (const auto& [m, c] : element.terms()) {
      const Eigen::Index idx = index_of(g, m);
      if (idx < 0) {
        throw ConsistencyError("term " + label(g) + "|" + to_string(m) +
                               " lies outside bidegree (" + std::to_string(bidegree_.deg) + "," +
                               std::to_string(bidegree_.sdeg) + ")");
      }
      v(idx) += c;
    }
  }
  return v;
}

nlohmann::json to_json(const GradedMap& map) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < map.entries.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < map.entries.cols(); ++c) row.push_back(map.entries(r, c).to_string());
    entries.push_back(std::move(row));
  }
  return {{"rows", map.rows.labels()}, {"cols", map.cols.labels()}, {"entries", entries}};
}

GradedSpace homology_space(int level, Bidegree bd) {
  switch (level) {
    case 0: return GradedSpace(bd, {Generator::Unit});
    case 1: return GradedSpace(bd, {Generator::V_u, Generator::V_d});
    case 2: return GradedSpace(bd, {Generator::R_d2u, Generator::R_du2});
    case 3: return GradedSpace(bd, {Generator::Omega});
    default: throw UsageError("homology_space: level must be 0..3");
  }
}

GradedSpace cohomology_space(int level, Bidegree bd) {
  switch (level) {
    case 0: return GradedSpace(bd, {Generator::Unit});
    case 1: return GradedSpace(bd, {Generator::Dual_U, Generator::Dual_D});
    case 2: return GradedSpace(bd, {Generator::Dual_D2U, Generator::Dual_DU2});
    case 3: return GradedSpace(bd, {Generator::Dual_D2U2});
    default: throw UsageError("cohomology_space: level must be 0..3");
  }
}

HomologySpaces homology_spaces(Bidegree bd) {
  return {homology_space(3, bd), homology_space(2, bd), homology_space(1, bd),
          homology_space(0, bd)};
}

namespace {

// Products that recur in the differentials.
struct Words {
  explicit Words(const DownUpAlgebra& A)
      : A(A),
        u(A.u()),
        d(A.d()),
        ud(A.multiply(u, d)),
        du(A.multiply(d, u)),
        uu(A.multiply(u, u)),
        dd(A.multiply(d, d)) {}

  AlgebraElement operator()(const AlgebraElement& x, const AlgebraElement& y) const {
    return A.multiply(x, y);
  }
  AlgebraElement operator()(const AlgebraElement& x, const AlgebraElement& y,
                            const AlgebraElement& z) const {
    return A.multiply(A.multiply(x, y), z);
  }

  const DownUpAlgebra& A;
  AlgebraElement u, d, ud, du, uu, dd;
};

void put(Chain& chain, Generator g, AlgebraElement x) {
  if (!x.is_zero()) chain[g] += x;
}

GradedMap assemble(const DownUpAlgebra& A, GradedSpace cols, GradedSpace rows,
                   Chain (*differential)(const DownUpAlgebra&, Generator, const AlgebraElement&)) {
  GradedMap map{std::move(rows), std::move(cols), {}};
  map.entries = MatrixX<FieldElement>::Zero(map.rows.dim(), map.cols.dim());
  Eigen::Index col = 0;
  for (const auto& comp : map.cols.components()) {
    for (const auto& m : comp.basis) {
      map.entries.col(col++) = map.rows.coordinates(differential(A, comp.generator, AlgebraElement(m)));
    }
  }
  return map;
}

}  // namespace

Chain homology_differential(const DownUpAlgebra& A, Generator g, const AlgebraElement& a) {
  const Words w(A);
  const FieldElement& alpha = A.spec().alpha;
  const FieldElement& beta = A.spec().beta;
  Chain out;
  switch (g) {
    case Generator::Unit:
      break;
    case Generator::V_d:
      put(out, Generator::Unit, w(a, w.d) - w(w.d, a));
      break;
    case Generator::V_u:
      put(out, Generator::Unit, w(a, w.u) - w(w.u, a));
      break;
    case Generator::R_d2u:
      put(out, Generator::V_d,
          w(w.du, a) + w(w.u, a, w.d) - alpha * (w(w.ud, a) + w(a, w.du)) -
              beta * (w(w.d, a, w.u) + w(a, w.ud)));
      put(out, Generator::V_u, w(a, w.dd) - alpha * w(w.d, a, w.d) - beta * w(w.dd, a));
      break;
    case Generator::R_du2:
      put(out, Generator::V_d, w(w.uu, a) - alpha * w(w.u, a, w.u) - beta * w(a, w.uu));
      put(out, Generator::V_u,
          w(w.u, a, w.d) + w(a, w.du) - alpha * (w(w.du, a) + w(a, w.ud)) -
              beta * (w(w.ud, a) + w(w.d, a, w.u)));
      break;
    case Generator::Omega:
      put(out, Generator::R_d2u, -(w(w.u, a) + beta * w(a, w.u)));
      put(out, Generator::R_du2, w(a, w.d) + beta * w(w.d, a));
      break;
    default:
      throw UsageError("homology_differential: " + label(g) + " is not a homology generator");
  }
  return out;
}

Chain cohomology_differential(const DownUpAlgebra& A, Generator g, const AlgebraElement& a) {
  const Words w(A);
  const FieldElement& alpha = A.spec().alpha;
  const FieldElement& beta = A.spec().beta;
  Chain out;
  switch (g) {
    case Generator::Unit:
      put(out, Generator::Dual_U, w(w.u, a) - w(a, w.u));
      put(out, Generator::Dual_D, w(w.d, a) - w(a, w.d));
      break;
    case Generator::Dual_U:
      put(out, Generator::Dual_D2U, w(w.dd, a) - alpha * w(w.d, a, w.d) - beta * w(a, w.dd));
      put(out, Generator::Dual_DU2,
          w(w.d, a, w.u) + w(w.du, a) - alpha * (w(a, w.du) + w(w.ud, a)) -
              beta * (w(a, w.ud) + w(w.u, a, w.d)));
      break;
    case Generator::Dual_D:
      put(out, Generator::Dual_D2U,
          w(a, w.du) + w(w.d, a, w.u) - alpha * (w(a, w.ud) + w(w.du, a)) -
              beta * (w(w.u, a, w.d) + w(w.ud, a)));
      put(out, Generator::Dual_DU2, w(a, w.uu) - alpha * w(w.u, a, w.u) - beta * w(w.uu, a));
      break;
    case Generator::Dual_D2U:
      put(out, Generator::Dual_D2U2, -(w(a, w.u) + beta * w(w.u, a)));
      break;
    case Generator::Dual_DU2:
      put(out, Generator::Dual_D2U2, w(w.d, a) + beta * w(a, w.d));
      break;
    case Generator::Dual_D2U2:
      break;
    default:
      throw UsageError("cohomology_differential: " + label(g) + " is not a cohomology generator");
  }
  return out;
}

GradedMap assemble_d1(const DownUpAlgebra& A, Bidegree bd) {
  return assemble(A, homology_space(1, bd), homology_space(0, bd), &homology_differential);
}
GradedMap assemble_d2(const DownUpAlgebra& A, Bidegree bd) {
  return assemble(A, homology_space(2, bd), homology_space(1, bd), &homology_differential);
}
GradedMap assemble_d3(const DownUpAlgebra& A, Bidegree bd) {
  return assemble(A, homology_space(3, bd), homology_space(2, bd), &homology_differential);
}
GradedMap assemble_d0star(const DownUpAlgebra& A, Bidegree bd) {
  return assemble(A, cohomology_space(0, bd), cohomology_space(1, bd), &cohomology_differential);
}
GradedMap assemble_d1star(const DownUpAlgebra& A, Bidegree bd) {
  return assemble(A, cohomology_space(1, bd), cohomology_space(2, bd), &cohomology_differential);
}
GradedMap assemble_d2star(const DownUpAlgebra& A, Bidegree bd) {
  return assemble(A, cohomology_space(2, bd), cohomology_space(3, bd), &cohomology_differential);
}

}  // namespace duha
