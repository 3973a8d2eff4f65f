#ifndef DUHA_LINALG_HPP
#define DUHA_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "duha/errors.hpp"

namespace duha {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/**
 * Reduced row echelon form computed in place by exact Gauss-Jordan
 * elimination. The pivot is the first nonzero entry of the column at or
 * below the current row, so results are deterministic.
 *
 * Works for any exact field type with `Scalar(0)`, `==`, `/` and `*`.
 *
 * @returns the pivot columns, in increasing order.
 */
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(MatrixX<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  const Scalar zero(0);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == zero) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) {
      if (!(m(row, c) == zero)) m(row, c) = m(row, c) * inv;
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == zero) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) {
        if (!(m(row, c) == zero)) m(r, c) = m(r, c) - factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> work = m;
  return static_cast<Eigen::Index>(rref_in_place(work).size());
}

/// Basis of the right null space {x : M x = 0}; size cols - rank.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> work = m;
  const auto pivots = rref_in_place(work);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<VectorX<Scalar>> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(m.cols());
    v(free) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v(pivots[r]) = -work(static_cast<Eigen::Index>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solution x of M x = v when one exists.
template <typename Derived, typename VDerived>
std::optional<VectorX<typename Derived::Scalar>> solve_exact(
    const Eigen::MatrixBase<Derived>& m, const Eigen::MatrixBase<VDerived>& v) {
  using Scalar = typename Derived::Scalar;
  if (v.rows() != m.rows() || v.cols() != 1) {
    throw UsageError("in_image: vector length " + std::to_string(v.rows()) +
                     " does not match matrix rows " + std::to_string(m.rows()));
  }
  MatrixX<Scalar> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = v;
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  VectorX<Scalar> x = VectorX<Scalar>::Zero(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), m.cols());
  }
  return x;
}

template <typename Derived, typename VDerived>
bool in_image(const Eigen::MatrixBase<Derived>& m, const Eigen::MatrixBase<VDerived>& v) {
  return solve_exact(m, v).has_value();
}

/// dim ker(d_out) - rank(d_in) for the middle term of  X --d_in--> Y --d_out--> Z.
template <typename D1, typename D2>
Eigen::Index homology_dim(const Eigen::MatrixBase<D1>& d_in, const Eigen::MatrixBase<D2>& d_out) {
  if (d_in.rows() != d_out.cols()) {
    throw UsageError("homology_dim: middle dimensions disagree (" + std::to_string(d_in.rows()) +
                     " vs " + std::to_string(d_out.cols()) + ")");
  }
  const Eigen::Index h = (d_out.cols() - rank(d_out)) - rank(d_in);
  if (h < 0) throw ConsistencyError("negative homology dimension: d_out * d_in != 0");
  return h;
}

/// True when every entry is exactly zero.
template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!(m(r, c) == Scalar(0))) return false;
    }
  }
  return true;
}

}  // namespace duha

#endif  // DUHA_LINALG_HPP
