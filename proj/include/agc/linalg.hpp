// Copyright 2026 The agcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact Gaussian elimination over any field scalar. Eigen's own decompositions
// pivot on magnitude, which means nothing over a finite field, so only the
// dense containers are borrowed from it.

#ifndef AGC_LINALG_HPP
#define AGC_LINALG_HPP

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "agc/gf.hpp"

namespace agc {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using GfMatrix = Matrix<Gf>;
using GfRow = RowVector<Gf>;

template <typename Scalar>
bool is_zero(const Scalar& s) {
  return s == Scalar(0);
}

/// Reduced row echelon form with zero rows removed.
template <typename Scalar>
struct Echelon {
  Matrix<Scalar> rows;
  std::vector<Eigen::Index> pivots;  // pivot column of each row

  Eigen::Index rank() const { return rows.rows(); }
};

template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  const Eigen::Index nr = m.rows(), nc = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < nc && row < nr; ++col) {
    Eigen::Index sel = row;
    while (sel < nr && is_zero(m(sel, col))) ++sel;
    if (sel == nr) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index j = col; j < nc; ++j) m(row, j) = m(row, j) * inv;
    for (Eigen::Index i = 0; i < nr; ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const Scalar factor = m(i, col);
      for (Eigen::Index j = col; j < nc; ++j) m(i, j) = m(i, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  Echelon<Scalar> out;
  out.rows = m.topRows(row);
  out.pivots = std::move(pivots);
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Residue of `v` after clearing every pivot column of `e`; zero iff v lies
/// in the row space.
template <typename Scalar, typename Derived>
RowVector<Scalar> reduce_by(const Echelon<Scalar>& e, const Eigen::MatrixBase<Derived>& v) {
  RowVector<Scalar> r = v;
  for (Eigen::Index i = 0; i < e.rank(); ++i) {
    const Scalar c = r(e.pivots[i]);
    if (is_zero(c)) continue;
    for (Eigen::Index j = 0; j < r.cols(); ++j) r(j) = r(j) - c * e.rows(i, j);
  }
  return r;
}

template <typename Scalar, typename Derived>
bool in_row_space(const Echelon<Scalar>& e, const Eigen::MatrixBase<Derived>& v) {
  const RowVector<Scalar> r = reduce_by(e, v);
  for (Eigen::Index j = 0; j < r.cols(); ++j) {
    if (!is_zero(r(j))) return false;
  }
  return true;
}

/// Some λ with λ·m = target, solved on the augmented transpose; nullopt when
/// target is outside the row space.
template <typename DerivedM, typename DerivedT>
std::optional<RowVector<typename DerivedM::Scalar>> solve_left(const Eigen::MatrixBase<DerivedM>& m,
                                                               const Eigen::MatrixBase<DerivedT>& target) {
  using Scalar = typename DerivedM::Scalar;
  const Eigen::Index k = m.rows(), n = m.cols();
  Matrix<Scalar> aug(n, k + 1);
  aug.leftCols(k) = m.transpose();
  aug.col(k) = target.transpose();
  const Echelon<Scalar> e = rref(aug);
  RowVector<Scalar> lambda = RowVector<Scalar>::Constant(k, Scalar(0));
  for (Eigen::Index i = 0; i < e.rank(); ++i) {
    if (e.pivots[i] == k) return std::nullopt;
    lambda(e.pivots[i]) = e.rows(i, k);
  }
  return lambda;
}

/// Basis of the right kernel {x : m x = 0}, one vector per row.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Echelon<Scalar> e = rref(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Eigen::Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  Matrix<Scalar> out(n - e.rank(), n);
  Eigen::Index row = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    for (Eigen::Index j = 0; j < n; ++j) out(row, j) = Scalar(0);
    out(row, free) = Scalar(1);
    for (Eigen::Index i = 0; i < e.rank(); ++i) out(row, e.pivots[i]) = -e.rows(i, free);
    ++row;
  }
  return out;
}

/// Matrix with every unbound constant bound to `f`.
GfMatrix bind(const GfMatrix& m, const GaloisField& f);

}  // namespace agc

#endif  // AGC_LINALG_HPP
