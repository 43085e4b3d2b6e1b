#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spanv {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Row-major Kronecker product: entry (r1*rows(b)+r2, c1*cols(b)+c2) = a(r1,c1) b(r2,c2).
template <class DA, class DB>
MatrixX<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  const Eigen::Index br = b.rows(), bc = b.cols();
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows() * br, a.cols() * bc);
  // exact scalars are expensive; most structure maps are sparse
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x == Scalar(0)) continue;
      if (x == Scalar(1)) out.block(i * br, j * bc, br, bc) = b;
      else out.block(i * br, j * bc, br, bc) = x * b;
    }
  return out;
}

// a * b, skipping zero entries.
template <class DA, class DB>
MatrixX<typename DA::Scalar> sparse_product(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows(), b.cols());
  std::vector<std::vector<Eigen::Index>> row_support(static_cast<std::size_t>(b.rows()));
  for (Eigen::Index k = 0; k < b.rows(); ++k)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (!(b(k, j) == Scalar(0))) row_support[static_cast<std::size_t>(k)].push_back(j);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x == Scalar(0)) continue;
      for (Eigen::Index j : row_support[static_cast<std::size_t>(k)]) out(i, j) += x * b(k, j);
    }
  return out;
}

template <class Scalar>
struct Elimination {
  Eigen::Index rank = 0;
  Scalar determinant{0};  // zero unless square of full rank
};

// Fraction-free (Bareiss) forward elimination.
template <class Derived>
Elimination<typename Derived::Scalar> bareiss(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = input;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Scalar prev(1);
  Eigen::Index r = 0;
  int sign = 1;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index p = r;
    while (p < rows && m(p, col) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) m(i, j) = (m(i, j) * m(r, col) - m(i, col) * m(r, j)) / prev;
      m(i, col) = Scalar(0);
    }
    prev = m(r, col);
    ++r;
  }
  Elimination<Scalar> out;
  out.rank = r;
  if (rows == cols && r == rows) out.determinant = rows == 0 ? Scalar(1) : (sign < 0 ? Scalar(0) - prev : prev);
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
template <class Scalar>
std::vector<Eigen::Index> rref(MatrixX<Scalar>& m, Eigen::Index pivot_cols) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < pivot_cols && r < m.rows(); ++col) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, col) == Scalar(0)) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Scalar inv = Scalar(1) / m(r, col);
    m.row(r) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col) == Scalar(0)) continue;
      Scalar factor = m(i, col);
      m.row(i) -= factor * m.row(r);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

template <class Scalar>
struct Inversion {
  std::optional<MatrixX<Scalar>> inverse;
  std::string witness;  // shape or rank when no inverse exists
};

template <class Derived>
Inversion<typename Derived::Scalar> invert_matrix(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n)
    return {std::nullopt, "shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " is not square"};
  // monomial matrices (permutations with weights) invert by transposition
  {
    std::vector<Eigen::Index> col_of(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    bool monomial = true;
    for (Eigen::Index i = 0; i < n && monomial; ++i)
      for (Eigen::Index j = 0; j < n && monomial; ++j) {
        if (a(i, j) == Scalar(0)) continue;
        if (col_of[static_cast<std::size_t>(i)] != -1 || used[static_cast<std::size_t>(j)]) monomial = false;
        col_of[static_cast<std::size_t>(i)] = j;
        used[static_cast<std::size_t>(j)] = true;
      }
    for (Eigen::Index i = 0; i < n && monomial; ++i) monomial = col_of[static_cast<std::size_t>(i)] != -1;
    if (monomial) {
      MatrixX<Scalar> inv = MatrixX<Scalar>::Zero(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index j = col_of[static_cast<std::size_t>(i)];
        inv(j, i) = Scalar(1) / a(i, j);
      }
      return {std::move(inv), ""};
    }
  }
  auto e = bareiss(a);
  if (e.rank < n) return {std::nullopt, "rank " + std::to_string(e.rank) + " < " + std::to_string(n)};
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  rref(aug, n);
  return {MatrixX<Scalar>(aug.rightCols(n)), ""};
}

template <class Scalar>
struct LinearSolution {
  std::optional<MatrixX<Scalar>> solution;  // a particular solution X of A X = B
  bool unique = false;
  Eigen::Index rank = 0;
  std::string witness;  // set when inconsistent
};

template <class DA, class DB>
LinearSolution<typename DA::Scalar> solve_exact(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  const Eigen::Index rows = a.rows(), n = a.cols(), k = b.cols();
  MatrixX<Scalar> aug(rows, n + k);
  aug.leftCols(n) = a;
  aug.rightCols(k) = b;
  auto pivots = rref(aug, n);
  LinearSolution<Scalar> out;
  out.rank = static_cast<Eigen::Index>(pivots.size());
  for (Eigen::Index i = out.rank; i < rows; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      if (aug(i, n + j) != Scalar(0)) {
        out.witness = "inconsistent equation " + std::to_string(i) + " in right-hand column " + std::to_string(j);
        return out;
      }
  MatrixX<Scalar> x = MatrixX<Scalar>::Zero(n, k);
  for (std::size_t i = 0; i < pivots.size(); ++i) x.row(pivots[i]) = aug.block(i, n, 1, k);
  out.solution = std::move(x);
  out.unique = out.rank == n;
  return out;
}

}  // namespace spanv
