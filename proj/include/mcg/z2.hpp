#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

namespace mcg {

using Z2Matrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
using Z2Vector = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>;
using IntegerMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

namespace z2 {

/// Reduces any integer-valued expression mod 2.
template <typename Derived>
Z2Matrix reduce(const Eigen::MatrixBase<Derived>& m) {
  return m.unaryExpr([](auto x) { return static_cast<std::uint8_t>(((static_cast<long long>(x) % 2) + 2) % 2); });
}

inline Z2Matrix mul(const Z2Matrix& a, const Z2Matrix& b) { return reduce(a.cast<int>() * b.cast<int>()); }

inline Z2Matrix add(const Z2Matrix& a, const Z2Matrix& b) {
  return a.binaryExpr(b, [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return x ^ y; });
}

/// x^T F y over Z2.
inline int pair(const Z2Matrix& form, const Z2Vector& x, const Z2Vector& y) {
  return static_cast<int>((x.cast<int>().transpose() * form.cast<int>() * y.cast<int>())(0, 0) & 1);
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<Eigen::Index> row_reduce(Z2Matrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.row(row).swap(m.row(sel));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != row && m(i, col)) m.row(i) = add(m.row(i), m.row(row));
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Z2Matrix m) { return static_cast<int>(row_reduce(m).size()); }

/// Basis of {x : m x = 0}, as columns.
inline Z2Matrix nullspace(Z2Matrix m) {
  const auto pivots = row_reduce(m);
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0, p = 0; c < m.cols(); ++c) {
    if (p < static_cast<Eigen::Index>(pivots.size()) && pivots[p] == c)
      ++p;
    else
      free.push_back(c);
  }
  Z2Matrix basis = Z2Matrix::Zero(m.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t j = 0; j < free.size(); ++j) {
    basis(free[j], j) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], j) = m(i, free[j]);
  }
  return basis;
}

inline std::optional<Z2Matrix> inverse(const Z2Matrix& m) {
  const Eigen::Index n = m.rows();
  Z2Matrix aug(n, 2 * n);
  aug << m, Z2Matrix::Identity(n, n);
  const auto pivots = row_reduce(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  return Z2Matrix(aug.rightCols(n));
}

/// Some x with m x = b, if one exists.
inline std::optional<Z2Vector> solve(const Z2Matrix& m, const Z2Vector& b) {
  Z2Matrix aug(m.rows(), m.cols() + 1);
  aug << m, b;
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Z2Vector x = Z2Vector::Zero(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(static_cast<Eigen::Index>(i), m.cols());
  return x;
}

}  // namespace z2

/// Exact determinant by fraction-free elimination.
inline std::int64_t bareiss_determinant(IntegerMatrix m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index sel = k + 1;
      while (sel < n && m(sel, k) == 0) ++sel;
      if (sel == n) return 0;
      m.row(k).swap(m.row(sel));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        const __int128 v = static_cast<__int128>(m(i, j)) * m(k, k) - static_cast<__int128>(m(i, k)) * m(k, j);
        m(i, j) = static_cast<std::int64_t>(v / prev);
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace mcg
