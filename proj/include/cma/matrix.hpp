#ifndef CMA_MATRIX_HPP
#define CMA_MATRIX_HPP

#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "cma/poly.hpp"

namespace cma {

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// In-place reduced row echelon form by exact Gaussian elimination.
/// Returns the pivot columns.
template <class S>
std::vector<int> rref_inplace(MatrixX<S>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!is_zero(m(i, col))) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != row) m.row(pr).swap(m.row(row));
    S piv_inv = inv(m(row, col));
    for (int j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * piv_inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      S f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
int rank(MatrixX<S> m) {
  return static_cast<int>(rref_inplace(m).size());
}

/// Basis of the right null space.
template <class S>
std::vector<VectorX<S>> kernel_basis(MatrixX<S> m, const FieldCtx<S>& ctx) {
  const int n = static_cast<int>(m.cols());
  std::vector<int> pivots = rref_inplace(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<VectorX<S>> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    VectorX<S> v(n);
    for (int i = 0; i < n; ++i) v(i) = ctx.from_int(0);
    v(free_col) = ctx.from_int(1);
    for (size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -m(static_cast<int>(r), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
MatrixX<S> identity(int n, const FieldCtx<S>& ctx) {
  MatrixX<S> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = ctx.from_int(i == j ? 1 : 0);
  return m;
}

template <class S>
MatrixX<S> inverse(const MatrixX<S>& m, const FieldCtx<S>& ctx) {
  const int n = static_cast<int>(m.rows());
  MatrixX<S> aug(n, 2 * n);
  aug.block(0, 0, n, n) = m;
  aug.block(0, n, n, n) = identity<S>(n, ctx);
  auto pivots = rref_inplace(aug);
  if (static_cast<int>(pivots.size()) != n) throw Error("SingularMatrix", "matrix is not invertible");
  return aug.block(0, n, n, n);
}

/// Monic minimal polynomial via Krylov-style linear dependence of I, c, c^2, ...
/// flattened to vectors of length n^2.
template <class S>
Poly<S> minimal_polynomial(const MatrixX<S>& c, const FieldCtx<S>& ctx) {
  if (c.rows() != c.cols()) throw Error("ShapeMismatch", "minimal polynomial needs a square matrix");
  const int n = static_cast<int>(c.rows());
  const int nn = n * n;
  // reduced rows plus bookkeeping of each power's expression in the basis
  MatrixX<S> rows(0, nn);
  std::vector<std::vector<S>> combos; // combos[r] = coefficients of power k in reduced row r
  MatrixX<S> pw = identity<S>(n, ctx);
  for (int k = 0;; ++k) {
    VectorX<S> v(nn);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v(i * n + j) = pw(i, j);
    // reduce v against existing reduced rows, tracking the combination
    std::vector<S> expr(static_cast<size_t>(k) + 1, ctx.from_int(0));
    expr[k] = ctx.from_int(1);
    for (int r = 0; r < rows.rows(); ++r) {
      int lead = -1;
      for (int j = 0; j < nn; ++j)
        if (!is_zero(rows(r, j))) { lead = j; break; }
      if (lead < 0 || is_zero(v(lead))) continue;
      S f = v(lead) * inv(rows(r, lead));
      for (int j = 0; j < nn; ++j) v(j) -= f * rows(r, j);
      for (size_t t = 0; t < combos[r].size(); ++t) expr[t] -= f * combos[r][t];
    }
    bool zero = true;
    for (int j = 0; j < nn; ++j)
      if (!is_zero(v(j))) { zero = false; break; }
    if (zero) {
      // expr gives the dependence: sum expr[t] * c^t = 0 with expr[k] = 1
      return Poly<S>(std::vector<S>(expr.begin(), expr.end())).monic();
    }
    rows.conservativeResize(rows.rows() + 1, nn);
    rows.row(rows.rows() - 1) = v.transpose();
    combos.push_back(std::move(expr));
    pw = pw * c;
  }
}

template <class S>
nlohmann::json matrix_to_json(const MatrixX<S>& m, const FieldCtx<S>& ctx) {
  nlohmann::json grid = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(field_traits<S>::to_json(m(i, j)));
    grid.push_back(row);
  }
  return {{"field", ctx.spec().to_json()}, {"matrix", grid}};
}

template <class S>
MatrixX<S> matrix_from_json(const FieldCtx<S>& ctx, const nlohmann::json& j) {
  const auto& grid = j.at("matrix");
  const int rows = static_cast<int>(grid.size());
  const int cols = rows ? static_cast<int>(grid[0].size()) : 0;
  MatrixX<S> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(grid[i].size()) != cols)
      throw Error("InvalidMatrix", "ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(i, c) = field_traits<S>::from_json(ctx, grid[i][c]);
  }
  return m;
}

} // namespace cma

#endif
