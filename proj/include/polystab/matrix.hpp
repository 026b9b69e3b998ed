#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "polystab/field.hpp"

namespace polystab {

// Dense matrices over the ground field, Gaussian elimination throughout.
using ScalarMatrix = std::vector<std::vector<Scalar>>;

inline ScalarMatrix identity_matrix(int n, const FieldSpec& f) {
  ScalarMatrix m(n, std::vector<Scalar>(n, Scalar::zero(f)));
  for (int i = 0; i < n; ++i) m[i][i] = Scalar::one(f);
  return m;
}

inline ScalarMatrix mat_mul(const ScalarMatrix& a, const ScalarMatrix& b) {
  int n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  if (!a.empty() && static_cast<int>(a[0].size()) != k) throw std::invalid_argument("matrix dim mismatch");
  ScalarMatrix r(n, std::vector<Scalar>(m, a.empty() ? Scalar() : a[0][0].zero_like()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int t = 0; t < k; ++t) r[i][j] += a[i][t] * b[t][j];
  return r;
}

inline int matrix_rank(ScalarMatrix m) {
  int rows = m.size();
  if (rows == 0) return 0;
  int cols = m[0].size();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][col].is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Scalar inv = m[rank][col].inverse();
    for (int c = col; c < cols; ++c) m[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Scalar factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Inverse via Gauss-Jordan; nullopt when singular.
inline std::optional<ScalarMatrix> matrix_inverse(ScalarMatrix m) {
  int n = m.size();
  if (n == 0) return ScalarMatrix{};
  FieldSpec f = m[0][0].field();
  ScalarMatrix inv = identity_matrix(n, f);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) { pivot = r; break; }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    Scalar pi = m[col][col].inverse();
    for (int c = 0; c < n; ++c) {
      m[col][c] *= pi;
      inv[col][c] *= pi;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar factor = m[r][col];
      for (int c = 0; c < n; ++c) {
        m[r][c] -= factor * m[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace polystab
