#pragma once

#include <stdexcept>
#include <vector>

#include "polystab/groebner.hpp"
#include "polystab/matrix.hpp"
#include "polystab/polynomial.hpp"

namespace polystab {

namespace stab_detail {

// det of a matrix with polynomial entries, cofactor expansion (desk-scale n).
inline Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
  int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  Polynomial acc = m[0][0].zero_like();
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<Polynomial>> minor;
    for (int r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (int c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * poly_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace stab_detail

// Ideal of {g : f(g.x) = f(x), det g = 1} in the n^2 variables g_ij
// (row-major). The action substitutes columns: x_j -> sum_k g_kj x_k.
inline Ideal stabilizer_ideal(const Polynomial& f, int n) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no stabilizer ideal here");
  if (f.nvars() != n) throw std::invalid_argument("variable count mismatch");
  if (!f.is_homogeneous()) throw std::invalid_argument("need a homogeneous form");
  const FieldSpec field = f.proto().field();
  const int N = n * n;
  const int big = N + n;  // g variables then x variables
  auto gvar = [&](int i, int j) { return Polynomial::variable(big, i * n + j, Scalar::zero(field)); };

  // lift f into the big ring and substitute the column action
  std::vector<Polynomial> images;
  for (int j = 0; j < n; ++j) {
    Polynomial img(big, Scalar::zero(field));
    for (int k = 0; k < n; ++k) {
      Monomial m(big, 0);
      m[N + k] = 1;
      img += Polynomial::monomial(big, m, Scalar::one(field)) * gvar(k, j);
    }
    images.push_back(std::move(img));
  }
  Polynomial f_big(big, Scalar::zero(field));
  for (const auto& [m, c] : f.terms()) {
    Monomial bm(big, 0);
    for (int i = 0; i < n; ++i) bm[N + i] = m[i];
    f_big.add_term(bm, c);
  }
  std::vector<Polynomial> f_images(big, Polynomial(big, Scalar::zero(field)));
  for (int v = 0; v < N; ++v) f_images[v] = Polynomial::variable(big, v, Scalar::zero(field));
  for (int j = 0; j < n; ++j) f_images[N + j] = images[j];
  Polynomial diff = f_big.substitute(f_images) - f_big;

  // group by x-exponent: each coefficient is a generator in the g variables
  std::map<Monomial, Polynomial> by_x;
  for (const auto& [m, c] : diff.terms()) {
    Monomial xpart(n, 0), gpart(N, 0);
    for (int i = 0; i < n; ++i) xpart[i] = m[N + i];
    for (int v = 0; v < N; ++v) gpart[v] = m[v];
    auto it = by_x.find(xpart);
    if (it == by_x.end()) it = by_x.emplace(xpart, Polynomial(N, Scalar::zero(field))).first;
    it->second.add_term(gpart, c);
  }
  Ideal ideal;
  for (auto& [x, gen] : by_x)
    if (!gen.is_zero()) ideal.generators.push_back(gen);

  std::vector<std::vector<Polynomial>> g(n, std::vector<Polynomial>(n, Polynomial(N, Scalar::zero(field))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = Polynomial::variable(N, i * n + j, Scalar::zero(field));
  ideal.generators.push_back(stab_detail::poly_det(g) - Polynomial::constant(N, Scalar::one(field)));
  return ideal;
}

// dim { X in sl_n : sum_ij X_ij x_i df/dx_j = 0 }, characteristic 0 only.
inline int lie_stabilizer_dim(const Polynomial& f, int n) {
  const FieldSpec field = f.proto().field();
  if (!field.is_rational()) throw std::invalid_argument("Lie stabilizer dimension needs characteristic 0");
  if (f.nvars() != n) throw std::invalid_argument("variable count mismatch");
  const int N = n * n;
  // column (i,j) of the constraint matrix: coefficients of x_i * df/dx_j
  std::map<Monomial, std::vector<Scalar>> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Polynomial entry = Polynomial::variable(n, i, Scalar::zero(field)) * f.derivative(j);
      for (const auto& [m, c] : entry.terms()) {
        auto it = rows.find(m);
        if (it == rows.end()) it = rows.emplace(m, std::vector<Scalar>(N, Scalar::zero(field))).first;
        it->second[i * n + j] += c;
      }
    }
  }
  ScalarMatrix mat;
  for (auto& [m, row] : rows) mat.push_back(row);
  std::vector<Scalar> trace(N, Scalar::zero(field));
  for (int i = 0; i < n; ++i) trace[i * n + i] = Scalar::one(field);
  mat.push_back(trace);
  return N - matrix_rank(std::move(mat));
}

struct StabilizerDim {
  int dim = 0;
  bool used_groebner = false;
};

// Stabilizer dimension, char 0 via the Lie algebra, char p via Groebner/Krull.
inline StabilizerDim stabilizer_dim(const Polynomial& f, int n, const GroebnerLimits& limits = {}) {
  StabilizerDim out;
  if (f.proto().field().is_rational()) {
    out.dim = lie_stabilizer_dim(f, n);
    return out;
  }
  out.used_groebner = true;
  if (f.is_zero()) {
    out.dim = n * n - 1;
    return out;
  }
  out.dim = krull_dimension(buchberger(stabilizer_ideal(f, n), limits));
  return out;
}

// w in closure(orbit(f)) stays inside the orbit iff the stabilizer
// dimensions agree; callers guarantee the closure containment.
inline bool same_orbit_dim_test(const Polynomial& f, const Polynomial& w, int n,
                                const GroebnerLimits& limits = {}) {
  if (f == w) return true;
  if (w.is_zero()) return false;  // f nonzero by contract, orbit of 0 is {0}
  return stabilizer_dim(f, n, limits).dim == stabilizer_dim(w, n, limits).dim;
}

}  // namespace polystab
