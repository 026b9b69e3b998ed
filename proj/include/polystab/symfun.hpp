#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "polystab/partition.hpp"
#include "polystab/polynomial.hpp"

namespace polystab {

namespace symfun {

inline Polynomial elementary(int k, int n, const FieldSpec& field) {
  Polynomial r(n, Scalar::zero(field));
  if (k == 0) return Polynomial::constant(n, Scalar::one(field));
  if (k < 0 || k > n) return r;
  std::vector<int> idx(k);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == k) {
      Monomial m(n, 0);
      for (int i : idx) m[i] = 1;
      r.add_term(m, Scalar::one(field));
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return r;
}

inline Polynomial complete_homogeneous(int k, int n, const FieldSpec& field) {
  if (k < 0) return Polynomial(n, Scalar::zero(field));
  if (k == 0) return Polynomial::constant(n, Scalar::one(field));
  Polynomial r(n, Scalar::zero(field));
  Monomial m(n, 0);
  auto rec = [&](auto&& self, int var, int rest) -> void {
    if (var == n - 1) {
      m[var] = rest;
      r.add_term(m, Scalar::one(field));
      m[var] = 0;
      return;
    }
    for (int e = 0; e <= rest; ++e) {
      m[var] = e;
      self(self, var + 1, rest - e);
    }
    m[var] = 0;
  };
  if (n == 0) return r;
  rec(rec, 0, k);
  return r;
}

inline Polynomial power_sum(int k, int n, const FieldSpec& field) {
  if (k < 1) throw std::invalid_argument("power sum index must be >= 1");
  Polynomial r(n, Scalar::zero(field));
  for (int i = 0; i < n; ++i) {
    Monomial m(n, 0);
    m[i] = k;
    r.add_term(m, Scalar::one(field));
  }
  return r;
}

inline Polynomial monomial_symmetric(const Partition& lambda, int n, const FieldSpec& field) {
  if (lambda.length() > n) return Polynomial(n, Scalar::zero(field));
  std::vector<int> exps(n, 0);
  for (int i = 0; i < lambda.length(); ++i) exps[i] = lambda.parts[i];
  std::sort(exps.begin(), exps.end());
  Polynomial r(n, Scalar::zero(field));
  do {
    Monomial m(exps.begin(), exps.end());
    r.add_term(m, Scalar::one(field));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return r;
}

// Jacobi-Trudi: s_lambda = det[ h_{lambda_i - i + j} ], h_0 = 1, h_d = 0 for
// d < 0. Determinant by subset DP over columns.
inline Polynomial schur(const Partition& lambda, int n, const FieldSpec& field) {
  int l = lambda.length();
  if (l == 0) return Polynomial::constant(n, Scalar::one(field));
  std::vector<std::vector<Polynomial>> h(l, std::vector<Polynomial>(l, Polynomial(n, Scalar::zero(field))));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) h[i][j] = complete_homogeneous(lambda.parts[i] - (i + 1) + (j + 1), n, field);
  std::vector<Polynomial> dp(1 << l, Polynomial(n, Scalar::zero(field)));
  dp[0] = Polynomial::constant(n, Scalar::one(field));
  for (int mask = 1; mask < (1 << l); ++mask) {
    int row = __builtin_popcount(mask) - 1;
    int pos = 0;
    for (int j = 0; j < l; ++j) {
      if (!(mask & (1 << j))) continue;
      Polynomial contrib = h[row][j] * dp[mask ^ (1 << j)];
      if ((row + pos) % 2 == 1) contrib = -contrib;
      dp[mask] += contrib;
      ++pos;
    }
  }
  return dp[(1 << l) - 1];
}

}  // namespace symfun

enum class BasisKind { E, H, P, M, S };

inline BasisKind basis_kind_from_char(char c) {
  switch (c) {
    case 'e': return BasisKind::E;
    case 'h': return BasisKind::H;
    case 'p': return BasisKind::P;
    case 'm': return BasisKind::M;
    case 's': return BasisKind::S;
  }
  throw std::invalid_argument("unknown basis kind");
}

inline Polynomial basis_poly(BasisKind kind, const Partition& shape, int n, const FieldSpec& field) {
  switch (kind) {
    case BasisKind::M:
      return symfun::monomial_symmetric(shape, n, field);
    case BasisKind::S:
      return symfun::schur(shape, n, field);
    case BasisKind::E:
    case BasisKind::H:
    case BasisKind::P: {
      Polynomial r = Polynomial::constant(n, Scalar::one(field));
      for (int part : shape.parts) {
        Polynomial factor = kind == BasisKind::E   ? symfun::elementary(part, n, field)
                            : kind == BasisKind::H ? symfun::complete_homogeneous(part, n, field)
                                                   : symfun::power_sum(part, n, field);
        r = r * factor;
      }
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

// D = sum_i d/dx_i.
template <typename Coeff>
PolynomialT<Coeff> D_operator(const PolynomialT<Coeff>& f) {
  PolynomialT<Coeff> r = f.zero_like();
  for (int i = 0; i < f.nvars(); ++i) r += f.derivative(i);
  return r;
}

// D^k / k! as the eps^k coefficient of f(x_1 + eps, ..., x_n + eps):
// well-defined in every characteristic, no division performed.
inline Polynomial divided_power_D(const Polynomial& f, int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (k == 0) return f;
  const FieldSpec field = f.proto().field();
  Polynomial r(f.nvars(), Scalar::zero(field));
  std::vector<int> pick(f.nvars(), 0);
  for (const auto& [m, c] : f.terms()) {
    // distribute k among the variables, t_i <= e_i, contributing
    // prod binom(e_i, t_i) x^{e - t}
    auto rec = [&](auto&& self, int var, int rest, const mpz_class& binom_acc) -> void {
      if (var == f.nvars()) {
        if (rest != 0) return;
        Monomial nm(m);
        for (int i = 0; i < f.nvars(); ++i) nm[i] -= pick[i];
        r.add_term(nm, c * Scalar(field, mpq_class(binom_acc)));
        return;
      }
      int top = std::min(rest, m[var]);
      for (int t = 0; t <= top; ++t) {
        pick[var] = t;
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), m[var], t);
        self(self, var + 1, rest - t, binom_acc * b);
        pick[var] = 0;
      }
    };
    rec(rec, 0, k, 1);
  }
  return r;
}

// D s_lambda = sum over removable boxes (i,j) of (n + j - i) s_mu.
inline std::vector<std::pair<Partition, long>> D_schur_expand(const Partition& lambda, int n) {
  if (lambda.size() >= n) throw std::invalid_argument("D_schur_expand requires |lambda| < n");
  std::vector<std::pair<Partition, long>> out;
  for (const auto& [row, mu] : removable_boxes(lambda)) {
    int j = lambda.parts[row];  // column of the removed box, 1-based
    int i = row + 1;
    out.emplace_back(mu, static_cast<long>(n) + j - i);
  }
  return out;
}

// Formal Pieri product with s_(1).
inline std::vector<std::pair<Partition, Scalar>> pieri_multiply_by_l(
    const std::vector<std::pair<Partition, Scalar>>& expansion) {
  std::map<Partition, Scalar> acc;
  for (const auto& [nu, coeff] : expansion) {
    for (const Partition& mu : add_one_box(nu)) {
      auto it = acc.find(mu);
      if (it == acc.end()) acc.emplace(mu, coeff);
      else it->second += coeff;
    }
  }
  std::vector<std::pair<Partition, Scalar>> out;
  for (auto& [mu, c] : acc)
    if (!c.is_zero()) out.emplace_back(mu, c);
  return out;
}

// Exponent pattern of a monomial sorted descending, as a partition.
inline Partition monomial_type(const Monomial& m) {
  std::vector<int> e;
  for (int x : m)
    if (x > 0) e.push_back(x);
  std::sort(e.rbegin(), e.rend());
  return Partition(e);
}

// Expand a symmetric homogeneous polynomial in the m-basis; throws when the
// input is not symmetric.
inline std::vector<std::pair<Partition, Scalar>> monomial_basis_expand(const Polynomial& f) {
  Polynomial rest = f;
  std::vector<std::pair<Partition, Scalar>> out;
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms().begin();  // copies: the map is mutated below
    Partition lambda = monomial_type(m);
    rest -= symfun::monomial_symmetric(lambda, f.nvars(), c.field()) * c;
    out.emplace_back(lambda, c);
    // progress check: the leading monomial type must strictly drop
    if (!rest.is_zero() && !grlex_less(rest.terms().begin()->first, m))
      throw std::invalid_argument("polynomial is not symmetric");
  }
  return out;
}

// Schur expansion by unipotent triangular elimination; valid for
// homogeneous symmetric f of degree d < nvars.
inline std::vector<std::pair<Partition, Scalar>> schur_basis_expand(const Polynomial& f) {
  if (!f.is_homogeneous()) throw std::invalid_argument("schur expansion needs homogeneous input");
  Polynomial rest = f;
  std::vector<std::pair<Partition, Scalar>> out;
  const FieldSpec field = f.proto().field();
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms().begin();  // copies: the map is mutated below
    Partition lambda = monomial_type(m);
    rest -= symfun::schur(lambda, f.nvars(), field) * c;
    out.emplace_back(lambda, c);
    if (!rest.is_zero() && !grlex_less(rest.terms().begin()->first, m))
      throw std::invalid_argument("schur elimination failed to make progress");
  }
  return out;
}

}  // namespace polystab
