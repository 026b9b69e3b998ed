#pragma once

#include <array>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polystab/matrix.hpp"
#include "polystab/polynomial.hpp"
#include "polystab/polytope.hpp"

namespace polystab {

struct LemmaCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FamilyReport {
  std::string family;
  int n = 0;
  FieldSpec field;
  std::vector<LemmaCheck> lemmas;
  // coefficient polynomials in the formal parameters whose vanishing would
  // shrink a generic support (the finitely many exceptional parameter values)
  std::vector<std::string> exceptional_values;

  bool all_passed() const {
    for (const auto& l : lemmas)
      if (!l.passed) return false;
    return true;
  }
};

namespace family_detail {

inline ParamPolynomial lift(const Polynomial& f, int nparams) {
  ParamScalar proto(nparams, Scalar::zero(f.proto().field()));
  ParamPolynomial out(f.nvars(), proto);
  for (const auto& [m, c] : f.terms()) out.add_term(m, ParamScalar::constant(nparams, c));
  return out;
}

inline std::vector<std::vector<ParamScalar>> param_identity(int nvars, int nparams, const FieldSpec& field) {
  ParamScalar zero(nparams, Scalar::zero(field));
  std::vector<std::vector<ParamScalar>> m(nvars, std::vector<ParamScalar>(nvars, zero));
  for (int i = 0; i < nvars; ++i) m[i][i] = zero.one_like();
  return m;
}

inline mpq_class random_nonzero_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5), sign(0, 1);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return sign(rng) ? q : -q;
}

inline std::vector<mpq_class> to_rational(const std::vector<long>& v) {
  return std::vector<mpq_class>(v.begin(), v.end());
}

// supports as monomial sets
inline std::set<Monomial> support(const Polynomial& f) {
  std::set<Monomial> s;
  for (const auto& [m, c] : f.terms()) s.insert(m);
  return s;
}
inline std::set<Monomial> support(const ParamPolynomial& f) {
  std::set<Monomial> s;
  for (const auto& [m, c] : f.terms())
    if (!c.is_zero()) s.insert(m);
  return s;
}

inline bool polytope_equal(const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b,
                           int dim) {
  PointSet pa(a, dim), pb(b, dim);
  for (const auto& q : a)
    if (!contains(pb, to_rational(q))) return false;
  for (const auto& q : b)
    if (!contains(pa, to_rational(q))) return false;
  return true;
}

}  // namespace family_detail

// ---------------------------------------------------------------------------
// cubic pair: variables x_1..x_n, y_1..y_n, z_1..z_n
// ---------------------------------------------------------------------------

inline int cubic_x(int n, int k) { return k; }
inline int cubic_y(int n, int k) { return n + k; }
inline int cubic_z(int n, int k) { return 2 * n + k; }

inline std::pair<Polynomial, Polynomial> cubic_point(int n, const FieldSpec& field) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  int nv = 3 * n;
  Polynomial w1(nv, Scalar::zero(field)), w2(nv, Scalar::zero(field));
  for (int k = 0; k < n; ++k) {
    Monomial a(nv, 0), b(nv, 0);
    a[cubic_x(n, k)] = 2;
    a[cubic_z(n, k)] = 1;
    b[cubic_y(n, k)] = 2;
    b[cubic_z(n, k)] = 1;
    w1.add_term(a, Scalar::one(field));
    w2.add_term(b, Scalar::one(field));
  }
  return {w1, w2};
}

// SL(V)-weight of a cubic monomial in 3n variables, scaled to stay integral:
// n * exponent - (1,...,1)
inline std::vector<long> cubic_weight(const Monomial& m, int n) {
  std::vector<long> w(m.size());
  for (std::size_t v = 0; v < m.size(); ++v) w[v] = static_cast<long>(n) * m[v] - 1;
  return w;
}

inline FamilyReport verify_cubic_lemmas(int n, const FieldSpec& field) {
  if (field.characteristic() == 2) throw std::invalid_argument("the cubic pair lemmas need characteristic != 2");
  FamilyReport rep;
  rep.family = "cubic";
  rep.n = n;
  rep.field = field;
  auto [w1, w2] = cubic_point(n, field);
  int nv = 3 * n;

  // weight midpoint identity: 2 wt(x_k y_k z_k) = wt(x_k^2 z_k) + wt(y_k^2 z_k)
  {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      Monomial xyz(nv, 0), xxz(nv, 0), yyz(nv, 0);
      xyz[cubic_x(n, k)] = xyz[cubic_y(n, k)] = xyz[cubic_z(n, k)] = 1;
      xxz[cubic_x(n, k)] = 2;
      xxz[cubic_z(n, k)] = 1;
      yyz[cubic_y(n, k)] = 2;
      yyz[cubic_z(n, k)] = 1;
      auto a = cubic_weight(xyz, n), b = cubic_weight(xxz, n), c = cubic_weight(yyz, n);
      for (int v = 0; v < nv; ++v)
        if (2 * a[v] != b[v] + c[v]) ok = false;
    }
    rep.lemmas.push_back({"weight-midpoint-identity", ok,
                          "wt(x_k y_k z_k) is the midpoint of wt(x_k^2 z_k) and wt(y_k^2 z_k)"});
  }

  // diagonal-torus polystability: 0 in the relative interior of the weight polytope
  std::vector<std::vector<long>> weights;
  for (const auto& m : family_detail::support(w1)) weights.push_back(cubic_weight(m, n));
  for (const auto& m : family_detail::support(w2)) weights.push_back(cubic_weight(m, n));
  {
    bool ok = in_relative_interior(PointSet(weights, nv), std::vector<mpq_class>(nv, 0));
    rep.lemmas.push_back({"diagonal-torus-polystable", ok, "0 in relint of the weight polytope"});
  }

  // weight-polytope invariance under the base change x_k -> x_k - a y_k
  // with a formal parameter a
  ParamPolynomial p1 = family_detail::lift(w1, 1);
  ParamPolynomial p2 = family_detail::lift(w2, 1);
  auto M = family_detail::param_identity(nv, 1, field);
  ParamScalar a_param = ParamScalar::variable(1, 0, Scalar::zero(field));
  for (int k = 0; k < n; ++k) M[cubic_x(n, k)][cubic_y(n, k)] = -a_param;
  ParamPolynomial q1 = p1.substitute_linear(M);
  ParamPolynomial q2 = p2.substitute_linear(M);
  {
    std::vector<std::vector<long>> new_weights;
    for (const auto& m : family_detail::support(q1)) new_weights.push_back(cubic_weight(m, n));
    for (const auto& m : family_detail::support(q2)) new_weights.push_back(cubic_weight(m, n));
    bool ok = family_detail::polytope_equal(weights, new_weights, nv);
    rep.lemmas.push_back({"weight-polytope-invariant-under-base-change", ok,
                          "WP of the transformed pair equals WP of the pair for generic a"});
    std::set<std::string> exc;
    for (const auto& p : {q1, q2})
      for (const auto& [m, c] : p.terms())
        if (!c.is_zero() && c.degree() > 0) exc.insert(c.str({"a"}));
    rep.exceptional_values.assign(exc.begin(), exc.end());
  }

  // specializing a to random nonzero rationals never enlarges the support
  {
    std::mt19937 rng(12345);
    auto generic1 = family_detail::support(q1);
    auto generic2 = family_detail::support(q2);
    bool never_larger = true, some_equal = false;
    for (int trial = 0; trial < 5; ++trial) {
      Scalar a(field, family_detail::random_nonzero_rational(rng));
      ScalarMatrix ms = identity_matrix(nv, field);
      for (int k = 0; k < n; ++k) ms[cubic_x(n, k)][cubic_y(n, k)] = -a;
      auto s1 = family_detail::support(w1.substitute_linear(ms));
      auto s2 = family_detail::support(w2.substitute_linear(ms));
      if (!std::includes(generic1.begin(), generic1.end(), s1.begin(), s1.end()) ||
          !std::includes(generic2.begin(), generic2.end(), s2.begin(), s2.end()))
        never_larger = false;
      if (s1 == generic1 && s2 == generic2) some_equal = true;
    }
    rep.lemmas.push_back({"parameter-evaluation-consistency", never_larger && some_equal,
                          "specialized supports stay inside the generic support and attain it"});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// tensor 4-tuple: variables u_i^(k), v_i^(k), w_i^(k), i in 1..3, k in 1..n
// ---------------------------------------------------------------------------

inline int tensor_u(int n, int i, int k) { return (i - 1) * n + k; }          // i in 1..3
inline int tensor_v(int n, int i, int k) { return 3 * n + (i - 1) * n + k; }  // k in 0..n-1
inline int tensor_w(int n, int i, int k) { return 6 * n + (i - 1) * n + k; }

inline std::string tensor_var_name(int n, int var) {
  const char* letter = var < 3 * n ? "u" : var < 6 * n ? "v" : "w";
  int local = var % (3 * n);
  return std::string(letter) + std::to_string(local / n + 1) + "_" + std::to_string(local % n + 1);
}

inline std::array<Polynomial, 4> tensor_point(int n, const FieldSpec& field) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  int nv = 9 * n;
  auto mono = [&](int a, int b, int c, int k) {
    Monomial m(nv, 0);
    m[tensor_u(n, a, k)] = 1;
    m[tensor_v(n, b, k)] = 1;
    m[tensor_w(n, c, k)] = 1;
    return m;
  };
  std::array<Polynomial, 4> f{Polynomial(nv, Scalar::zero(field)), Polynomial(nv, Scalar::zero(field)),
                              Polynomial(nv, Scalar::zero(field)), Polynomial(nv, Scalar::zero(field))};
  Scalar one = Scalar::one(field);
  for (int k = 0; k < n; ++k) {
    f[0].add_term(mono(1, 2, 3, k), one);
    f[0].add_term(mono(2, 3, 1, k), one);
    f[0].add_term(mono(3, 1, 2, k), one);
    f[1].add_term(mono(2, 1, 3, k), one);
    f[1].add_term(mono(1, 3, 2, k), one);
    f[1].add_term(mono(3, 2, 1, k), one);
    f[2].add_term(mono(1, 1, 3, k), one);
    f[2].add_term(mono(2, 3, 2, k), one);
    f[2].add_term(mono(3, 1, 1, k), one);
    f[3].add_term(mono(2, 2, 3, k), one);
    f[3].add_term(mono(1, 3, 1, k), one);
    f[3].add_term(mono(3, 2, 2, k), one);
  }
  return f;
}

// SL(U) x SL(V) x SL(W) weight, scaled by 3n per block: every block carries
// degree 1, so the uniform formula 3n * exponent - (1,...,1) applies.
inline std::vector<long> tensor_weight(const Monomial& m, int n) {
  std::vector<long> w(m.size());
  for (std::size_t v = 0; v < m.size(); ++v) w[v] = static_cast<long>(3 * n) * m[v] - 1;
  return w;
}

// class C_{j,k}: the four monomials sharing the index-3 slot pattern j at level k
inline std::vector<Monomial> tensor_class(int n, int j, int k) {
  int nv = 9 * n;
  std::vector<Monomial> out;
  for (int i1 = 1; i1 <= 2; ++i1) {
    for (int i2 = 1; i2 <= 2; ++i2) {
      Monomial m(nv, 0);
      if (j == 1) {
        m[tensor_u(n, i1, k)] = 1;
        m[tensor_v(n, i2, k)] = 1;
        m[tensor_w(n, 3, k)] = 1;
      } else if (j == 2) {
        m[tensor_u(n, i1, k)] = 1;
        m[tensor_v(n, 3, k)] = 1;
        m[tensor_w(n, i2, k)] = 1;
      } else {
        m[tensor_u(n, 3, k)] = 1;
        m[tensor_v(n, i1, k)] = 1;
        m[tensor_w(n, i2, k)] = 1;
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

inline FamilyReport verify_tensor_lemmas(int n, const FieldSpec& field) {
  FamilyReport rep;
  rep.family = "tensor";
  rep.n = n;
  rep.field = field;
  auto f = tensor_point(n, field);
  int nv = 9 * n;

  std::set<Monomial> tsupp;
  std::vector<std::set<Monomial>> supp;
  for (const auto& fi : f) {
    supp.push_back(family_detail::support(fi));
    tsupp.insert(supp.back().begin(), supp.back().end());
  }

  // each component picks exactly one monomial from each class C_{j,k},
  // and the classes exhaust the total support
  {
    bool ok = tsupp.size() == 12u * n;
    std::set<Monomial> classes;
    for (int j = 1; j <= 3 && ok; ++j) {
      for (int k = 0; k < n && ok; ++k) {
        auto cl = tensor_class(n, j, k);
        classes.insert(cl.begin(), cl.end());
        for (const auto& s : supp) {
          int hits = 0;
          for (const auto& m : cl) hits += s.count(m);
          if (hits != 1) ok = false;
        }
      }
    }
    if (ok && classes != tsupp) ok = false;
    rep.lemmas.push_back({"one-monomial-per-class", ok,
                          "every component meets each class C_{j,k} exactly once and the classes cover tsupp"});
  }

  // tsupp invariance under L^{a,b,c} with formal parameters
  auto M = family_detail::param_identity(nv, 3, field);
  ParamScalar zero3(3, Scalar::zero(field));
  for (int k = 0; k < n; ++k) {
    M[tensor_u(n, 1, k)][tensor_u(n, 2, k)] = ParamScalar::variable(3, 0, Scalar::zero(field));
    M[tensor_v(n, 1, k)][tensor_v(n, 2, k)] = ParamScalar::variable(3, 1, Scalar::zero(field));
    M[tensor_w(n, 1, k)][tensor_w(n, 2, k)] = ParamScalar::variable(3, 2, Scalar::zero(field));
  }
  std::vector<ParamPolynomial> lf;
  for (const auto& fi : f) lf.push_back(family_detail::lift(fi, 3).substitute_linear(M));
  {
    std::set<Monomial> new_tsupp;
    bool componentwise = true;
    for (std::size_t i = 0; i < lf.size(); ++i) {
      auto s = family_detail::support(lf[i]);
      if (!std::includes(s.begin(), s.end(), supp[i].begin(), supp[i].end())) componentwise = false;
      new_tsupp.insert(s.begin(), s.end());
    }
    bool ok = componentwise && new_tsupp == tsupp;
    rep.lemmas.push_back({"total-support-invariant-under-base-change", ok,
                          "tsupp(L(F)) = tsupp(F) and supp(F_i) subset of supp(L(F_i)) for generic a,b,c"});
    std::set<std::string> exc;
    for (const auto& p : lf)
      for (const auto& [m, c] : p.terms())
        if (!c.is_zero() && c.degree() > 0) exc.insert(c.str({"a", "b", "c"}));
    rep.exceptional_values.assign(exc.begin(), exc.end());
  }

  // product-torus polystability
  std::vector<std::vector<long>> weights;
  for (const auto& m : tsupp) weights.push_back(tensor_weight(m, n));
  {
    bool ok = in_relative_interior(PointSet(weights, nv), std::vector<mpq_class>(nv, 0));
    rep.lemmas.push_back({"product-torus-polystable", ok, "0 in relint of the weight polytope"});
  }

  // weight additivity: tensor monomial weight = sum of its three factor weights
  {
    bool ok = true;
    for (const auto& m : tsupp) {
      auto total = tensor_weight(m, n);
      std::vector<long> sum(nv, 0);
      for (int v = 0; v < nv; ++v) {
        if (m[v] == 0) continue;
        // factor weight: 3n on its own slot, -1 across its own block
        int block = v / (3 * n);
        for (int u = 0; u < 3 * n; ++u) sum[block * 3 * n + u] -= 1;
        sum[v] += static_cast<long>(3 * n) * m[v];
      }
      if (sum != total) ok = false;
    }
    rep.lemmas.push_back({"weight-additivity", ok, "monomial weights are sums of factor weights"});
  }

  // trace-zero projection vs raw-exponents-minus-barycenter: same verdicts
  {
    std::vector<std::vector<long>> raw;
    for (const auto& m : tsupp) {
      std::vector<long> r(m.begin(), m.end());
      raw.push_back(std::move(r));
    }
    long cnt = static_cast<long>(raw.size());
    std::vector<long> bary(nv, 0);
    for (const auto& r : raw)
      for (int v = 0; v < nv; ++v) bary[v] += r[v];
    std::vector<std::vector<long>> centered;
    for (const auto& r : raw) {
      std::vector<long> c(nv);
      for (int v = 0; v < nv; ++v) c[v] = cnt * r[v] - bary[v];
      centered.push_back(std::move(c));
    }
    std::vector<mpq_class> origin(nv, 0);
    bool ok = contains(PointSet(weights, nv), origin) == contains(PointSet(centered, nv), origin) &&
              in_relative_interior(PointSet(weights, nv), origin) ==
                  in_relative_interior(PointSet(centered, nv), origin);
    rep.lemmas.push_back({"projection-invariance", ok,
                          "verdicts agree between trace-zero weights and barycenter-centered exponents"});
  }

  // specializing (a,b,c) never enlarges the support
  {
    std::mt19937 rng(54321);
    bool never_larger = true, some_equal = false;
    std::vector<std::set<Monomial>> generic;
    for (const auto& p : lf) generic.push_back(family_detail::support(p));
    for (int trial = 0; trial < 5; ++trial) {
      Scalar a(field, family_detail::random_nonzero_rational(rng));
      Scalar b(field, family_detail::random_nonzero_rational(rng));
      Scalar c(field, family_detail::random_nonzero_rational(rng));
      ScalarMatrix ms = identity_matrix(nv, field);
      for (int k = 0; k < n; ++k) {
        ms[tensor_u(n, 1, k)][tensor_u(n, 2, k)] = a;
        ms[tensor_v(n, 1, k)][tensor_v(n, 2, k)] = b;
        ms[tensor_w(n, 1, k)][tensor_w(n, 2, k)] = c;
      }
      bool all_eq = true;
      for (std::size_t i = 0; i < f.size(); ++i) {
        auto s = family_detail::support(f[i].substitute_linear(ms));
        if (!std::includes(generic[i].begin(), generic[i].end(), s.begin(), s.end())) never_larger = false;
        if (s != generic[i]) all_eq = false;
      }
      if (all_eq) some_equal = true;
    }
    rep.lemmas.push_back({"parameter-evaluation-consistency", never_larger && some_equal,
                          "specialized supports stay inside the generic support and attain it"});
  }
  return rep;
}

}  // namespace polystab
