#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "polystab/divisibility.hpp"
#include "polystab/lp.hpp"
#include "polystab/partition.hpp"
#include "polystab/stabilizer.hpp"
#include "polystab/symfun.hpp"
#include "polystab/torus.hpp"

namespace polystab {

// One-parameter subgroup acting diagonally on a named basis. Carries enough
// data (basis rows, support in that basis, weights) for an independent
// checker to re-verify the destabilization by weight arithmetic alone.
struct OnePSG {
  std::vector<std::string> basis_names;
  std::vector<std::vector<long>> basis_matrix;  // row i = basis vector i in x-coordinates
  std::vector<long> exponents;                  // weighted sum over the basis is 0 (lands in SL_n)
  std::string direction;                        // "t->0" or "t->infinity"
  std::vector<Monomial> support_in_basis;
  std::vector<long> weights;  // <exponents, monomial> per support element
};

struct StabilityVerdict {
  StabilityClass cls = StabilityClass::Unstable;
  bool stable_refined = false;  // stabilizer dimension was computed and decided stable vs not
  bool used_groebner = false;
  bool polystable_without_dims = false;  // polystable verdict needed no stabilizer dimensions
  std::string branch;
  std::string note;
  std::optional<OnePSG> destabilizer;        // unstable certificate
  std::optional<Polynomial> boundary_point;  // semistable-not-polystable certificate (x-coordinates)
  int dim_f = -2;                            // -2: not computed
  int dim_w = -2;
  std::vector<std::string> ruled_out;  // destabilization conditions that failed
};

// Display class: an unrefined polystable verdict must not claim "not stable".
inline std::string verdict_class_string(const StabilityVerdict& v) {
  if (v.cls == StabilityClass::PolystableNotStable && !v.stable_refined) return "polystable";
  return to_string(v.cls);
}

// y = C x with y_0 = l = sum x_i and y_i = b_i = x_i - x_{i+1}.
inline ScalarMatrix lb_matrix(int n, const FieldSpec& field) {
  ScalarMatrix c(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (int j = 0; j < n; ++j) c[0][j] = Scalar::one(field);
  for (int i = 1; i < n; ++i) {
    c[i][i - 1] = Scalar::one(field);
    c[i][i] = -Scalar::one(field);
  }
  return c;
}

struct LBDecomposition {
  int n = 0;
  FieldSpec field;
  // component i is p_i as a polynomial in the y-coordinates (variable 0,
  // the l slot, is unused); f = sum_i l^i p_i
  std::vector<Polynomial> components;
  ScalarMatrix C, Cinv;

  bool component_nonzero(int i) const {
    return i >= 0 && i < static_cast<int>(components.size()) && !components[i].is_zero();
  }
  int min_index() const {
    for (int i = 0; i < static_cast<int>(components.size()); ++i)
      if (!components[i].is_zero()) return i;
    return -1;
  }
  int max_index() const {
    for (int i = static_cast<int>(components.size()) - 1; i >= 0; --i)
      if (!components[i].is_zero()) return i;
    return -1;
  }

  // l^i * p_i carried back to x-coordinates.
  Polynomial term_in_x(int i) const {
    Polynomial g = components[i];
    Monomial li(n, 0);
    li[0] = i;
    g = g * Polynomial::monomial(n, li, Scalar::one(field));
    return g.substitute_linear(C);
  }

  Polynomial reconstruct() const {
    Polynomial g(n, Scalar::zero(field));
    for (int i = 0; i < static_cast<int>(components.size()); ++i) {
      if (components[i].is_zero()) continue;
      Monomial li(n, 0);
      li[0] = i;
      g += components[i] * Polynomial::monomial(n, li, Scalar::one(field));
    }
    return g.substitute_linear(C);
  }
};

inline LBDecomposition lb_decompose(const Polynomial& f, int n) {
  const FieldSpec field = f.proto().field();
  if (!field.is_rational() && n % static_cast<long>(field.characteristic()) == 0)
    throw std::invalid_argument("l,b decomposition needs p not dividing n");
  if (f.nvars() != n) throw std::invalid_argument("variable count mismatch");
  LBDecomposition out;
  out.n = n;
  out.field = field;
  out.C = lb_matrix(n, field);
  auto inv = matrix_inverse(out.C);
  if (!inv) throw std::logic_error("l,b basis matrix unexpectedly singular");
  out.Cinv = *inv;
  Polynomial g = f.substitute_linear(out.Cinv);  // f = g(C x)
  out.components = g.collect(0);
  return out;
}

namespace classify_detail {

inline bool is_symmetric(const Polynomial& f, int n) {
  const FieldSpec field = f.proto().field();
  for (int i = 0; i + 1 < n; ++i) {
    ScalarMatrix perm = identity_matrix(n, field);
    std::swap(perm[i], perm[i + 1]);
    if (!(f.substitute_linear(perm) == f)) return false;
  }
  return true;
}

// Fill support/weights from g (in the certificate's basis) and re-verify the
// destabilization sign before emitting.
inline void finish_unstable_certificate(OnePSG& psg, const Polynomial& g) {
  psg.support_in_basis.clear();
  psg.weights.clear();
  for (const auto& [m, c] : g.terms()) {
    long w = 0;
    for (int v = 0; v < g.nvars(); ++v) w += psg.exponents[v] * m[v];
    bool ok = psg.direction == "t->0" ? w > 0 : w < 0;
    if (!ok) throw std::logic_error("unstable certificate failed weight re-verification");
    psg.support_in_basis.push_back(m);
    psg.weights.push_back(w);
  }
}

inline std::vector<std::vector<long>> lb_matrix_rows(int n) {
  std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
  for (int j = 0; j < n; ++j) rows[0][j] = 1;
  for (int i = 1; i < n; ++i) {
    rows[i][i - 1] = 1;
    rows[i][i] = -1;
  }
  return rows;
}

inline std::vector<std::vector<long>> t2_matrix_rows(int n) {
  std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
  for (int j = 0; j < n; ++j) rows[0][j] = 1;
  for (int i = 1; i <= n - 2; ++i) {
    rows[i][i - 1] = 1;
    rows[i][i] = -1;
  }
  rows[n - 1][n - 1] = 1;
  return rows;
}

inline std::vector<std::string> lb_names(int n) {
  std::vector<std::string> names{"l"};
  for (int i = 1; i < n; ++i) names.push_back("b" + std::to_string(i));
  return names;
}

inline std::vector<std::string> t2_names(int n) {
  std::vector<std::string> names{"l"};
  for (int i = 1; i <= n - 2; ++i) names.push_back("b" + std::to_string(i));
  names.push_back("c");
  return names;
}

// Attempt the polystable -> stable refinement; on a Groebner blow-up keep
// the polystable verdict with the refinement marked undone.
inline void refine_stable(StabilityVerdict& v, const Polynomial& f, int n, const GroebnerLimits& limits) {
  // in characteristic p the refinement runs an elimination in n^2 + 1
  // variables; past n = 4 that is impractical, and the polystable verdict
  // itself does not depend on it
  if (!f.proto().field().is_rational() && n > 4) {
    v.cls = StabilityClass::PolystableNotStable;
    v.stable_refined = false;
    if (!v.note.empty()) v.note += "; ";
    v.note += "stable refinement skipped (elimination too large in characteristic p)";
    return;
  }
  try {
    StabilizerDim sd = stabilizer_dim(f, n, limits);
    v.dim_f = sd.dim;
    v.used_groebner = v.used_groebner || sd.used_groebner;
    v.stable_refined = true;
    v.cls = sd.dim == 0 ? StabilityClass::Stable : StabilityClass::PolystableNotStable;
  } catch (const InconclusiveError& e) {
    v.cls = StabilityClass::PolystableNotStable;
    v.stable_refined = false;
    if (!v.note.empty()) v.note += "; ";
    v.note += std::string("stable refinement inconclusive: ") + e.what();
  }
}

}  // namespace classify_detail

struct CanonicalLimits {
  bool at_zero_exists = false;
  bool at_infinity_exists = false;
  Polynomial at_zero;
  Polynomial at_infinity;
};

// lambda_can(t) f = sum_i t^{ni-d} l^i p_i: the limits keep the zero-weight
// part and exist when no negative (resp. positive) weight carries a term.
inline CanonicalLimits canonical_psg_limits(const Polynomial& f, int n) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (!f.is_homogeneous()) throw std::invalid_argument("need a homogeneous form");
  LBDecomposition lb = lb_decompose(f, n);
  int d = f.degree();
  CanonicalLimits out;
  out.at_zero = Polynomial(n, f.proto());
  out.at_infinity = Polynomial(n, f.proto());
  out.at_zero_exists = true;
  out.at_infinity_exists = true;
  for (int i = 0; i < static_cast<int>(lb.components.size()); ++i) {
    if (lb.components[i].is_zero()) continue;
    long w = static_cast<long>(n) * i - d;
    if (w < 0) out.at_zero_exists = false;
    if (w > 0) out.at_infinity_exists = false;
    if (w == 0) {
      Polynomial t = lb.term_in_x(i);
      out.at_zero += t;
      out.at_infinity += t;
    }
  }
  if (!out.at_zero_exists) out.at_zero = Polynomial(n, f.proto());
  if (!out.at_infinity_exists) out.at_infinity = Polynomial(n, f.proto());
  return out;
}

// Full symmetric classifier, both characteristic branches.
inline StabilityVerdict classify_symmetric(const Polynomial& f, int n, const GroebnerLimits& limits = {}) {
  const FieldSpec field = f.proto().field();
  StabilityVerdict v;
  if (f.nvars() != n) throw std::invalid_argument("variable count mismatch");
  if (f.is_zero()) {
    v.cls = StabilityClass::Unstable;
    v.branch = "zero-input";
    v.note = "zero vector: polystability requires a nonzero vector";
    return v;
  }
  if (!f.is_homogeneous()) throw std::invalid_argument("need a homogeneous form");
  if (!classify_detail::is_symmetric(f, n)) throw std::invalid_argument("polynomial is not symmetric");
  if (n == 1) {
    v.cls = StabilityClass::PolystableNotStable;
    v.stable_refined = false;
    v.branch = "n-equals-1";
    v.note = "SL_1 is trivial; every nonzero form is polystable";
    return v;
  }

  int d = f.degree();
  bool p_divides_n = !field.is_rational() && n % static_cast<long>(field.characteristic()) == 0;

  if (!p_divides_n) {
    v.branch = "p-not-dividing-n";
    LBDecomposition lb = lb_decompose(f, n);
    Polynomial g = f.substitute_linear(lb.Cinv);
    int lo = lb.min_index();
    int hi = lb.max_index();
    int floor_dn = d / n;
    int ceil_dn = (d + n - 1) / n;

    bool cond_low = lo >= floor_dn + 1;  // l^{floor(d/n)+1} | f
    bool cond_high = hi <= ceil_dn - 1;  // f = sum_{i <= ceil(d/n)-1} l^i p_i
    if (cond_low || cond_high) {
      v.cls = StabilityClass::Unstable;
      OnePSG psg;
      psg.basis_names = classify_detail::lb_names(n);
      psg.basis_matrix = classify_detail::lb_matrix_rows(n);
      psg.exponents.assign(n, -1);
      psg.exponents[0] = n - 1;
      psg.direction = cond_low ? "t->0" : "t->infinity";
      classify_detail::finish_unstable_certificate(psg, g);
      v.destabilizer = psg;
      v.note = cond_low ? "l^(floor(d/n)+1) divides f" : "f lies in components below ceil(d/n)";
      return v;
    }
    v.ruled_out.push_back("l^(floor(d/n)+1) | f");
    v.ruled_out.push_back("f = sum_{i <= ceil(d/n)-1} l^i p_i");

    if (d % n != 0) {
      v.cls = StabilityClass::PolystableNotStable;
      v.polystable_without_dims = true;
      v.ruled_out.push_back("n | d");
      classify_detail::refine_stable(v, f, n, limits);
      return v;
    }
    int k = d / n;
    bool div_k = lo >= k;   // l^{d/n} | f
    bool high_k = hi <= k;  // f = sum_{i <= d/n} l^i p_i
    if (!div_k && !high_k) {
      v.cls = StabilityClass::PolystableNotStable;
      v.polystable_without_dims = true;
      v.ruled_out.push_back("l^{d/n} | f");
      v.ruled_out.push_back("f = sum_{i <= d/n} l^i p_i");
      classify_detail::refine_stable(v, f, n, limits);
      return v;
    }
    // boundary candidate f' = l^{d/n} p_{d/n}
    Polynomial fprime = lb.term_in_x(k);
    StabilizerDim df = stabilizer_dim(f, n, limits);
    StabilizerDim dw = stabilizer_dim(fprime, n, limits);
    v.dim_f = df.dim;
    v.dim_w = dw.dim;
    v.used_groebner = df.used_groebner || dw.used_groebner;
    if (df.dim == dw.dim) {
      v.cls = df.dim == 0 ? StabilityClass::Stable : StabilityClass::PolystableNotStable;
      v.stable_refined = true;
      v.note = "canonical limit stays in the orbit (equal stabilizer dimensions)";
    } else {
      v.cls = StabilityClass::SemistableNotPolystable;
      v.boundary_point = fprime;
      v.note = "canonical limit leaves the orbit";
    }
    return v;
  }

  // p | n: reduce to the rank-2 torus on the basis (l, b_1..b_{n-2}, c = x_n)
  v.branch = "p-dividing-n";
  ScalarMatrix c2(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (int j = 0; j < n; ++j) c2[0][j] = Scalar::one(field);
  for (int i = 1; i <= n - 2; ++i) {
    c2[i][i - 1] = Scalar::one(field);
    c2[i][i] = -Scalar::one(field);
  }
  c2[n - 1][n - 1] = Scalar::one(field);
  auto inv = matrix_inverse(c2);
  if (!inv) throw std::logic_error("(l, b, c) basis unexpectedly singular");
  Polynomial g = f.substitute_linear(*inv);

  auto t2_weight = [&](const Monomial& m) {
    std::vector<long> w(2, 0);
    w[0] = m[0] - m[n - 1];
    long betas = 0;
    for (int i = 1; i <= n - 2; ++i) betas += m[i];
    w[1] = betas - static_cast<long>(n - 2) * m[n - 1];
    return w;
  };

  std::vector<Monomial> monos;
  std::vector<std::vector<long>> weights;
  for (const auto& [m, c] : g.terms()) {
    monos.push_back(m);
    weights.push_back(t2_weight(m));
  }
  std::set<int> essential = essential_support(PointSet(weights, 2));

  if (essential.empty()) {
    // T_2-unstable: find a separating functional u with <u, w> >= 1 on the support
    LinearProgram lp;
    lp.nvars = 3;  // u1, u2, t
    lp.objective = {0, 0, 1};
    lp.nonneg = {false, false, true};
    for (const auto& w : weights)
      lp.constraints.push_back({{mpq_class(w[0]), mpq_class(w[1]), -1}, Rel::Ge, 0});
    lp.constraints.push_back({{0, 0, 1}, Rel::Le, 1});
    LPResult res = lp_solve(lp);
    if (res.status != LPStatus::Optimal || res.objective <= 0)
      throw std::logic_error("empty essential support but no separating functional");
    mpz_class den = 1;
    for (int j = 0; j < 2; ++j) den = den * res.witness[j].get_den() / gcd(den, mpz_class(res.witness[j].get_den()));
    long u1 = mpz_class(res.witness[0].get_num() * (den / res.witness[0].get_den())).get_si();
    long u2 = mpz_class(res.witness[1].get_num() * (den / res.witness[1].get_den())).get_si();
    v.cls = StabilityClass::Unstable;
    OnePSG psg;
    psg.basis_names = classify_detail::t2_names(n);
    psg.basis_matrix = classify_detail::t2_matrix_rows(n);
    psg.exponents.assign(n, u2);
    psg.exponents[0] = u1;
    psg.exponents[n - 1] = -u1 - static_cast<long>(n - 2) * u2;
    psg.direction = "t->0";
    classify_detail::finish_unstable_certificate(psg, g);
    v.destabilizer = psg;
    v.note = "ess(f) = 0 under the rank-2 torus";
    return v;
  }

  Polynomial wg(n, Scalar::zero(field));
  {
    int idx = 0;
    for (const auto& [m, c] : g.terms()) {
      if (essential.count(idx)) wg.add_term(m, c);
      ++idx;
    }
  }
  Polynomial w = wg.substitute_linear(c2);
  StabilizerDim df = stabilizer_dim(f, n, limits);
  StabilizerDim dw = f == w ? df : stabilizer_dim(w, n, limits);
  v.dim_f = df.dim;
  v.dim_w = dw.dim;
  v.used_groebner = df.used_groebner || dw.used_groebner;
  if (df.dim == dw.dim) {
    v.cls = df.dim == 0 ? StabilityClass::Stable : StabilityClass::PolystableNotStable;
    v.stable_refined = true;
    v.note = "ess(f) stays in the orbit (equal stabilizer dimensions)";
  } else {
    v.cls = StabilityClass::SemistableNotPolystable;
    v.boundary_point = w;
    v.note = "ess(f) leaves the orbit";
  }
  return v;
}

// Entirely even support: the torus verdict upgrades to the SL_n verdict.
inline StabilityVerdict classify_entirely_even(const Polynomial& f, int n, int d,
                                               const GroebnerLimits& limits = {}) {
  const FieldSpec field = f.proto().field();
  if (field.characteristic() == 2) throw std::invalid_argument("entirely-even classifier needs characteristic != 2");
  if (f.is_zero()) {
    StabilityVerdict v;
    v.cls = StabilityClass::Unstable;
    v.branch = "zero-input";
    v.note = "zero vector";
    return v;
  }
  for (const auto& [m, c] : f.terms())
    for (int e : m)
      if (e % 2 != 0) throw std::invalid_argument("polynomial is not entirely even");
  StabilityVerdict v;
  v.branch = "entirely-even";
  StabilityClass torus = newton_classify(f, d, n);
  switch (torus) {
    case StabilityClass::Unstable:
      v.cls = StabilityClass::Unstable;
      v.note = "barycenter outside the Newton polytope";
      return v;
    case StabilityClass::SemistableNotPolystable:
      v.cls = StabilityClass::SemistableNotPolystable;
      v.note = "barycenter on the Newton polytope boundary";
      return v;
    default:
      v.cls = StabilityClass::PolystableNotStable;
      v.polystable_without_dims = true;
      v.note = "barycenter in the relative interior of the Newton polytope";
      classify_detail::refine_stable(v, f, n, limits);
      return v;
  }
}

struct FamilyResult {
  StabilityVerdict verdict;
  std::string criterion;
};

namespace classify_detail {

// run-length multiplicities: lambda = k_1^{a_1} ... k_l^{a_l}
inline std::vector<std::pair<int, int>> multiplicities(const Partition& lambda) {
  std::vector<std::pair<int, int>> out;
  for (int part : lambda.parts) {
    if (!out.empty() && out.back().first == part) ++out.back().second;
    else out.emplace_back(part, 1);
  }
  return out;
}

inline bool is_prime_power_or_one(long k, long p) {
  while (k % p == 0) k /= p;
  return k == 1;
}

}  // namespace classify_detail

// Family shortcuts; anything not covered falls back to the general algorithm.
inline FamilyResult classify_family(BasisKind kind, const Partition& lambda, int n, const FieldSpec& field,
                                    const GroebnerLimits& limits = {}) {
  if (kind == BasisKind::M) throw std::invalid_argument("no family criterion for the monomial basis");
  int d = lambda.size();
  auto fallback = [&](const std::string& why) {
    FamilyResult r;
    r.verdict = classify_symmetric(basis_poly(kind, lambda, n, field), n, limits);
    r.criterion = "fallback-general (" + why + ")";
    return r;
  };
  if (d >= n) return fallback("d >= n");
  long p = static_cast<long>(field.characteristic());
  if (p != 0 && n % p == 0) return fallback("p divides n");

  FamilyResult r;
  bool all_ge_2 = lambda.length() == 0 || lambda.parts.back() >= 2;

  if (kind == BasisKind::S) {
    if (p != 0) return fallback("Schur shortcut is characteristic 0 only");
    if (d <= 1) {
      r.verdict.cls = StabilityClass::Unstable;
      r.verdict.branch = "family-schur";
      r.verdict.note = "s_(1) = l is destabilized by the canonical subgroup";
      r.criterion = "schur-degree-1";
      return r;
    }
    r.verdict.cls = StabilityClass::PolystableNotStable;
    r.verdict.branch = "family-schur";
    r.verdict.note = "l does not divide s_lambda and D s_lambda != 0";
    r.criterion = "schur-char0";
    classify_detail::refine_stable(r.verdict, basis_poly(kind, lambda, n, field), n, limits);
    return r;
  }

  auto mults = classify_detail::multiplicities(lambda);
  const char* kind_name = kind == BasisKind::E ? "e" : kind == BasisKind::H ? "h" : "p";

  if (p == 0) {
    r.verdict.branch = std::string("family-") + kind_name;
    if (all_ge_2) {
      r.verdict.cls = StabilityClass::PolystableNotStable;
      r.verdict.note = "all parts >= 2: l does not divide f and Df != 0";
      r.criterion = "char0-all-parts-ge-2";
      classify_detail::refine_stable(r.verdict, basis_poly(kind, lambda, n, field), n, limits);
    } else {
      r.verdict.cls = StabilityClass::Unstable;
      r.verdict.note = "a part equals 1, so l divides f";
      r.criterion = "char0-part-one";
    }
    return r;
  }

  // characteristic p, p not dividing n, d < n: sufficient polystability tests
  bool covered = false;
  if (kind == BasisKind::E) {
    if (all_ge_2)
      for (auto [k, a] : mults)
        if ((static_cast<long>(n) + 1 - k) * a % p != 0) covered = true;
    r.criterion = "charp-elementary";
  } else if (kind == BasisKind::H) {
    if (all_ge_2)
      for (auto [k, a] : mults)
        if ((static_cast<long>(n) + k - 1) * a % p != 0) covered = true;
    r.criterion = "charp-homogeneous";
  } else {
    bool no_prime_power = true;
    for (auto [k, a] : mults)
      if (classify_detail::is_prime_power_or_one(k, p)) no_prime_power = false;
    if (no_prime_power)
      for (auto [k, a] : mults)
        if (static_cast<long>(a) * k % p != 0) covered = true;
    r.criterion = "charp-power-sum";
  }
  if (!covered) return fallback("sufficient condition not met");
  r.verdict.cls = StabilityClass::PolystableNotStable;
  r.verdict.stable_refined = false;  // refinement would need a large Groebner run
  r.verdict.branch = std::string("family-") + kind_name;
  r.verdict.note = "sufficient condition for polystability holds";
  return r;
}

}  // namespace polystab
