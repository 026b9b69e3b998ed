#include <doctest.h>

#include <random>

#include "polystab/classify.hpp"
#include "polystab/parser.hpp"
#include "polystab/symfun.hpp"

using namespace polystab;

namespace {

// check an unstable certificate: exponents land in SL (sum 0) and every
// supported weight is strictly on the destabilizing side
void check_destabilizer(const StabilityVerdict& v) {
  REQUIRE(v.cls == StabilityClass::Unstable);
  REQUIRE(v.destabilizer.has_value());
  const OnePSG& psg = *v.destabilizer;
  long total = 0;
  for (long e : psg.exponents) total += e;
  CHECK(total == 0);
  REQUIRE(psg.weights.size() == psg.support_in_basis.size());
  REQUIRE(!psg.weights.empty());
  for (std::size_t i = 0; i < psg.weights.size(); ++i) {
    long w = 0;
    const Monomial& m = psg.support_in_basis[i];
    for (std::size_t j = 0; j < psg.exponents.size(); ++j) w += psg.exponents[j] * m[j];
    CHECK(w == psg.weights[i]);
    if (psg.direction == "t->0") CHECK(w > 0);
    else CHECK(w < 0);
  }
}

Polynomial symmetrized_random(std::mt19937& rng, int n, int d, const FieldSpec& field) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Polynomial f(n, Scalar::zero(field));
  // sum a few random monomial-symmetric functions of total degree d
  for (const Partition& lambda : partitions_of(d)) {
    if (lambda.length() > n) continue;
    int c = coef(rng);
    if (c == 0) continue;
    f += symfun::monomial_symmetric(lambda, n, field) * Scalar(field, c);
  }
  return f;
}

}  // namespace

TEST_CASE("l,b decomposition round trips") {
  std::mt19937 rng(1010);
  for (const FieldSpec& field : {FieldSpec(), FieldSpec(7)}) {
    for (int trial = 0; trial < 15; ++trial) {
      int n = 2 + trial % 3;
      int d = 2 + trial % 4;
      Polynomial f = symmetrized_random(rng, n, d, field);
      if (f.is_zero()) continue;
      LBDecomposition lb = lb_decompose(f, n);
      CHECK(lb.reconstruct() == f);
      Polynomial sum(n, Scalar::zero(field));
      for (int i = 0; i <= lb.max_index(); ++i)
        if (lb.component_nonzero(i)) sum += lb.term_in_x(i);
      CHECK(sum == f);
      // the top component index is the largest power of l visible to D:
      // over Q, (D^k f)(x) != 0 for k <= hi detects l^hi | some term
      if (field.is_rational()) {
        int hi = lb.max_index();
        Polynomial g = f;
        bool ok = true;
        for (int k = 0; k < hi; ++k) {
          g = D_operator(g);
          ok = ok && !g.is_zero();
        }
        CHECK(ok);
      }
    }
  }
  CHECK_THROWS_AS(lb_decompose(parse("x1x2", 2, FieldSpec(2)), 2), std::invalid_argument);
}

TEST_CASE("product of variables across characteristics") {
  // x1 x2 x3 = e_3: diagonal stabilizer of dimension 2, never stable
  for (const FieldSpec& field : {FieldSpec(), FieldSpec(5), FieldSpec(7)}) {
    auto v = classify_symmetric(symfun::elementary(3, 3, field), 3);
    CHECK(v.cls == StabilityClass::PolystableNotStable);
    if (v.stable_refined) {
      CHECK(v.dim_f == 2);
    }
  }
  // characteristic 3 divides n = 3: separate branch, same answer
  auto v3 = classify_symmetric(symfun::elementary(3, 3, FieldSpec(3)), 3);
  CHECK(v3.cls == StabilityClass::PolystableNotStable);
  CHECK(v3.branch == "p-dividing-n");
}

TEST_CASE("h_3 in three variables across characteristics") {
  Partition h3{3};
  struct Row {
    unsigned long p;
    StabilityClass cls;
  };
  for (const Row& row : {Row{0, StabilityClass::Stable}, Row{2, StabilityClass::SemistableNotPolystable},
                         Row{3, StabilityClass::Stable}, Row{5, StabilityClass::Unstable},
                         Row{7, StabilityClass::Stable}, Row{11, StabilityClass::Stable},
                         Row{13, StabilityClass::Stable}}) {
    FieldSpec field = row.p == 0 ? FieldSpec() : FieldSpec(row.p);
    Polynomial f = symfun::complete_homogeneous(3, 3, field);
    auto v = classify_symmetric(f, 3);
    CHECK(v.cls == row.cls);
    if (row.cls == StabilityClass::Stable) {
      CHECK(v.stable_refined);
      CHECK(v.dim_f == 0);
    }
    if (row.cls == StabilityClass::Unstable) {
      check_destabilizer(v);
      CHECK(v.destabilizer->direction == "t->infinity");
    }
    if (row.cls == StabilityClass::SemistableNotPolystable) {
      REQUIRE(v.boundary_point.has_value());
      // boundary point is a nonzero limit outside the orbit: dims differ
      CHECK(v.dim_f != v.dim_w);
      CHECK_FALSE(v.boundary_point->is_zero());
    }
  }
}

TEST_CASE("l-divisible forms are unstable with a t->0 certificate") {
  FieldSpec q;
  Polynomial f = parse("(x1 + x2 + x3)^3", 3, q);
  auto v = classify_symmetric(f, 3);
  CHECK(v.cls == StabilityClass::Unstable);
  check_destabilizer(v);
  CHECK(v.destabilizer->direction == "t->0");
  // degree-1 power sum itself
  auto vl = classify_symmetric(symfun::power_sum(1, 4, q), 4);
  CHECK(vl.cls == StabilityClass::Unstable);
  check_destabilizer(vl);
}

TEST_CASE("polystable shortcut when n does not divide d") {
  FieldSpec q;
  // e_2 in 3 variables: d = 2, n = 3
  auto v = classify_symmetric(symfun::elementary(2, 3, q), 3);
  CHECK(v.cls == StabilityClass::PolystableNotStable);
  CHECK(v.polystable_without_dims);
  CHECK(v.stable_refined);  // refinement still ran (char 0 Lie algebra)
}

TEST_CASE("entirely-even classifier agrees with the symmetric one") {
  for (const FieldSpec& field : {FieldSpec(), FieldSpec(7)}) {
    // p_2 in 3 variables is symmetric with entirely even support
    Polynomial f = symfun::power_sum(2, 3, field);
    auto a = classify_symmetric(f, 3);
    auto b = classify_entirely_even(f, 3, 2);
    CHECK(a.cls == b.cls);
    // x1^2 x2^2 in 2 variables
    Polynomial g = parse("x1^2x2^2", 2, field);
    CHECK(classify_symmetric(g, 2).cls == classify_entirely_even(g, 2, 4).cls);
  }
  CHECK_THROWS_AS(classify_entirely_even(parse("x1x2", 2, FieldSpec()), 2, 2), std::invalid_argument);
}

TEST_CASE("characteristic 2 with n = 2: ess stays in the orbit") {
  FieldSpec f2(2);
  auto v = classify_symmetric(parse("x1x2", 2, f2), 2);
  CHECK(v.cls == StabilityClass::PolystableNotStable);
  CHECK(v.branch == "p-dividing-n");
  CHECK(v.dim_f == 1);
  CHECK(v.dim_w == 1);
}

TEST_CASE("degenerate inputs") {
  FieldSpec q;
  auto vz = classify_symmetric(Polynomial(3, Scalar::zero(q)), 3);
  CHECK(vz.cls == StabilityClass::Unstable);
  CHECK(vz.branch == "zero-input");

  auto v1 = classify_symmetric(parse("x1^4", 1, q), 1);
  CHECK(v1.cls == StabilityClass::PolystableNotStable);
  CHECK_FALSE(v1.stable_refined);
  CHECK(verdict_class_string(v1) == "polystable");

  CHECK_THROWS_AS(classify_symmetric(parse("x1^2 + x2", 2, q), 2), std::invalid_argument);
  CHECK_THROWS_AS(classify_symmetric(parse("x1^2 + x1x2", 2, q), 2), std::invalid_argument);
}

TEST_CASE("canonical subgroup limits") {
  FieldSpec q;
  // x1^2 - x2^2 = l * b_1 in 2 variables: the single component has weight 0,
  // both limits exist and equal the form itself
  Polynomial f = parse("x1^2 - x2^2", 2, q);
  auto lim = canonical_psg_limits(f, 2);
  CHECK(lim.at_zero_exists);
  CHECK(lim.at_infinity_exists);
  CHECK(lim.at_zero == f);
  CHECK(lim.at_infinity == f);
  // e_3: components spread across negative and positive weights
  auto lim2 = canonical_psg_limits(symfun::elementary(3, 3, q), 3);
  CHECK_FALSE(lim2.at_zero_exists);
  CHECK_FALSE(lim2.at_infinity_exists);
}

TEST_CASE("family criteria agree with the general classifier") {
  FieldSpec q;
  // all parts >= 2: polystable
  auto e22 = classify_family(BasisKind::E, Partition{2, 2}, 6, q);
  CHECK(e22.verdict.cls == StabilityClass::PolystableNotStable);
  CHECK(classify_symmetric(basis_poly(BasisKind::E, Partition{2, 2}, 6, q), 6).cls ==
        StabilityClass::PolystableNotStable);
  // a part equals 1: unstable
  auto p31 = classify_family(BasisKind::P, Partition{3, 1}, 6, q);
  CHECK(p31.verdict.cls == StabilityClass::Unstable);
  CHECK(classify_symmetric(basis_poly(BasisKind::P, Partition{3, 1}, 6, q), 6).cls ==
        StabilityClass::Unstable);
  // Schur functions of degree >= 2 are polystable in characteristic 0
  auto s21 = classify_family(BasisKind::S, Partition{2, 1}, 4, q);
  CHECK((s21.verdict.cls == StabilityClass::PolystableNotStable || s21.verdict.cls == StabilityClass::Stable));
  auto s1 = classify_family(BasisKind::S, Partition{1}, 3, q);
  CHECK(s1.verdict.cls == StabilityClass::Unstable);
  // characteristic p shortcut: h_{3,2} over F_7 with n = 6
  FieldSpec f7(7);
  auto h32 = classify_family(BasisKind::H, Partition{3, 2}, 6, f7);
  CHECK(h32.verdict.cls == StabilityClass::PolystableNotStable);
  CHECK(classify_symmetric(basis_poly(BasisKind::H, Partition{3, 2}, 6, f7), 6).cls ==
        StabilityClass::PolystableNotStable);
  CHECK_THROWS_AS(classify_family(BasisKind::M, Partition{2}, 3, q), std::invalid_argument);
}
