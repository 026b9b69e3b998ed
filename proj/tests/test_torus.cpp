#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polystab/parser.hpp"
#include "polystab/torus.hpp"

using namespace polystab;

namespace {

WeightedVector make_wv(const std::vector<std::vector<long>>& weights) {
  WeightedVector v;
  v.system = WeightSystem(weights, weights.empty() ? 0 : static_cast<int>(weights[0].size()));
  for (std::size_t i = 0; i < weights.size(); ++i) v.support.insert(static_cast<int>(i));
  return v;
}

}  // namespace

TEST_CASE("classification basics") {
  CHECK(torus_classify(make_wv({{1, -1}, {-1, 1}})) == StabilityClass::PolystableNotStable);
  CHECK(torus_classify(make_wv({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})) == StabilityClass::Stable);
  CHECK(torus_classify(make_wv({{1, 0}, {2, 1}})) == StabilityClass::Unstable);
  CHECK(torus_classify(make_wv({{0, 0}, {1, 0}})) == StabilityClass::SemistableNotPolystable);
  CHECK(torus_classify(make_wv({{0, 0}})) == StabilityClass::PolystableNotStable);
}

TEST_CASE("semistability matches bounded invariant-monomial search") {
  // with entries in [-2,2] and rank <= 2, a vanishing nonnegative integer
  // combination exists at total degree <= 24 whenever one exists at all
  std::mt19937 rng(404);
  std::uniform_int_distribution<int> coord(-2, 2), npts_d(1, 5), rank_d(1, 2);
  for (int trial = 0; trial < 50; ++trial) {
    int rank = rank_d(rng);
    int npts = npts_d(rng);
    std::vector<std::vector<long>> w(npts, std::vector<long>(rank));
    for (auto& p : w)
      for (auto& x : p) x = coord(rng);
    WeightedVector v = make_wv(w);
    bool semistable = torus_classify(v) != StabilityClass::Unstable;
    std::vector<int> idx(v.support.begin(), v.support.end());
    auto monos = invariant_monomials(v.system, idx, 24);
    bool found = false;
    for (const auto& m : monos) {
      int total = 0;
      for (int e : m) total += e;
      if (total > 0) found = true;
    }
    CHECK(semistable == found);
  }
}

TEST_CASE("essential subvector is polystable or empty") {
  std::mt19937 rng(505);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::vector<long>> w(5, std::vector<long>(2));
    for (auto& p : w)
      for (auto& x : p) x = coord(rng);
    WeightedVector v = make_wv(w);
    auto ess = essential_indices(v);
    if (ess.empty()) {
      CHECK(torus_classify(v) == StabilityClass::Unstable);
      continue;
    }
    WeightedVector ev;
    ev.system = v.system;
    ev.support = ess;
    auto cls = torus_classify(ev);
    CHECK((cls == StabilityClass::PolystableNotStable || cls == StabilityClass::Stable));
    // idempotence
    CHECK(essential_indices(ev) == ess);
  }
}

TEST_CASE("newton classification on explicit forms") {
  FieldSpec q;
  // x^2 + y^2 (n=2, d=2): weights at barycenter, torus-polystable but the
  // affine hull is a segment spanning the rank-1 trace-zero lattice: stable
  CHECK(newton_classify(parse("x1^2 + x2^2", 2, q), 2, 2) == StabilityClass::Stable);
  // x^2: single vertex away from 0
  CHECK(newton_classify(parse("x1^2", 2, q), 2, 2) == StabilityClass::Unstable);
  // x^2 y^2: barycenter itself, zero-dimensional polytope
  CHECK(newton_classify(parse("x1^2x2^2", 2, q), 4, 2) == StabilityClass::PolystableNotStable);
  // x^4 + x^2 y^2: barycenter on the boundary of a segment
  CHECK(newton_classify(parse("x1^4 + x1^2x2^2", 2, q), 4, 2) == StabilityClass::SemistableNotPolystable);
}

TEST_CASE("classification invariant under coordinate permutation and negation") {
  std::mt19937 rng(606);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<long>> w(4, std::vector<long>(2));
    for (auto& p : w)
      for (auto& x : p) x = coord(rng);
    auto cls = torus_classify(make_wv(w));
    auto swapped = w;
    for (auto& p : swapped) std::swap(p[0], p[1]);
    CHECK(torus_classify(make_wv(swapped)) == cls);
    auto neg = w;
    for (auto& p : neg)
      for (auto& x : p) x = -x;
    CHECK(torus_classify(make_wv(neg)) == cls);
  }
}
