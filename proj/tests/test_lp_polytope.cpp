#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polystab/polytope.hpp"

using namespace polystab;

TEST_CASE("simplex solves small programs exactly") {
  // max x + y s.t. x <= 2, y <= 3
  LinearProgram lp;
  lp.nvars = 2;
  lp.objective = {1, 1};
  lp.constraints.push_back({{1, 0}, Rel::Le, 2});
  lp.constraints.push_back({{0, 1}, Rel::Le, 3});
  auto r = lp_solve(lp);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.objective == 5);
  CHECK(r.witness[0] == 2);
  CHECK(r.witness[1] == 3);
}

TEST_CASE("simplex detects infeasibility and unboundedness") {
  {
    LinearProgram lp;
    lp.nvars = 1;
    lp.objective = {0};
    lp.constraints.push_back({{1}, Rel::Le, -1});  // x <= -1 with x >= 0
    CHECK(lp_solve(lp).status == LPStatus::Infeasible);
  }
  {
    LinearProgram lp;
    lp.nvars = 1;
    lp.objective = {1};
    lp.constraints.push_back({{1}, Rel::Ge, 0});
    CHECK(lp_solve(lp).status == LPStatus::Unbounded);
  }
  {
    // infeasible equality system: x + y = 1, x + y = 2
    LinearProgram lp;
    lp.nvars = 2;
    lp.objective = {0, 0};
    lp.constraints.push_back({{1, 1}, Rel::Eq, 1});
    lp.constraints.push_back({{1, 1}, Rel::Eq, 2});
    CHECK(lp_solve(lp).status == LPStatus::Infeasible);
  }
}

TEST_CASE("free variables via sign split") {
  // max -x s.t. x >= -3, x free: optimum 3 at x = -3
  LinearProgram lp;
  lp.nvars = 1;
  lp.objective = {-1};
  lp.nonneg = {false};
  lp.constraints.push_back({{1}, Rel::Ge, -3});
  auto r = lp_solve(lp);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.objective == 3);
  CHECK(r.witness[0] == -3);
}

TEST_CASE("convex membership and relative interior vs subset-enumeration oracle") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> dim_d(1, 3), npts_d(1, 6), coord(-4, 4);
  int relint_hits = 0, boundary_hits = 0, outside_hits = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int m = dim_d(rng);
    int npts = npts_d(rng);
    std::vector<std::vector<long>> pts(npts, std::vector<long>(m));
    for (auto& p : pts)
      for (auto& x : p) x = coord(rng);
    std::vector<long> q(m);
    for (auto& x : q) x = coord(rng);
    std::vector<mpq_class> qq(q.begin(), q.end());

    PointSet s(pts, m);
    bool eng_in = contains(s, qq);
    bool eng_ri = in_relative_interior(s, qq);
    CHECK(eng_in == oracle::conv_contains(pts, qq));
    CHECK(eng_ri == oracle::conv_relint(pts, qq));
    if (eng_ri) ++relint_hits;
    else if (eng_in) ++boundary_hits;
    else ++outside_hits;
    if (eng_ri) CHECK(eng_in);  // relint is inside
  }
  // the random stream must exercise all three outcomes
  CHECK(relint_hits > 0);
  CHECK(boundary_hits > 0);
  CHECK(outside_hits > 0);
}

TEST_CASE("essential support vs per-index cone oracle") {
  std::mt19937 rng(202);
  std::uniform_int_distribution<int> dim_d(1, 3), npts_d(1, 6), coord(-3, 3);
  for (int trial = 0; trial < 120; ++trial) {
    int m = dim_d(rng);
    int npts = npts_d(rng);
    std::vector<std::vector<long>> pts(npts, std::vector<long>(m));
    for (auto& p : pts)
      for (auto& x : p) x = coord(rng);
    auto ess = essential_support(PointSet(pts, m));
    for (int i = 0; i < npts; ++i) CHECK(ess.count(i) == (oracle::essential_index(pts, i) ? 1u : 0u));

    // idempotence: essential support of the essential subset is everything
    std::vector<std::vector<long>> sub;
    std::vector<int> back;
    for (int i : ess) {
      sub.push_back(pts[i]);
      back.push_back(i);
    }
    if (!sub.empty()) {
      auto ess2 = essential_support(PointSet(sub, m));
      CHECK(ess2.size() == sub.size());
    }
  }
}

TEST_CASE("essential support under global negation") {
  // negating every weight preserves essentiality index-wise
  std::mt19937 rng(303);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<long>> pts(5, std::vector<long>(2));
    for (auto& p : pts)
      for (auto& x : p) x = coord(rng);
    auto neg = pts;
    for (auto& p : neg)
      for (auto& x : p) x = -x;
    CHECK(essential_support(PointSet(pts, 2)) == essential_support(PointSet(neg, 2)));
  }
}
