#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "polystab/lp.hpp"

namespace polystab {

// Finite set of integer points in Z^m (weight vectors / exponent vectors).
struct PointSet {
  std::vector<std::vector<long>> points;
  int dim = 0;

  PointSet() = default;
  PointSet(std::vector<std::vector<long>> pts, int m) : points(std::move(pts)), dim(m) {
    for (const auto& p : points)
      if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("point dimension mismatch");
  }
};

namespace polytope_detail {

inline void check_query(const PointSet& s, const std::vector<mpq_class>& q) {
  if (s.points.empty()) throw std::invalid_argument("empty point set");
  if (static_cast<int>(q.size()) != s.dim) throw std::invalid_argument("query dimension mismatch");
}

}  // namespace polytope_detail

// q in conv(S): feasibility of sum c_i s_i = q, sum c_i = 1, c >= 0.
inline bool contains(const PointSet& s, const std::vector<mpq_class>& q) {
  polytope_detail::check_query(s, q);
  int k = static_cast<int>(s.points.size());
  LinearProgram lp;
  lp.nvars = k;
  lp.objective.assign(k, 0);
  for (int r = 0; r < s.dim; ++r) {
    LPConstraint ct;
    ct.coeffs.resize(k);
    for (int i = 0; i < k; ++i) ct.coeffs[i] = s.points[i][r];
    ct.rel = Rel::Eq;
    ct.rhs = q[r];
    lp.constraints.push_back(std::move(ct));
  }
  LPConstraint sum;
  sum.coeffs.assign(k, 1);
  sum.rel = Rel::Eq;
  sum.rhs = 1;
  lp.constraints.push_back(std::move(sum));
  return lp_solve(lp).status == LPStatus::Optimal;
}

// q in relint conv(S): maximize t with sum c_i s_i = q, sum c_i = 1,
// c_i >= t; relint membership is optimum > 0.
inline bool in_relative_interior(const PointSet& s, const std::vector<mpq_class>& q) {
  polytope_detail::check_query(s, q);
  int k = static_cast<int>(s.points.size());
  LinearProgram lp;
  lp.nvars = k + 1;  // c_0..c_{k-1}, t
  lp.objective.assign(k + 1, 0);
  lp.objective[k] = 1;
  for (int r = 0; r < s.dim; ++r) {
    LPConstraint ct;
    ct.coeffs.assign(k + 1, 0);
    for (int i = 0; i < k; ++i) ct.coeffs[i] = s.points[i][r];
    ct.rel = Rel::Eq;
    ct.rhs = q[r];
    lp.constraints.push_back(std::move(ct));
  }
  LPConstraint sum;
  sum.coeffs.assign(k + 1, 0);
  for (int i = 0; i < k; ++i) sum.coeffs[i] = 1;
  sum.rel = Rel::Eq;
  sum.rhs = 1;
  lp.constraints.push_back(std::move(sum));
  for (int i = 0; i < k; ++i) {
    LPConstraint ge;
    ge.coeffs.assign(k + 1, 0);
    ge.coeffs[i] = 1;
    ge.coeffs[k] = -1;
    ge.rel = Rel::Ge;
    ge.rhs = 0;
    lp.constraints.push_back(std::move(ge));
  }
  LPResult r = lp_solve(lp);
  return r.status == LPStatus::Optimal && r.objective > 0;
}

// Indices i with a non-negative combination sum c_j p_j = 0, c_i >= 1.
// (The definition's c_i > 0 rescales to c_i >= 1 since the cone is
// scale-invariant.)
inline std::set<int> essential_support(const PointSet& s) {
  if (s.points.empty()) throw std::invalid_argument("empty point set");
  int k = static_cast<int>(s.points.size());
  std::set<int> out;
  for (int i = 0; i < k; ++i) {
    LinearProgram lp;
    lp.nvars = k;
    lp.objective.assign(k, 0);
    for (int r = 0; r < s.dim; ++r) {
      LPConstraint ct;
      ct.coeffs.resize(k);
      for (int j = 0; j < k; ++j) ct.coeffs[j] = s.points[j][r];
      ct.rel = Rel::Eq;
      ct.rhs = 0;
      lp.constraints.push_back(std::move(ct));
    }
    LPConstraint lb;
    lb.coeffs.assign(k, 0);
    lb.coeffs[i] = 1;
    lb.rel = Rel::Ge;
    lb.rhs = 1;
    lp.constraints.push_back(std::move(lb));
    if (lp_solve(lp).status == LPStatus::Optimal) out.insert(i);
  }
  return out;
}

}  // namespace polystab
