#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "polystab/polynomial.hpp"
#include "polystab/polytope.hpp"

namespace polystab {

enum class StabilityClass { Unstable, SemistableNotPolystable, PolystableNotStable, Stable };

inline const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Unstable: return "unstable";
    case StabilityClass::SemistableNotPolystable: return "semistable-not-polystable";
    case StabilityClass::PolystableNotStable: return "polystable-not-stable";
    case StabilityClass::Stable: return "stable";
  }
  return "?";
}

// Integer weights attached to the basis of a torus representation.
struct WeightSystem {
  std::vector<std::vector<long>> weights;
  int rank = 0;

  WeightSystem() = default;
  WeightSystem(std::vector<std::vector<long>> w, int m) : weights(std::move(w)), rank(m) {
    for (const auto& v : weights)
      if (static_cast<int>(v.size()) != rank) throw std::invalid_argument("weight length mismatch");
  }
};

struct WeightedVector {
  std::set<int> support;
  WeightSystem system;
};

namespace torus_detail {

// Rank of the set of differences p_i - p_0: dimension of the affine hull.
inline int affine_hull_dim(const std::vector<std::vector<long>>& pts) {
  if (pts.size() <= 1) return 0;
  int m = static_cast<int>(pts[0].size());
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<mpq_class> r(m);
    for (int j = 0; j < m; ++j) r[j] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  int nr = static_cast<int>(rows.size());
  for (int col = 0; col < m && rank < nr; ++col) {
    int piv = -1;
    for (int r = rank; r < nr; ++r)
      if (rows[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = rank + 1; r < nr; ++r) {
      if (rows[r][col] == 0) continue;
      mpq_class f = rows[r][col] / rows[rank][col];
      for (int c = col; c < m; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace torus_detail

// Stability of a vector under a torus action from its weight data.
// Stable means 0 is interior inside the full weight space Q^m.
inline StabilityClass torus_classify(const WeightedVector& v) {
  if (v.support.empty()) throw std::invalid_argument("empty support");
  std::vector<std::vector<long>> pts;
  for (int i : v.support) {
    if (i < 0 || i >= static_cast<int>(v.system.weights.size()))
      throw std::out_of_range("support index outside weight system");
    pts.push_back(v.system.weights[i]);
  }
  PointSet wp(pts, v.system.rank);
  std::vector<mpq_class> origin(v.system.rank, 0);
  if (!contains(wp, origin)) return StabilityClass::Unstable;
  if (!in_relative_interior(wp, origin)) return StabilityClass::SemistableNotPolystable;
  if (torus_detail::affine_hull_dim(pts) == v.system.rank) return StabilityClass::Stable;
  return StabilityClass::PolystableNotStable;
}

// ST_n on degree-d forms: weight of monomial e is n*e - (d,...,d), with the
// interior test taken inside the hyperplane sum v_i = 0 (dimension n-1).
inline StabilityClass newton_classify(const Polynomial& f, int d, int n) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (!f.is_homogeneous() || f.degree() != d) throw std::invalid_argument("not homogeneous of the stated degree");
  if (f.nvars() != n) throw std::invalid_argument("variable count mismatch");
  std::vector<std::vector<long>> pts;
  for (const auto& [m, c] : f.terms()) {
    std::vector<long> w(n);
    for (int i = 0; i < n; ++i) w[i] = static_cast<long>(n) * m[i] - d;
    pts.push_back(std::move(w));
  }
  PointSet wp(pts, n);
  std::vector<mpq_class> origin(n, 0);
  if (!contains(wp, origin)) return StabilityClass::Unstable;
  if (!in_relative_interior(wp, origin)) return StabilityClass::SemistableNotPolystable;
  if (torus_detail::affine_hull_dim(pts) == n - 1) return StabilityClass::Stable;
  return StabilityClass::PolystableNotStable;
}

// Essential indices of a supported weight collection; ess(v) keeps exactly
// these coordinates (the point in the unique closed torus orbit).
inline std::set<int> essential_indices(const WeightedVector& v) {
  if (v.support.empty()) return {};
  std::vector<std::vector<long>> pts;
  std::vector<int> order;
  for (int i : v.support) {
    pts.push_back(v.system.weights.at(i));
    order.push_back(i);
  }
  std::set<int> local = essential_support(PointSet(pts, v.system.rank));
  std::set<int> out;
  for (int j : local) out.insert(order[j]);
  return out;
}

// All invariant monomial exponents c over the restricted indices with
// 1 <= sum c <= max_degree and sum c_i lambda^(i) = 0, by bounded search.
inline std::vector<std::vector<int>> invariant_monomials(const WeightSystem& ws,
                                                         const std::vector<int>& restricted_to,
                                                         int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  int k = static_cast<int>(restricted_to.size());
  std::vector<std::vector<int>> out;
  std::vector<int> c(k, 0);
  std::vector<long> acc(ws.rank, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == k) {
      bool zero = true;
      for (long a : acc) zero = zero && a == 0;
      int deg = 0;
      for (int x : c) deg += x;
      if (zero && deg >= 1) out.push_back(c);
      return;
    }
    const auto& w = ws.weights.at(restricted_to[pos]);
    for (int e = 0; e <= remaining; ++e) {
      c[pos] = e;
      self(self, pos + 1, remaining - e);
      for (int j = 0; j < ws.rank; ++j) acc[j] += w[j];
    }
    for (int j = 0; j < ws.rank; ++j) acc[j] -= (remaining + 1) * w[j];
    c[pos] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

}  // namespace polystab
