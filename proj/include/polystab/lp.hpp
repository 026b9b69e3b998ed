#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polystab {

enum class LPStatus { Optimal, Infeasible, Unbounded };
enum class Rel { Le, Eq, Ge };

struct LPConstraint {
  std::vector<mpq_class> coeffs;
  Rel rel = Rel::Eq;
  mpq_class rhs = 0;
};

struct LinearProgram {
  int nvars = 0;
  std::vector<mpq_class> objective;  // maximized
  std::vector<LPConstraint> constraints;
  std::vector<bool> nonneg;  // per variable; false means free
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  std::vector<mpq_class> witness;  // valid when status != Infeasible
  mpq_class objective = 0;
};

namespace lp_detail {

// Dense exact tableau, Bland's anti-cycling rule.
class Simplex {
 public:
  Simplex(int ncols) : ncols_(ncols) {}

  void add_row(std::vector<mpq_class> row, mpq_class rhs, int basic_col) {
    row.push_back(rhs);
    rows_.push_back(std::move(row));
    basis_.push_back(basic_col);
  }

  // Maximize c^T x over the current tableau. Columns with banned[j] set may
  // not enter the basis. Returns false when unbounded.
  bool maximize(const std::vector<mpq_class>& c, const std::vector<bool>& banned) {
    price_out(c);
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (banned[j]) continue;
        if (reduced_cost(c, j) > 0) { enter = j; break; }  // Bland: first improving column
      }
      if (enter < 0) return true;
      int leave = -1;
      mpq_class best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const mpq_class& a = rows_[i][enter];
        if (a <= 0) continue;
        mpq_class ratio = rows_[i][ncols_] / a;
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  mpq_class objective_value(const std::vector<mpq_class>& c) const {
    mpq_class v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += c[basis_[i]] * rows_[i][ncols_];
    return v;
  }

  std::vector<mpq_class> solution() const {
    std::vector<mpq_class> x(ncols_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rows_[i][ncols_];
    return x;
  }

  // Pivot artificial columns out of the basis when a real pivot exists;
  // rows that stay artificial are redundant and harmless at value zero.
  void expel(int first_artificial) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < first_artificial) continue;
      for (int j = 0; j < first_artificial; ++j) {
        if (rows_[i][j] != 0) {
          pivot(static_cast<int>(i), j);
          break;
        }
      }
    }
  }

  std::size_t cell_count() const { return rows_.size() * (ncols_ + 1); }

 private:
  mpq_class reduced_cost(const std::vector<mpq_class>& c, int j) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] == j) return 0;
    mpq_class rc = c[j];
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (c[basis_[i]] != 0) rc -= c[basis_[i]] * rows_[i][j];
    return rc;
  }

  void price_out(const std::vector<mpq_class>&) {}

  void pivot(int r, int col) {
    mpq_class inv = 1 / rows_[r][col];
    for (int j = 0; j <= ncols_; ++j) rows_[r][j] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      const mpq_class f = rows_[i][col];
      if (f == 0) continue;
      for (int j = 0; j <= ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    basis_[r] = col;
  }

  int ncols_;
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<int> basis_;
};

inline void check_cell_cap(std::size_t cells) {
  if (const char* cap = std::getenv("POLYSTAB_MAX_CELLS")) {
    std::size_t lim = std::strtoull(cap, nullptr, 10);
    if (lim > 0 && cells > lim)
      throw std::runtime_error("LP tableau exceeds POLYSTAB_MAX_CELLS (" + std::to_string(cells) + " cells)");
  }
}

}  // namespace lp_detail

inline LPResult lp_solve(const LinearProgram& lp) {
  int n = lp.nvars;
  if (static_cast<int>(lp.objective.size()) != n) throw std::invalid_argument("objective dimension mismatch");
  std::vector<bool> nonneg = lp.nonneg;
  if (nonneg.empty()) nonneg.assign(n, true);
  if (static_cast<int>(nonneg.size()) != n) throw std::invalid_argument("nonneg flags dimension mismatch");

  // Column layout: for each original variable one column (plus a negative
  // part when free), then slack/surplus columns, then artificials.
  std::vector<int> pos_col(n), neg_col(n, -1);
  int col = 0;
  for (int j = 0; j < n; ++j) {
    pos_col[j] = col++;
    if (!nonneg[j]) neg_col[j] = col++;
  }
  int m = static_cast<int>(lp.constraints.size());
  std::vector<int> slack_col(m, -1);
  for (int i = 0; i < m; ++i)
    if (lp.constraints[i].rel != Rel::Eq) slack_col[i] = col++;
  int first_artificial = col;
  col += m;
  int ncols = col;

  lp_detail::Simplex tab(ncols);
  lp_detail::check_cell_cap(static_cast<std::size_t>(m) * (ncols + 1));

  for (int i = 0; i < m; ++i) {
    const LPConstraint& ct = lp.constraints[i];
    if (static_cast<int>(ct.coeffs.size()) != n) throw std::invalid_argument("constraint dimension mismatch");
    std::vector<mpq_class> row(ncols, 0);
    mpq_class rhs = ct.rhs;
    int sign = 1;
    // normalize rhs >= 0
    Rel rel = ct.rel;
    if (rhs < 0) {
      sign = -1;
      rhs = -rhs;
      if (rel == Rel::Le) rel = Rel::Ge;
      else if (rel == Rel::Ge) rel = Rel::Le;
    }
    for (int j = 0; j < n; ++j) {
      mpq_class a = sign * ct.coeffs[j];
      row[pos_col[j]] = a;
      if (neg_col[j] >= 0) row[neg_col[j]] = -a;
    }
    if (slack_col[i] >= 0) row[slack_col[i]] = (rel == Rel::Le) ? 1 : -1;
    row[first_artificial + i] = 1;
    tab.add_row(std::move(row), rhs, first_artificial + i);
  }

  std::vector<bool> no_ban(ncols, false);
  std::vector<bool> ban_artificials(ncols, false);
  for (int j = first_artificial; j < ncols; ++j) ban_artificials[j] = true;

  // Phase 1: drive artificials to zero.
  std::vector<mpq_class> phase1(ncols, 0);
  for (int j = first_artificial; j < ncols; ++j) phase1[j] = -1;
  tab.maximize(phase1, no_ban);
  if (tab.objective_value(phase1) != 0) return LPResult{LPStatus::Infeasible, {}, 0};
  tab.expel(first_artificial);

  // Phase 2.
  std::vector<mpq_class> phase2(ncols, 0);
  for (int j = 0; j < n; ++j) {
    phase2[pos_col[j]] = lp.objective[j];
    if (neg_col[j] >= 0) phase2[neg_col[j]] = -lp.objective[j];
  }
  bool bounded = tab.maximize(phase2, ban_artificials);
  std::vector<mpq_class> cols = tab.solution();
  LPResult res;
  res.status = bounded ? LPStatus::Optimal : LPStatus::Unbounded;
  res.witness.resize(n);
  for (int j = 0; j < n; ++j) {
    res.witness[j] = cols[pos_col[j]];
    if (neg_col[j] >= 0) res.witness[j] -= cols[neg_col[j]];
  }
  res.objective = bounded ? tab.objective_value(phase2) : 0;

  if (bounded) {
    // Witness must satisfy every constraint exactly.
    for (const LPConstraint& ct : lp.constraints) {
      mpq_class lhs = 0;
      for (int j = 0; j < n; ++j) lhs += ct.coeffs[j] * res.witness[j];
      bool ok = ct.rel == Rel::Eq ? lhs == ct.rhs : (ct.rel == Rel::Le ? lhs <= ct.rhs : lhs >= ct.rhs);
      if (!ok) throw std::logic_error("simplex produced an invalid witness");
    }
  }
  return res;
}

}  // namespace polystab
