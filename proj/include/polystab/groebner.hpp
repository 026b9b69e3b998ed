#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "polystab/polynomial.hpp"

namespace polystab {

// Resource caps exceeded: a loud, typed outcome, never a wrong answer.
class InconclusiveError : public std::runtime_error {
 public:
  explicit InconclusiveError(const std::string& what) : std::runtime_error(what) {}
};

struct GroebnerLimits {
  std::size_t max_basis = 5000;
  int max_degree = 40;
};

struct Ideal {
  std::vector<Polynomial> generators;
};

namespace gb {

// Term list sorted descending in degrevlex; leading term first.
struct GBPoly {
  std::vector<std::pair<Monomial, Scalar>> terms;
  int sugar = 0;

  bool is_zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().first; }
  const Scalar& lc() const { return terms.front().second; }
  int degree() const { return terms.empty() ? -1 : total_degree(terms.front().first); }
};

inline GBPoly from_polynomial(const Polynomial& p) {
  GBPoly g;
  for (const auto& [m, c] : p.terms()) g.terms.emplace_back(m, c);
  std::sort(g.terms.begin(), g.terms.end(),
            [](const auto& a, const auto& b) { return degrevlex_less(b.first, a.first); });
  g.sugar = p.degree();
  return g;
}

inline Polynomial to_polynomial(const GBPoly& g, int nvars, const FieldSpec& field) {
  Polynomial p(nvars, Scalar::zero(field));
  for (const auto& [m, c] : g.terms) p.add_term(m, c);
  return p;
}

inline void make_monic(GBPoly& g) {
  if (g.is_zero() || g.lc().is_one()) return;
  Scalar inv = g.lc().inverse();
  for (auto& [m, c] : g.terms) c *= inv;
}

// r = a - coeff * x^shift * b, both sorted; merge in one pass.
inline GBPoly sub_mul(const GBPoly& a, const Scalar& coeff, const Monomial& shift, const GBPoly& b) {
  GBPoly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      r.terms.push_back(a.terms[i++]);
      continue;
    }
    Monomial mb = mono_mul(b.terms[j].first, shift);
    if (i == a.terms.size()) {
      Scalar c = -(coeff * b.terms[j].second);
      if (!c.is_zero()) r.terms.emplace_back(std::move(mb), c);
      ++j;
      continue;
    }
    const Monomial& ma = a.terms[i].first;
    if (ma == mb) {
      Scalar c = a.terms[i].second - coeff * b.terms[j].second;
      if (!c.is_zero()) r.terms.emplace_back(ma, c);
      ++i;
      ++j;
    } else if (degrevlex_less(mb, ma)) {
      r.terms.push_back(a.terms[i++]);
    } else {
      Scalar c = -(coeff * b.terms[j].second);
      if (!c.is_zero()) r.terms.emplace_back(std::move(mb), c);
      ++j;
    }
  }
  r.sugar = std::max(a.sugar, total_degree(shift) + b.sugar);
  return r;
}

// Reduce only while the leading term is divisible; the tail stays as is.
inline GBPoly top_reduce(GBPoly f, const std::vector<GBPoly>& basis) {
  bool reduced = true;
  while (!f.is_zero() && reduced) {
    reduced = false;
    for (const GBPoly& g : basis) {
      if (g.is_zero()) continue;
      if (mono_divides(g.lm(), f.lm())) {
        Scalar q = f.lc() / g.lc();
        f = sub_mul(f, q, mono_div(f.lm(), g.lm()), g);
        reduced = true;
        break;
      }
    }
  }
  return f;
}

// Full normal form of f against basis.
inline GBPoly reduce(GBPoly f, const std::vector<GBPoly>& basis) {
  GBPoly out;
  out.sugar = f.sugar;
  while (!f.is_zero()) {
    bool reduced = false;
    for (const GBPoly& g : basis) {
      if (g.is_zero()) continue;
      if (mono_divides(g.lm(), f.lm())) {
        Scalar q = f.lc() / g.lc();
        f = sub_mul(f, q, mono_div(f.lm(), g.lm()), g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.terms.push_back(f.terms.front());
      f.terms.erase(f.terms.begin());
    }
  }
  return out;
}

inline GBPoly s_polynomial(const GBPoly& a, const GBPoly& b) {
  // lc-normalized S-poly: a/lc(a) * l/lm(a) - b/lc(b) * l/lm(b)
  Monomial l = mono_lcm(a.lm(), b.lm());
  int sugar = std::max(total_degree(mono_div(l, a.lm())) + a.sugar, total_degree(mono_div(l, b.lm())) + b.sugar);
  GBPoly ta;
  ta.sugar = sugar;
  ta = sub_mul(ta, -(a.lc().inverse()), mono_div(l, a.lm()), a);
  GBPoly res = sub_mul(ta, b.lc().inverse(), mono_div(l, b.lm()), b);
  res.sugar = sugar;
  return res;
}

struct Pair {
  int i, j;
  Monomial lcm;
  int deg;
  int sugar;

  // normal selection: smallest lcm degree, sugar tie-break; std::priority_queue
  // pops the max, so order reversed
  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg > o.deg;
    if (sugar != o.sugar) return sugar > o.sugar;
    if (j != o.j) return j > o.j;
    return i > o.i;
  }
};

}  // namespace gb

struct GroebnerBasis {
  std::vector<Polynomial> basis;  // reduced, monic, degrevlex
  int nvars = 0;
  FieldSpec field;
};

// Buchberger with normal selection (smallest lcm degree, sugar tie-break),
// coprimality and chain criteria. Throws InconclusiveError past the caps.
inline GroebnerBasis buchberger(const Ideal& ideal, const GroebnerLimits& limits = {}) {
  if (ideal.generators.empty()) throw std::invalid_argument("empty generator list");
  int nvars = ideal.generators[0].nvars();
  FieldSpec field = ideal.generators[0].proto().field();

  std::vector<gb::GBPoly> basis;
  for (const Polynomial& p : ideal.generators) {
    if (p.nvars() != nvars) throw std::invalid_argument("generators in different rings");
    gb::GBPoly g = gb::from_polynomial(p);
    if (!g.is_zero()) {
      gb::make_monic(g);
      basis.push_back(std::move(g));
    }
  }
  if (basis.empty()) throw std::invalid_argument("zero ideal has no Groebner basis here");

  std::priority_queue<gb::Pair> pairs;
  std::set<std::pair<int, int>> pending;
  auto push_pairs_for = [&](int t) {
    for (int i = 0; i < t; ++i) {
      if (basis[i].is_zero()) continue;
      gb::Pair p;
      p.i = i;
      p.j = t;
      p.lcm = mono_lcm(basis[i].lm(), basis[t].lm());
      p.deg = total_degree(p.lcm);
      p.sugar = std::max(total_degree(mono_div(p.lcm, basis[i].lm())) + basis[i].sugar,
                         total_degree(mono_div(p.lcm, basis[t].lm())) + basis[t].sugar);
      pending.emplace(i, t);
      pairs.push(std::move(p));
    }
  };
  for (int t = 1; t < static_cast<int>(basis.size()); ++t) push_pairs_for(t);

  auto coprime = [&](const gb::Pair& p) {
    const Monomial& a = basis[p.i].lm();
    const Monomial& b = basis[p.j].lm();
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a[v] > 0 && b[v] > 0) return false;
    return true;
  };

  while (!pairs.empty()) {
    gb::Pair p = pairs.top();
    pairs.pop();
    pending.erase({p.i, p.j});

    if (coprime(p)) continue;
    // chain criterion: some other basis element divides the lcm and both
    // companion pairs are no longer pending
    bool chained = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
      if (k == p.i || k == p.j || basis[k].is_zero()) continue;
      if (!mono_divides(basis[k].lm(), p.lcm)) continue;
      if (!pending.count({std::min(p.i, k), std::max(p.i, k)}) &&
          !pending.count({std::min(p.j, k), std::max(p.j, k)}))
        chained = true;
    }
    if (chained) continue;

    gb::GBPoly s = gb::s_polynomial(basis[p.i], basis[p.j]);
    gb::GBPoly r = gb::reduce(std::move(s), basis);
    if (r.is_zero()) continue;
    if (r.degree() > limits.max_degree)
      throw InconclusiveError("Groebner degree cap exceeded (degree " + std::to_string(r.degree()) + ")");
    gb::make_monic(r);
    basis.push_back(std::move(r));
    if (basis.size() > limits.max_basis)
      throw InconclusiveError("Groebner basis size cap exceeded (" + std::to_string(basis.size()) + " elements)");
    push_pairs_for(static_cast<int>(basis.size()) - 1);
  }

  // minimalize: drop elements whose lm is divisible by another lm
  std::vector<gb::GBPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(basis[j].lm(), basis[i].lm())) {
        if (basis[j].lm() == basis[i].lm() && j > i) continue;  // keep the first of equals
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // full inter-reduction
  std::vector<gb::GBPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<gb::GBPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    gb::GBPoly r = gb::reduce(minimal[i], others);
    if (!r.is_zero()) {
      gb::make_monic(r);
      reduced.push_back(std::move(r));
    }
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const gb::GBPoly& a, const gb::GBPoly& b) { return degrevlex_less(a.lm(), b.lm()); });

  GroebnerBasis out;
  out.nvars = nvars;
  out.field = field;
  for (const auto& g : reduced) out.basis.push_back(gb::to_polynomial(g, nvars, field));
  return out;
}

// Normal form of p against a computed basis (degrevlex).
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  std::vector<gb::GBPoly> basis;
  for (const Polynomial& b : g.basis) basis.push_back(gb::from_polynomial(b));
  return gb::to_polynomial(gb::reduce(gb::from_polynomial(p), basis), g.nvars, g.field);
}

inline bool is_unit_ideal(const GroebnerBasis& g) {
  return g.basis.size() == 1 && g.basis[0].degree() == 0;
}

// Dimension of the initial monomial ideal: largest variable subset meeting
// no leading-term support. Unit ideal reports -1.
inline int krull_dimension(const GroebnerBasis& g) {
  if (is_unit_ideal(g)) return -1;
  std::vector<std::vector<int>> supports;
  for (const Polynomial& p : g.basis) {
    // leading monomial in degrevlex (the map itself is grlex-ordered)
    const Monomial* lmp = nullptr;
    for (const auto& [m, c] : p.terms())
      if (!lmp || degrevlex_less(*lmp, m)) lmp = &m;
    const Monomial& lm = *lmp;
    std::vector<int> s;
    for (int v = 0; v < g.nvars; ++v)
      if (lm[v] > 0) s.push_back(v);
    supports.push_back(std::move(s));
  }
  int n = g.nvars;
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& s : supports) {
      bool inside = true;
      for (int v : s)
        if (!(mask & (1ull << v))) { inside = false; break; }
      if (inside) { independent = false; break; }  // some lm lives entirely in the subset
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace polystab
