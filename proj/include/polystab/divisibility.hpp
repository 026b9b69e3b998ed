#pragma once

#include <optional>
#include <stdexcept>

#include "polystab/matrix.hpp"
#include "polystab/polynomial.hpp"

namespace polystab {

// Complete a nonzero linear form to a basis: row 0 carries its coefficients,
// the other rows are standard basis vectors away from the pivot column.
inline ScalarMatrix complete_linear_to_basis(const Polynomial& l) {
  if (l.is_zero() || l.degree() != 1 || !l.is_homogeneous())
    throw std::invalid_argument("need a nonzero homogeneous linear form");
  int n = l.nvars();
  FieldSpec f = l.proto().field();
  ScalarMatrix a(n, std::vector<Scalar>(n, Scalar::zero(f)));
  for (const auto& [m, c] : l.terms())
    for (int i = 0; i < n; ++i)
      if (m[i] == 1) a[0][i] = c;
  int pivot = -1;
  for (int i = 0; i < n && pivot < 0; ++i)
    if (!a[0][i].is_zero()) pivot = i;
  int row = 1;
  for (int i = 0; i < n; ++i) {
    if (i == pivot) continue;
    a[row++][i] = Scalar::one(f);
  }
  return a;
}

struct LinearDivision {
  bool divisible = false;
  Polynomial quotient;
};

// l | f via a basis change sending l to the first coordinate: in those
// coordinates divisibility is just "every term carries y_1".
inline LinearDivision is_divisible_by_linear(const Polynomial& f, const Polynomial& l) {
  ScalarMatrix a = complete_linear_to_basis(l);
  if (f.nvars() != l.nvars()) throw std::invalid_argument("ring mismatch");
  auto ainv = matrix_inverse(a);
  if (!ainv) throw std::logic_error("basis completion produced a singular matrix");
  Polynomial g = f.substitute_linear(*ainv);  // f = g(A x), l = y_1
  LinearDivision out;
  out.quotient = Polynomial(f.nvars(), f.proto());
  Polynomial h(f.nvars(), f.proto());
  for (const auto& [m, c] : g.terms()) {
    if (m[0] == 0) return out;  // some term misses y_1
    Monomial nm(m);
    --nm[0];
    h.add_term(nm, c);
  }
  out.divisible = true;
  out.quotient = h.substitute_linear(a);
  return out;
}

}  // namespace polystab
