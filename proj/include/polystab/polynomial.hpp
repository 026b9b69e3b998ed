#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polystab/field.hpp"
#include "polystab/monomial.hpp"

namespace polystab {

// Sparse multivariate polynomial over a coefficient ring Coeff.
// Coeff must provide: is_zero(), zero_like(), one_like(), unary -, += -= *=,
// ==, and a coeff_str overload. Scalar satisfies this, and so does
// PolynomialT itself, which gives polynomials with polynomial coefficients
// (used for formal parameters).
template <typename Coeff>
class PolynomialT {
 public:
  using TermMap = std::map<Monomial, Coeff, GrlexGreater>;

  PolynomialT() : nvars_(0) {}
  PolynomialT(int nvars, const Coeff& proto) : nvars_(nvars), proto_(proto.zero_like()) {
    if (nvars < 0) throw std::invalid_argument("nvars must be >= 0");
  }

  static PolynomialT zero(int nvars, const Coeff& proto) { return PolynomialT(nvars, proto); }
  static PolynomialT constant(int nvars, const Coeff& c) {
    PolynomialT r(nvars, c);
    r.add_term(Monomial(nvars, 0), c);
    return r;
  }
  static PolynomialT variable(int nvars, int i, const Coeff& proto) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
    PolynomialT r(nvars, proto);
    Monomial m(nvars, 0);
    m[i] = 1;
    r.add_term(m, proto.one_like());
    return r;
  }
  static PolynomialT monomial(int nvars, const Monomial& m, const Coeff& c) {
    if (static_cast<int>(m.size()) != nvars) throw std::invalid_argument("monomial length mismatch");
    PolynomialT r(nvars, c);
    r.add_term(m, c);
    return r;
  }

  int nvars() const { return nvars_; }
  const Coeff& proto() const { return proto_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Coeff interface, so PolynomialT can itself be a coefficient ring.
  PolynomialT zero_like() const { return PolynomialT(nvars_, proto_); }
  PolynomialT one_like() const { return constant(nvars_, proto_.one_like()); }
  bool is_one() const {
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
           terms_.begin()->second == proto_.one_like();
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("monomial length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? proto_ : it->second;
  }

  int degree() const {
    // -1 for the zero polynomial
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (total_degree(m) != d) return false;
    return true;
  }

  PolynomialT operator-() const {
    PolynomialT r(nvars_, proto_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  PolynomialT& operator+=(const PolynomialT& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  PolynomialT& operator-=(const PolynomialT& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  PolynomialT& operator*=(const PolynomialT& o) { return *this = *this * o; }

  friend PolynomialT operator+(PolynomialT a, const PolynomialT& b) { return a += b; }
  friend PolynomialT operator-(PolynomialT a, const PolynomialT& b) { return a -= b; }

  friend PolynomialT operator*(const PolynomialT& a, const PolynomialT& b) {
    a.check_ring(b);
    PolynomialT r(a.nvars_, a.proto_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }

  PolynomialT& scale(const Coeff& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * c;
      if (it->second.is_zero()) it = terms_.erase(it);
      else ++it;
    }
    return *this;
  }
  friend PolynomialT operator*(PolynomialT a, const Coeff& c) { return a.scale(c); }

  PolynomialT pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    PolynomialT r = one_like();
    PolynomialT base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const PolynomialT& a, const PolynomialT& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Substitute variable i by images[i]; images live in a common target ring.
  PolynomialT substitute(const std::vector<PolynomialT>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("need one image per variable");
    int tn = nvars_ == 0 ? 0 : images[0].nvars();
    Coeff tproto = nvars_ == 0 ? proto_ : images[0].proto_;
    PolynomialT result(tn, tproto);
    // memoized powers per variable
    std::vector<std::vector<PolynomialT>> powers(nvars_);
    auto power = [&](int i, int e) -> const PolynomialT& {
      auto& tab = powers[i];
      if (tab.empty()) tab.push_back(images[i].one_like());
      while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * images[i]);
      return tab[e];
    };
    for (const auto& [m, c] : terms_) {
      PolynomialT t = PolynomialT::constant(tn, c);
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > 0) t = t * power(i, m[i]);
      result += t;
    }
    return result;
  }

  // f(M x): variable j is replaced by sum_k M[j][k] x_k.
  PolynomialT substitute_linear(const std::vector<std::vector<Coeff>>& M) const {
    if (static_cast<int>(M.size()) != nvars_) throw std::invalid_argument("matrix dimension mismatch");
    std::vector<PolynomialT> images;
    images.reserve(nvars_);
    for (int j = 0; j < nvars_; ++j) {
      if (static_cast<int>(M[j].size()) != nvars_) throw std::invalid_argument("matrix dimension mismatch");
      PolynomialT img(nvars_, proto_);
      for (int k = 0; k < nvars_; ++k) {
        Monomial m(nvars_, 0);
        m[k] = 1;
        img.add_term(m, M[j][k]);
      }
      images.push_back(std::move(img));
    }
    return substitute(images);
  }

  PolynomialT derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("variable index");
    PolynomialT r(nvars_, proto_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Coeff nc = c.zero_like();
      Coeff k = c.one_like();
      // m[var] * c without assuming an int constructor on Coeff
      for (int i = 0; i < m[var]; ++i) nc += c;
      Monomial nm(m);
      --nm[var];
      r.add_term(nm, nc);
      (void)k;
    }
    return r;
  }

  Coeff evaluate(const std::vector<Coeff>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point dimension mismatch");
    Coeff acc = proto_;
    for (const auto& [m, c] : terms_) {
      Coeff t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < m[i]; ++e) t = t * point[i];
      acc += t;
    }
    return acc;
  }

  // Collect by powers of one variable: result[k] has that variable removed
  // from its exponents (still in the same ring, exponent zeroed).
  std::vector<PolynomialT> collect(int var) const {
    int top = 0;
    for (const auto& [m, c] : terms_) top = std::max(top, m[var]);
    std::vector<PolynomialT> out(terms_.empty() ? 1 : top + 1, PolynomialT(nvars_, proto_));
    for (const auto& [m, c] : terms_) {
      Monomial nm(m);
      int k = nm[var];
      nm[var] = 0;
      out[k].add_term(nm, c);
    }
    return out;
  }

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const {
    std::vector<std::string> names;
    for (int i = 0; i < nvars_; ++i) names.push_back("x" + std::to_string(i + 1));
    return str(names);
  }

 private:
  void check_ring(const PolynomialT& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  }

  int nvars_;
  Coeff proto_;
  TermMap terms_;
};

using Polynomial = PolynomialT<Scalar>;
using ParamScalar = PolynomialT<Scalar>;
using ParamPolynomial = PolynomialT<ParamScalar>;

inline std::string coeff_str(const PolynomialT<Scalar>& p) { return "(" + p.str() + ")"; }

namespace detail {

// Scalars needing a leading minus when printed: only rationals go negative.
inline bool coeff_is_negative(const Scalar& c) {
  return c.field().is_rational() && c.rational() < 0;
}
template <typename Coeff>
bool coeff_is_negative(const PolynomialT<Coeff>&) {
  return false;
}

inline Scalar coeff_abs(const Scalar& c) { return coeff_is_negative(c) ? -c : c; }
template <typename Coeff>
PolynomialT<Coeff> coeff_abs(const PolynomialT<Coeff>& c) {
  return c;
}

}  // namespace detail

template <typename Coeff>
std::string PolynomialT<Coeff>::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  if (static_cast<int>(names.size()) != nvars_) throw std::invalid_argument("need one name per variable");
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = detail::coeff_is_negative(c);
    Coeff a = detail::coeff_abs(c);
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      mono += names[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out << coeff_str(a);
    } else {
      if (!a.is_one()) out << coeff_str(a);
      out << mono;
    }
  }
  return out.str();
}

}  // namespace polystab
