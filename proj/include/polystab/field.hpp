#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace polystab {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t {
    return static_cast<std::uint64_t>((unsigned __int128)a * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

// Ground field: characteristic 0 means Q, otherwise the prime field F_p.
class FieldSpec {
 public:
  FieldSpec() : char_(0) {}
  explicit FieldSpec(std::uint64_t characteristic) : char_(characteristic) {
    if (char_ != 0) {
      if (char_ >= (1ull << 62))
        throw std::invalid_argument("characteristic too large (need p < 2^62)");
      if (!is_prime_u64(char_))
        throw std::invalid_argument("characteristic must be 0 or prime, got " + std::to_string(char_));
    }
  }

  std::uint64_t characteristic() const { return char_; }
  bool is_rational() const { return char_ == 0; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t char_;
};

// Element of Q or F_p, canonical form (reduced fraction / least residue).
class Scalar {
 public:
  Scalar() : field_(), rat_(std::in_place, 0), res_(0) {}

  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }

  Scalar(const FieldSpec& f, long v) : field_(f), res_(0) {
    if (f.is_rational()) {
      rat_.emplace(v);
    } else {
      long m = static_cast<long>(f.characteristic());
      long r = v % m;
      if (r < 0) r += m;
      res_ = static_cast<std::uint64_t>(r);
    }
  }

  Scalar(const FieldSpec& f, const mpq_class& q) : field_(f), res_(0) {
    if (f.is_rational()) {
      rat_.emplace(q);
      rat_->canonicalize();
    } else {
      mpz_class p(static_cast<unsigned long>(f.characteristic()));
      mpz_class den = q.get_den() % p;
      if (den == 0) throw std::domain_error("denominator divisible by characteristic");
      mpz_class num = q.get_num() % p;
      if (num < 0) num += p;
      std::uint64_t n = num.get_ui();
      std::uint64_t d = mpz_class((den % p + p) % p).get_ui();
      res_ = mulmod(n, inv_mod(d), p.get_ui());
    }
  }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return field_.is_rational() ? *rat_ == 0 : res_ == 0; }
  bool is_one() const { return field_.is_rational() ? *rat_ == 1 : res_ == 1; }

  Scalar zero_like() const { return Scalar::zero(field_); }
  Scalar one_like() const { return Scalar::one(field_); }

  // Only meaningful over Q.
  const mpq_class& rational() const {
    require_rational();
    return *rat_;
  }
  std::uint64_t residue() const { return res_; }

  Scalar operator-() const {
    Scalar r(*this);
    if (field_.is_rational()) *r.rat_ = -*rat_;
    else if (res_ != 0) r.res_ = field_.characteristic() - res_;
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
      *rat_ += *o.rat_;
    } else {
      res_ += o.res_;
      if (res_ >= field_.characteristic()) res_ -= field_.characteristic();
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) *rat_ *= *o.rat_;
    else res_ = mulmod(res_, o.res_, field_.characteristic());
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar r(*this);
    if (field_.is_rational()) *r.rat_ = 1 / *rat_;
    else r.res_ = inv_mod(res_);
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? *a.rat_ == *b.rat_ : a.res_ == b.res_;
  }

  std::string str() const {
    if (field_.is_rational()) return rat_->get_str();
    return std::to_string(res_);
  }

 private:
  void require_rational() const {
    if (!field_.is_rational()) throw std::logic_error("not a rational scalar");
  }
  void check_same(const Scalar& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("scalar field mismatch");
  }
  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((unsigned __int128)a * b % m);
  }
  std::uint64_t inv_mod(std::uint64_t a) const {
    // extended Euclid against the (prime) characteristic
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(field_.characteristic());
    std::int64_t newr = static_cast<std::int64_t>(a % field_.characteristic());
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt; newt = tmp;
      tmp = r - q * newr;
      r = newr; newr = tmp;
    }
    if (r != 1) throw std::domain_error("not invertible");
    if (t < 0) t += static_cast<std::int64_t>(field_.characteristic());
    return static_cast<std::uint64_t>(t);
  }

  FieldSpec field_;
  std::optional<mpq_class> rat_;  // engaged exactly in characteristic 0
  std::uint64_t res_;
};

inline std::string coeff_str(const Scalar& s) { return s.str(); }

}  // namespace polystab
