#include <doctest.h>

#include <random>

#include "polystab/field.hpp"

using namespace polystab;

TEST_CASE("primality check") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(13));
  CHECK(is_prime_u64(4611686018427387847ull));  // largest prime below 2^62
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));  // Carmichael
  CHECK_FALSE(is_prime_u64(1ull << 40));
}

TEST_CASE("field spec validation") {
  CHECK(FieldSpec().is_rational());
  CHECK(FieldSpec(7).characteristic() == 7);
  CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(1ull << 62), std::invalid_argument);
}

TEST_CASE("rational scalars canonicalize") {
  FieldSpec q;
  Scalar a(q, mpq_class(2, 4));
  CHECK(a.rational() == mpq_class(1, 2));
  CHECK((a + a).is_one());
  CHECK((a - a).is_zero());
  CHECK((a * Scalar(q, 2)).is_one());
  CHECK(a.inverse().rational() == 2);
  CHECK(a.str() == "1/2");
}

TEST_CASE("prime field scalars reduce to least residues") {
  FieldSpec f7(7);
  CHECK(Scalar(f7, 10).residue() == 3);
  CHECK(Scalar(f7, -1).residue() == 6);
  CHECK(Scalar(f7, mpq_class(1, 2)).residue() == 4);  // inverse of 2 mod 7
  CHECK(Scalar(f7, mpq_class(3, 4)).residue() == 6);
  CHECK_THROWS_AS(Scalar(f7, mpq_class(1, 7)), std::domain_error);
  CHECK(Scalar(f7, 3).inverse().residue() == 5);
  CHECK_THROWS_AS(Scalar(f7, 0).inverse(), std::domain_error);
}

TEST_CASE("field laws on random elements") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-50, 50);
  for (const FieldSpec& f : {FieldSpec(), FieldSpec(13)}) {
    for (int trial = 0; trial < 200; ++trial) {
      Scalar a(f, d(rng)), b(f, d(rng)), c(f, d(rng));
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a - a == Scalar::zero(f));
      if (!b.is_zero()) CHECK(a / b * b == a);
    }
  }
}

TEST_CASE("scalars of different fields do not mix") {
  Scalar a(FieldSpec(), 1), b(FieldSpec(5), 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_FALSE(a == b);
}
