#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arithjet/padic.hpp"

using namespace arithjet;

namespace {

PadicScalar rnd_scalar(std::mt19937_64& rng, long p, long prec) {
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  return PadicScalar::from_int(p, prec, d(rng));
}

}  // namespace

TEST_CASE("basic arithmetic") {
  auto a = PadicScalar::from_int(5, 8, 2);
  auto b = PadicScalar::from_int(5, 8, 3);
  CHECK((a * b) == PadicScalar::from_int(5, 8, 6));
  CHECK((a + (-a)).is_zero());
  // val(240) at p=5: 240 = 2^4 * 3 * 5.
  CHECK(PadicScalar::from_int(5, 8, 240).val() == 1);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 200; ++i) {
    auto a = rnd_scalar(rng, 5, 8);
    auto b = rnd_scalar(rng, 5, 8);
    auto c = rnd_scalar(rng, 5, 8);
    CHECK((a + b) == (b + a));
    CHECK((a * b) == (b * a));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a * (b + c)) == (a * b + a * c));
  }
}

TEST_CASE("valuation is additive on products") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    auto a = rnd_scalar(rng, 7, 8);
    auto b = rnd_scalar(rng, 7, 8);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).val() == a.val() + b.val());
  }
}

TEST_CASE("division by p^k") {
  long p = 5;
  auto p2 = PadicScalar::from_int(p, 8, 25);
  CHECK(p2.div_pow_p(1) == PadicScalar::from_int(p, 7, 5));

  // (p - p^p)/p = 1 - p^(p-1)
  auto x = PadicScalar::from_int(p, 8, 5 - 3125);
  CHECK(x.div_pow_p(1) == PadicScalar::from_int(p, 7, 1 - 625));

  CHECK_THROWS_AS(PadicScalar::from_int(p, 8, 3).div_pow_p(1), math_error);
  CHECK_THROWS_AS(PadicScalar::zero(p, 2).div_pow_p(4), budget_error);

  // div_pow_p(mul_pow_p(x, k), k) == x at reduced precision.
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    auto a = rnd_scalar(rng, p, 8);
    auto back = a.mul_pow_p(3).div_pow_p(3);
    CHECK(back == a);
  }
}

TEST_CASE("teichmuller") {
  CHECK(teichmuller(5, 8, 1) == PadicScalar::from_int(5, 8, 1));
  // Defining property w^p = w.
  for (long a = 1; a < 5; ++a) {
    auto w = teichmuller(5, 8, a);
    CHECK((w.pow(5) - w).is_zero());
    CHECK(w.congruent(PadicScalar::from_int(5, 8, a), 1));
  }
  // p=5, a=2, N=3: 57 mod 125 (fixed point of x -> x^5 mod 125 lifting 2).
  CHECK(teichmuller(5, 3, 2) == PadicScalar::from_int(5, 3, 57));
  CHECK_THROWS_AS(teichmuller(5, 8, 0), math_error);

  // Uniqueness by brute force mod p^3.
  for (long a = 1; a < 5; ++a) {
    int count = 0;
    for (long x = 0; x < 125; ++x) {
      if (x % 5 != a) continue;
      long x5 = 1;
      for (int k = 0; k < 5; ++k) x5 = (x5 * x) % 125;
      if (x5 == x) ++count;
    }
    CHECK(count == 1);
  }
}

TEST_CASE("scalar log and exp") {
  long p = 5, N = 8;
  auto x = PadicScalar::from_int(p, N, p);
  auto e = padic_exp(x);
  CHECK(padic_log1p(e - PadicScalar::from_int(p, e.prec(), 1))
            .congruent(x.at_prec(5), 5));
  CHECK(padic_exp(PadicScalar::zero(p, N)) ==
        PadicScalar::from_int(p, N, 1));

  // (1/p)log1p(u^(1-p) - 1) == ((1-p)/p) log1p(p) for u = 1+p.
  auto u = PadicScalar::from_int(p, N + 2, 1 + p);
  auto lhs = padic_log1p(u.pow(1 - p) - PadicScalar::from_int(p, N, 1))
                 .div_pow_p(1);
  auto rhs = padic_log1p(PadicScalar::from_int(p, N + 2, p))
                 .div_pow_p(1)
                 .mul_int(1 - p);
  CHECK(lhs.congruent(rhs, 6));
}

TEST_CASE("negative valuations and rationals") {
  auto r = PadicScalar::from_rational(5, 8, 2, 5);  // 2/5
  CHECK(r.val() == -1);
  CHECK((r * PadicScalar::from_int(5, 8, 5)) == PadicScalar::from_int(5, 8, 2));
  auto third = PadicScalar::from_rational(5, 8, 1, 3);
  CHECK((third.mul_int(3)) == PadicScalar::from_int(5, 8, 1));
}

TEST_CASE("rendering") {
  auto x = PadicScalar::from_int(5, 8, 50);
  CHECK(x.to_text() == "2*p^2 + O(p^8)");
  CHECK(PadicScalar::zero(5, 4).to_text() == "O(p^4)");
  CHECK(x.json() == "{\"p\":5,\"val\":2,\"unit\":\"2\",\"prec\":8}");
}
