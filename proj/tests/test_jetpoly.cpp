#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arithjet/jetpoly.hpp"

using namespace arithjet;

namespace {

RingPtr gm_ring(long p = 5, long N = 8, int order = 4) {
  JetRing R;
  R.budget.p = p;
  R.budget.N = N;
  R.names = {"x", "y"};
  R.laurent = {true, false};
  R.max_order = order;
  return make_ring(R);
}

RingPtr t_ring(long p = 5, long N = 8, int order = 4) {
  JetRing R;
  R.budget.p = p;
  R.budget.N = N;
  R.names = {"T", "U"};
  R.max_order = order;
  return make_ring(R);
}

JetPolynomial rnd_poly(std::mt19937_64& rng, const RingPtr& ring, int nterms,
                       int max_order, long max_exp) {
  std::uniform_int_distribution<long> dc(1, 1000);
  std::uniform_int_distribution<long> de(0, max_exp);
  std::uniform_int_distribution<int> dv(0, max_order);
  JetPolynomial f(ring);
  for (int t = 0; t < nterms; ++t) {
    Mono m;
    m.e[static_cast<size_t>(ring->slot(0, dv(rng)))] += de(rng);
    m.e[static_cast<size_t>(ring->slot(0, dv(rng)))] += de(rng);
    f = f + JetPolynomial::monomial(
                ring, m, PadicScalar::from_int(ring->budget.p,
                                               ring->budget.N, dc(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("phi on generators and scalars") {
  auto R = t_ring();
  auto T = JetPolynomial::variable(R, 0, 0);
  CHECK(T.phi() == parse_jet(R, "1*T^5 + 1*p^1*T'"));
  auto c = JetPolynomial::from_int(R, 7);
  CHECK(c.phi() == c);

  // phi(x^-1) * (x^p + p x') == 1 at precision.
  auto G = gm_ring();
  auto xinv = JetPolynomial::variable(G, 0, 0, -1);
  auto prod = xinv.phi() * JetPolynomial::variable(G, 0, 0).phi();
  CHECK(prod == JetPolynomial::from_int(G, 1));
}

TEST_CASE("delta on generators") {
  auto R = t_ring();
  auto T = JetPolynomial::variable(R, 0, 0);
  CHECK(T.delta() == JetPolynomial::variable(R, 0, 1));

  auto G = gm_ring();
  auto x2 = JetPolynomial::variable(G, 0, 0, 2);
  CHECK(x2.delta() == parse_jet(G, "2*x^5*x' + 1*p^1*x'^2"));

  // delta(c) = (c - c^p)/p for scalars.
  auto c = JetPolynomial::from_int(G, 3);
  auto d = c.delta();
  auto expect = PadicScalar::from_int(5, 8, 3 - 243).div_pow_p(1);
  CHECK(d == JetPolynomial::constant(G, expect));
}

TEST_CASE("p-derivation axioms") {
  auto R = t_ring();
  auto T = JetPolynomial::variable(R, 0, 0);
  auto T1 = JetPolynomial::variable(R, 0, 1);
  auto sum_rule = [](const JetPolynomial& f, const JetPolynomial& g) {
    auto lhs = (f + g).delta();
    auto rhs = f.delta() + g.delta() + cp_defect(f, g);
    return lhs.congruent(rhs, 6);
  };
  auto prod_rule = [](const JetPolynomial& f, const JetPolynomial& g) {
    long p = f.ring()->budget.p;
    auto lhs = (f * g).delta();
    auto rhs = f.pow(p) * g.delta() + g.pow(p) * f.delta() +
               (f.delta() * g.delta()).mul_pow_p(1);
    return lhs.congruent(rhs, 6);
  };
  CHECK(sum_rule(T, T1));
  CHECK(prod_rule(T, T1));

  std::mt19937_64 rng(0);
  for (int i = 0; i < 25; ++i) {
    auto f = rnd_poly(rng, R, 4, 2, 3);
    auto g = rnd_poly(rng, R, 4, 2, 3);
    CHECK(sum_rule(f, g));
    CHECK(prod_rule(f, g));
  }

  // Laurent pair (x, x^-1).
  auto G = gm_ring();
  auto x = JetPolynomial::variable(G, 0, 0);
  auto xinv = JetPolynomial::variable(G, 0, 0, -1);
  CHECK(sum_rule(x, xinv));
  CHECK(prod_rule(x, xinv));
}

TEST_CASE("phi delta commute and Frobenius-lift property") {
  auto R = t_ring();
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    auto f = rnd_poly(rng, R, 4, 2, 3);
    CHECK(f.phi().delta().congruent(f.delta().phi(), 6));
    CHECK(f.phi().congruent(f.pow(5), 1));
  }
}

TEST_CASE("jet-order budget") {
  auto R = t_ring(5, 8, 2);
  auto top = JetPolynomial::variable(R, 0, 2);
  CHECK_THROWS_AS(top.phi(), budget_error);
  CHECK_THROWS_AS(top.delta(), budget_error);
}

TEST_CASE("filtration levels") {
  auto R = t_ring(5, 8, 2);
  auto T2 = JetPolynomial::variable(R, 0, 2);
  CHECK(T2.mul_pow_p(2).filtration_level() == 0);
  CHECK(JetPolynomial::variable(R, 0, 1).filtration_level() == 1);
  CHECK(JetPolynomial::variable(R, 0, 0).filtration_level() == 0);

  // delta(F^i) in F^(i+1), phi(F^i) in F^i on randomized filtered elements.
  auto R4 = t_ring(5, 10, 4);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> dc(1, 500);
  for (int trial = 0; trial < 20; ++trial) {
    for (long i = 0; i <= 2; ++i) {
      JetPolynomial f(R4);
      for (long k = 0; k <= 2 - i && i + k <= 3; ++k) {
        Mono m;
        m.e[static_cast<size_t>(R4->slot(0, static_cast<int>(i + k)))] = 2;
        m.e[static_cast<size_t>(R4->slot(0, 0))] = 1;
        f = f + JetPolynomial::monomial(
                    R4, m, PadicScalar::from_int(5, 10, dc(rng)).mul_pow_p(k));
      }
      auto lf = f.filtration_level();
      REQUIRE(lf.has_value());
      CHECK(*lf <= i);
      auto ld = f.delta().filtration_level();
      REQUIRE(ld.has_value());
      CHECK(*ld <= i + 1);
      auto lp = f.phi().filtration_level();
      REQUIRE(lp.has_value());
      CHECK(*lp <= i);
    }
  }
}

TEST_CASE("mod-p reduction is reduced on monomials") {
  auto G = gm_ring();
  auto m = parse_jet(G, "2*x^-3*x'^2");
  for (int k = 1; k <= 3; ++k) CHECK(!m.pow(k).at_prec(1).is_zero());
}

TEST_CASE("render parse round trip") {
  auto G = gm_ring();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    auto f = rnd_poly(rng, G, 5, 3, 4);
    auto g = parse_jet(G, f.to_text());
    CHECK(f == g);
  }
  auto lau = parse_jet(G, "3*p^2*x^-7*x''^2 + 1*x");
  CHECK(parse_jet(G, lau.to_text()) == lau);
}

TEST_CASE("jet exp and log") {
  auto R = t_ring(5, 8, 2);
  auto s = parse_jet(R, "1*p^1*T + 2*p^1*T'");
  auto e = jet_exp(s);
  CHECK(jet_log1p(e - JetPolynomial::from_int(R, 1)).congruent(s, 5));
  auto inv = jet_inv_one_plus(s);
  CHECK(((JetPolynomial::from_int(R, 1) + s) * inv)
            .congruent(JetPolynomial::from_int(R, 1), 6));
  // (1+s)^(1/2) squared recovers 1+s.
  auto half = jet_binomial_pow(s, 1, 2);
  CHECK((half * half).congruent(JetPolynomial::from_int(R, 1) + s, 5));
}

TEST_CASE("series truncation flag") {
  JetRing Rspec;
  Rspec.budget.p = 5;
  Rspec.budget.N = 8;
  Rspec.names = {"T", "U"};
  Rspec.max_order = 2;
  Rspec.trunc_degree = 10;
  auto R = make_ring(Rspec);
  auto T = JetPolynomial::variable(R, 0, 0);
  auto f = T.pow(6);
  CHECK(!f.truncated());
  auto g = f * f;  // degree 12 > 10
  CHECK(g.truncated());
  CHECK(g.is_zero());
}
