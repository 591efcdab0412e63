#include <doctest.h>

#include "test_support.hpp"

using namespace qff;
using namespace qff::test;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  return Errc::InvalidArgument;
}

// Monic polynomial of degree d with index idx in base-q digits.
Poly monic_by_index(const ConstField& F, int d, std::uint64_t idx) {
  std::vector<Code> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i < d; ++i) {
    c[static_cast<std::size_t>(i)] = idx % F.q();
    idx /= F.q();
  }
  c.back() = 1;
  return Poly(F.field(), c);
}

}  // namespace

TEST_CASE("arithmetic examples") {
  const auto F = F3();
  CHECK(P(F, {1, 1}) * P(F, {2, 1}) == P(F, {2, 0, 1}));
  const auto [q, r] = divmod(P(F5(), {0, 0, 0, 1}), P(F5(), {1, 0, 1}));
  CHECK(q == P(F5(), {0, 1}));
  CHECK(r == P(F5(), {0, -1}));
  const Poly f = P(F, {1, 2, 0, 1});
  CHECK(f + Poly(F.field()) == f);
  CHECK(Poly(F.field()).degree() == -1);
}

TEST_CASE("gcd examples") {
  CHECK(gcd(P(F3(), {-1, 0, 1}), P(F3(), {-1, 1})) == P(F3(), {2, 1}));
  CHECK(gcd(P(F5(), {2, 4}), Poly(F5().field())) == P(F5(), {3, 1}));
  CHECK(gcd(P(F5(), {1, 0, 1}), P(F5(), {2, 0, 1})).is_one());
}

TEST_CASE("squarefree decomposition examples") {
  const auto F = F3();
  const auto cube = squarefree_decomposition(pow(P(F, {1, 1}), 3));
  REQUIRE(cube.size() == 1);
  CHECK(cube[0] == Factor{P(F, {1, 1}), 3});
  const auto sf5 = squarefree_decomposition(P(F5(), {0, 0, 1, 1}));
  REQUIRE(sf5.size() == 2);
  CHECK(sf5[0] == Factor{P(F5(), {1, 1}), 1});
  CHECK(sf5[1] == Factor{P(F5(), {0, 1}), 2});
  const auto already = squarefree_decomposition(P(F, {0, -1, 0, 1}));
  REQUIRE(already.size() == 1);
  CHECK(already[0] == Factor{P(F, {0, 2, 0, 1}), 1});
}

TEST_CASE("factor examples") {
  const auto F = F3();
  const auto f = factor(P(F, {0, -1, 0, 1}));
  CHECK(f.unit == F.element(1));
  CHECK(f.factors == std::vector<Factor>{{P(F, {0, 1}), 1}, {P(F, {1, 1}), 1}, {P(F, {2, 1}), 1}});
  CHECK(factor(P(F, {1, 0, 1})).factors == std::vector<Factor>{{P(F, {1, 0, 1}), 1}});
  const auto g = factor(P(F5(), {2, 0, 2}));
  CHECK(g.unit == F5().element(2));
  CHECK(g.factors == std::vector<Factor>{{P(F5(), {2, 1}), 1}, {P(F5(), {3, 1}), 1}});
}

TEST_CASE("irreducibility examples") {
  CHECK(is_irreducible(P(F3(), {1, 0, 1})));
  CHECK_FALSE(is_irreducible(P(F5(), {1, 0, 1})));
  CHECK(is_irreducible(P(F9(), {0, 1})));
}

TEST_CASE("square examples") {
  CHECK(poly_is_square(P(F3(), {1, 2, 1})));
  CHECK_FALSE(poly_is_square(P(F5(), {0, 0, 2})));
  CHECK(poly_is_square(P(F5(), {0, 0, 4})));
  CHECK(poly_is_square(Poly(F5().field())));
  const auto r = poly_sqrt(P(F5(), {0, 0, 4}));
  REQUIRE(r.has_value());
  CHECK(*r * *r == P(F5(), {0, 0, 4}));
}

TEST_CASE("is_irreducible agrees with trial division on every small monic polynomial") {
  for (const auto& [F, max_d] : std::vector<std::pair<ConstField, int>>{{F3(), 5}, {F5(), 3}, {F9(), 2}}) {
    for (int d = 1; d <= max_d; ++d) {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= F.q();
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Poly f = monic_by_index(F, d, idx);
        CHECK(is_irreducible(f) == irreducible_by_trial_division(f));
      }
    }
  }
}

TEST_CASE("number of monic irreducibles over F_3 matches the necklace count") {
  // Values of (1/n) sum_{d|n} mu(n/d) 3^d.
  const std::vector<std::uint64_t> expected{3, 3, 8, 18, 48, 116};
  for (int d = 1; d <= 6; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= 3;
    std::uint64_t irreducible = 0;
    for (std::uint64_t idx = 0; idx < count; ++idx) irreducible += is_irreducible(monic_by_index(F3(), d, idx));
    CHECK(irreducible == expected[static_cast<std::size_t>(d - 1)]);
  }
}

TEST_CASE("division identity on random polynomials") {
  Rng rng(7);
  for (const auto& F : {F3(), F9(), F25()}) {
    for (int i = 0; i < 100; ++i) {
      const Poly f = rng.poly(F, 8), g = rng.poly(F, 4);
      const auto [q, r] = divmod(f, g);
      CHECK(q * g + r == f);
      CHECK(r.degree() < g.degree());
      const Poly h = gcd(f, g);
      CHECK(h.is_monic());
      CHECK((f % h).is_zero());
      CHECK((g % h).is_zero());
    }
  }
}

TEST_CASE("factorization reassembles into irreducible, sorted factors") {
  Rng rng(19);
  for (const auto& F : {F3(), F5(), F9(), F27()}) {
    for (int i = 0; i < 60; ++i) {
      const Poly f = rng.poly(F, 9);
      const auto fac = factor(f, rng.below(1000));
      CHECK(fac.expand() == f);
      for (std::size_t j = 0; j < fac.factors.size(); ++j) {
        CHECK(fac.factors[j].poly.is_monic());
        if (F.q() <= 9 && fac.factors[j].poly.degree() <= 6) CHECK(irreducible_by_trial_division(fac.factors[j].poly));
        if (j > 0) CHECK(fac.factors[j - 1].poly < fac.factors[j].poly);
      }
    }
  }
}

TEST_CASE("factorization with repeated factors and p-th powers") {
  const auto F = F3();
  const Poly f = pow(P(F, {1, 1}), 4) * pow(P(F, {1, 0, 1}), 3) * P(F, {0, 1});
  const auto fac = factor(f);
  CHECK(fac.factors == std::vector<Factor>{{P(F, {0, 1}), 1}, {P(F, {1, 1}), 4}, {P(F, {1, 0, 1}), 3}});
  const auto sf = squarefree_decomposition(f);
  Poly back = Poly::constant(F.field(), 1);
  for (const auto& [g, m] : sf) {
    CHECK(gcd(g, g.derivative()).is_one());
    back = back * pow(g, m);
  }
  CHECK(back == f.monic());
}

TEST_CASE("factorization does not depend on the seed") {
  const Poly f = P(F5(), {1, 2, 3, 4, 0, 1, 1, 2});
  const auto a = factor(f, 1), b = factor(f, 99), c = factor(f);
  CHECK(a == b);
  CHECK(b == c);
}

TEST_CASE("square roots of random squares") {
  Rng rng(23);
  for (const auto& F : {F3(), F5(), F9()}) {
    for (int i = 0; i < 100; ++i) {
      const Poly g = rng.poly(F, 5);
      const auto r = poly_sqrt(g * g);
      REQUIRE(r.has_value());
      CHECK((*r == g || *r == -g));
      const Poly n = g * g * P(F, {0, 1});
      CHECK_FALSE(poly_is_square(n));
    }
  }
}

TEST_CASE("multiplicity") {
  const auto F = F3();
  CHECK(multiplicity(pow(P(F, {1, 1}), 5) * P(F, {0, 1}), P(F, {1, 1})) == 5);
  CHECK(multiplicity(P(F, {1, 0, 1}), P(F, {0, 1})) == 0);
}

TEST_CASE("canonical order") {
  const auto F = F3();
  CHECK(P(F, {2, 1}) < P(F, {0, 0, 1}));
  CHECK(P(F, {1, 1}) < P(F, {2, 1}));
  CHECK(P(F, {0, 2, 1}) < P(F, {1, 0, 1}));
}

TEST_CASE("error paths") {
  const auto F = F3();
  CHECK(code_of([&] { (void)divmod(P(F, {1, 1}), Poly(F.field())); }) == Errc::DivisionByZero);
  CHECK(code_of([&] { (void)gcd(Poly(F.field()), Poly(F.field())); }) == Errc::BothZero);
  CHECK(code_of([&] { (void)squarefree_decomposition(Poly(F.field())); }) == Errc::ZeroPolynomial);
  CHECK(code_of([&] { (void)factor(Poly(F.field())); }) == Errc::ZeroPolynomial);
  CHECK(code_of([&] { (void)is_irreducible(P(F, {2})); }) == Errc::DegreeTooSmall);
  CHECK(code_of([&] { (void)(P(F, {1, 1}) + P(F5(), {1, 1})); }) == Errc::FieldMismatch);
}
