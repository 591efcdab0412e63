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

// Valuation by repeated exact division; x^-1 degree count at infinity.
int valuation_by_division(const RatFunc& f, const Place& place) {
  if (place.is_infinite()) return f.den().degree() - f.num().degree();
  auto count = [&](Poly g) {
    int n = 0;
    while ((g % place.poly()).is_zero()) {
      g = g / place.poly();
      ++n;
    }
    return n;
  };
  return count(f.num()) - count(f.den());
}

}  // namespace

TEST_CASE("normalization") {
  const RatFunc a = R(F3(), {0, 0, 2}, {0, 2});
  CHECK(a.num() == P(F3(), {0, 1}));
  CHECK(a.den().is_one());
  const RatFunc b = R(F5(), {-1, 0, 1}, {-1, 1});
  CHECK(b.num() == P(F5(), {1, 1}));
  CHECK(b.den().is_one());
  const RatFunc c = R(F5(), {1}, {0, 2});
  CHECK(c.den().is_monic());
  CHECK(c.num() == P(F5(), {3}));
  CHECK(R(F3(), {0}, {1, 1}) == C(F3(), 0));
}

TEST_CASE("field operations on random elements") {
  Rng rng(3);
  for (const auto& F : {F3(), F5(), F9()}) {
    for (int i = 0; i < 100; ++i) {
      const RatFunc f = rng.nonzero_ratfunc(F, 3), g = rng.nonzero_ratfunc(F, 3);
      if (!f.is_zero()) CHECK(f * f.inverse() == C(F, 1));
      CHECK((f + g) - g == f);
      if (!g.is_zero()) CHECK((f / g) * g == f);
      CHECK(f.den().is_monic());
      CHECK(gcd(f.num().is_zero() ? f.den() : f.num(), f.den()).is_one());
    }
  }
}

TEST_CASE("valuation examples") {
  const RatFunc f = R(F3(), {0, 0, 1}, {1, 1});
  CHECK(valuation(f, at(F3(), {0, 1})) == 2);
  CHECK(valuation(f, inf(F3())) == -1);
  CHECK(valuation(f, at(F3(), {1, 1})) == -1);
  CHECK(valuation(f, at(F3(), {1, 0, 1})) == 0);
}

TEST_CASE("valuation properties") {
  Rng rng(5);
  for (const auto& F : {F3(), F5(), F9()}) {
    for (int i = 0; i < 150; ++i) {
      const RatFunc f = rng.nonzero_ratfunc(F, 4), g = rng.nonzero_ratfunc(F, 4);
      if (f.is_zero() || g.is_zero()) continue;
      const Place p = rng.place(F, 2);
      CHECK(valuation(f, p) == valuation_by_division(f, p));
      CHECK(valuation(f * g, p) == valuation(f, p) + valuation(g, p));
      if (!(f + g).is_zero()) CHECK(valuation(f + g, p) >= std::min(valuation(f, p), valuation(g, p)));
      // Unit residues are multiplicative.
      CHECK(unit_residue(f * g, p) == unit_residue(f, p) * unit_residue(g, p));
    }
  }
}

TEST_CASE("degree formula over the support") {
  Rng rng(17);
  for (const auto& F : {F3(), F5(), F9(), F27()}) {
    for (int i = 0; i < 80; ++i) {
      const RatFunc f = rng.nonzero_ratfunc(F, 5);
      if (f.is_zero()) continue;
      long total = 0;
      for (const auto& [p, v] : support(f)) {
        CHECK(v != 0);
        total += static_cast<long>(p.degree()) * v;
      }
      CHECK(total == 0);
    }
  }
}

TEST_CASE("unit residue examples") {
  CHECK(unit_residue(R(F5(), {1, 0, 2}), inf(F5())) == F5().element(2));
  CHECK(unit_residue(R(F3(), {0, 1}), at(F3(), {0, 1})) == F3().element(1));
  CHECK(unit_residue(R(F3(), {1, 1}, {0, 1}), at(F3(), {0, 1})) == F3().element(1));
  // 2x^2 + 1 at x^2 + 1 over F_3: residue 2*(-1) + 1 = -1.
  const auto r = unit_residue(R(F3(), {1, 0, 2}), at(F3(), {1, 0, 1}));
  CHECK(r.field()->order() == 9);
  CHECK(r.code() == 2);
}

TEST_CASE("support examples") {
  const auto s1 = support(R(F3(), {0, 1}));
  REQUIRE(s1.size() == 2);
  CHECK(s1[0].place == at(F3(), {0, 1}));
  CHECK(s1[0].valuation == 1);
  CHECK(s1[1].place == inf(F3()));
  CHECK(s1[1].valuation == -1);
  const auto s2 = support(R(F3(), {1, 0, 1}, {0, 1}));
  REQUIRE(s2.size() == 3);
  CHECK(s2[0].place == at(F3(), {0, 1}));
  CHECK(s2[0].valuation == -1);
  CHECK(s2[1].place == at(F3(), {1, 0, 1}));
  CHECK(s2[1].valuation == 1);
  CHECK(s2[2].place == inf(F3()));
  CHECK(s2[2].valuation == -1);
  CHECK(support(C(F5(), 2)).empty());
}

TEST_CASE("global squares") {
  CHECK(is_global_square(R(F3(), {1, 2, 1}, {0, 0, 1})));
  CHECK_FALSE(is_global_square(R(F5(), {0, 0, 2})));
  CHECK_FALSE(is_global_square(R(F3(), {0, 1})));
  CHECK_FALSE(is_global_square(R(F9(), {0, 1})));
  CHECK(is_global_square(C(F9(), -1)));
  Rng rng(29);
  for (int i = 0; i < 50; ++i) {
    const RatFunc f = rng.nonzero_ratfunc(F5(), 3);
    if (f.is_zero()) continue;
    CHECK(is_global_square(f * f));
    CHECK_FALSE(is_global_square(f * f * C(F5(), 2)));
  }
}

TEST_CASE("residue fields") {
  CHECK(residue_field(at(F3(), {1, 0, 1})).order() == 9);
  CHECK(residue_field(inf(F5())).order() == 5);
  const auto k = residue_field(at(F9(), {0, 1}));
  CHECK(k.order() == 9);
  CHECK(same_field(k.field(), F9().field()));
  CHECK(residue_field(at(F3(), {1, 2, 0, 1})).order() == 27);
}

TEST_CASE("place ordering and identity") {
  const Place a = at(F3(), {0, 1}), b = at(F3(), {1, 0, 1}), c = inf(F3());
  CHECK(a < b);
  CHECK(b < c);
  CHECK(a == at(F3(), {0, 1}));
  CHECK(c.is_infinite());
  CHECK(c.degree() == 1);
}

TEST_CASE("error paths") {
  CHECK(code_of([] { (void)R(F3(), {1}, {0}); }) == Errc::ZeroDenominator);
  CHECK(code_of([] { (void)C(F3(), 0).inverse(); }) == Errc::DivisionByZero);
  CHECK(code_of([] { (void)valuation(C(F3(), 0), inf(F3())); }) == Errc::ZeroElement);
  CHECK(code_of([] { (void)unit_residue(C(F3(), 0), inf(F3())); }) == Errc::ZeroElement);
  CHECK(code_of([] { (void)support(C(F3(), 0)); }) == Errc::ZeroElement);
  CHECK(code_of([] { (void)at(F5(), {1, 0, 1}); }) == Errc::NotIrreducible);
  CHECK(code_of([] { (void)at(F3(), {2}); }) == Errc::DegreeTooSmall);
  CHECK(code_of([] { (void)at(F3(), {1, 2}); }) == Errc::NotIrreducible);
  CHECK(code_of([] { (void)inf(F3()).poly(); }) != Errc::InvalidArgument);
}
