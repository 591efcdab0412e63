#include <doctest.h>

#include "test_support.hpp"

using namespace qff;
using namespace qff::test;

namespace {

ResidueForm rform(const ConstField& F, std::vector<std::int64_t> c) {
  ResidueForm r{F.field(), {}};
  for (auto v : c) r.coeffs.push_back(F.element(v).code());
  return r;
}

RatFunc evaluate(const DiagForm& q, const std::vector<Poly>& w) {
  RatFunc s = RatFunc::from_int(q.field(), 0);
  for (std::size_t i = 0; i < q.dim(); ++i) s = s + q[i] * RatFunc(w[i] * w[i]);
  return s;
}

bool nonzero(const std::vector<Poly>& w) {
  for (const auto& p : w) {
    if (!p.is_zero()) return true;
  }
  return false;
}

RatFunc sum_of_squares(const std::vector<RatFunc>& b) {
  RatFunc s = RatFunc::from_int(b.front().field(), 0);
  for (const auto& v : b) s = s + v * v;
  return s;
}

}  // namespace

TEST_CASE("residue isotropy examples") {
  CHECK_FALSE(oracle_residue_isotropy(rform(F3(), {1, 1})));
  CHECK(oracle_residue_isotropy(rform(F5(), {1, 1})));
  CHECK(oracle_residue_isotropy(rform(F3(), {1, 1, 1})));
  CHECK_FALSE(oracle_residue_isotropy(rform(F3(), {})));
  CHECK_FALSE(oracle_residue_isotropy(rform(F7(), {3})));
}

TEST_CASE("local isotropy examples") {
  const auto F3x = at(F3(), {0, 1});
  CHECK_FALSE(oracle_local_isotropy(form({C(F3(), 1), C(F3(), 1), R(F3(), {0, -1})}), F3x));
  CHECK(oracle_local_isotropy(form({C(F5(), 1), C(F5(), 1), R(F5(), {0, -1})}), at(F5(), {0, 1})));
  Rng rng(79);
  for (int i = 0; i < 20; ++i) CHECK(oracle_local_isotropy(rng.form(F3(), 5, 3), rng.place(F3(), 2)));
}

TEST_CASE("witness examples") {
  const auto w = oracle_isotropy_witness(form({C(F5(), 1), C(F5(), 1)}), {.max_entry_degree = 0});
  REQUIRE(w.has_value());
  CHECK(w->at(0) == P(F5(), {1}));
  CHECK((w->at(1) == P(F5(), {2}) || w->at(1) == P(F5(), {3})));
  CHECK_FALSE(oracle_isotropy_witness(form({C(F3(), 1), R(F3(), {0, -1})}), {.max_entry_degree = 4}).has_value());
  const auto h = oracle_isotropy_witness(form({C(F7(), 1), C(F7(), -1)}));
  REQUIRE(h.has_value());
  CHECK(h->at(0) == h->at(1));
}

TEST_CASE("witnesses are isotropic vectors and match the decision procedure") {
  Rng rng(83);
  for (const auto& F : {F3(), F5()}) {
    for (int i = 0; i < 40; ++i) {
      const DiagForm q = rng.form(F, static_cast<std::size_t>(rng.between(2, 4)), 1);
      const auto w = oracle_isotropy_witness(q, {.max_entry_degree = 4});
      if (w) {
        CHECK(nonzero(*w));
        CHECK(evaluate(q, *w).is_zero());
      }
      CHECK(w.has_value() == is_isotropic(q));
    }
  }
}

TEST_CASE("sum-of-squares examples") {
  const auto a = oracle_length_upper(R(F3(), {1, 0, 1}), 2);
  REQUIRE(a.has_value());
  CHECK(sum_of_squares(*a) == R(F3(), {1, 0, 1}));
  const auto b = oracle_length_upper(R(F5(), {0, 1}), 2);
  REQUIRE(b.has_value());
  CHECK(sum_of_squares(*b) == R(F5(), {0, 1}));
  for (unsigned d : {0u, 2u, 4u}) CHECK_FALSE(oracle_length_upper(R(F3(), {0, 1}), 2, {.max_entry_degree = d}));
  const auto c = oracle_length_upper(R(F3(), {0, 1}), 3);
  REQUIRE(c.has_value());
  CHECK(sum_of_squares(*c) == R(F3(), {0, 1}));
  CHECK_FALSE(oracle_length_upper(R(F3(), {0, 1}), 1).has_value());
  const auto s = oracle_length_upper(R(F3(), {1, 2, 1}, {0, 0, 1}), 1);
  REQUIRE(s.has_value());
  CHECK(sum_of_squares(*s) == R(F3(), {1, 2, 1}, {0, 0, 1}));
}

TEST_CASE("sum-of-squares search brackets the computed length") {
  Rng rng(89);
  for (const auto& F : {F3(), F5(), F9()}) {
    for (int i = 0; i < 25; ++i) {
      const RatFunc a = rng.nonzero_ratfunc(F, 2);
      if (a.is_zero()) continue;
      const unsigned n = length(a);
      const auto rep = oracle_length_upper(a, n);
      REQUIRE(rep.has_value());
      CHECK(rep->size() == n);
      CHECK(sum_of_squares(*rep) == a);
      if (n > 1) CHECK_FALSE(oracle_length_upper(a, n - 1).has_value());
    }
  }
}

TEST_CASE("error paths") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& err) {
      return err.code();
    }
    return Errc::InvalidArgument;
  };
  CHECK(code_of([] { (void)oracle_length_upper(R(F3(), {0, 1}), 4); }) == Errc::InvalidArgument);
  CHECK(code_of([] { (void)oracle_length_upper(R(F3(), {0, 1}), 0); }) == Errc::InvalidArgument);
  CHECK(code_of([] { (void)oracle_residue_isotropy(rform(ConstField::prime(10007), {1, 1, 1})); }) ==
        Errc::BudgetExceeded);
  // An anisotropic form with no cheap local certificate exhausts a tiny budget.
  const DiagForm hard = form({C(F3(), 1), R(F3(), {1, 0, 1, 1}), R(F3(), {2, 1, 0, 0, 1}), R(F3(), {0, 1, 1})});
  CHECK(code_of([&] {
          (void)oracle_isotropy_witness(hard, {.max_entry_degree = 6, .max_candidates = 10});
        }) == Errc::BudgetExceeded);
}
