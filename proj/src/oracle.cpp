#include "qformff/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace qff {

namespace {

// base^e, saturating at cap + 1.
std::uint64_t saturating_power(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Polynomial whose base-q coefficient digits are the digits of idx.
Poly poly_from_index(const FieldPtr& F, std::uint64_t idx) {
  std::vector<Code> cs;
  const std::uint64_t q = F->order();
  while (idx != 0) {
    cs.push_back(idx % q);
    idx /= q;
  }
  return Poly(F, std::move(cs));
}

// Advances an odometer over [0, radix)^n; false after the last state.
bool advance(std::vector<std::uint64_t>& digits, std::uint64_t radix) {
  for (auto& d : digits) {
    if (++d < radix) return true;
    d = 0;
  }
  return false;
}

void check_budget(const SearchBudget& budget) {
  if (budget.max_candidates == 0 || budget.max_candidates > kMaxSearchCandidates) {
    fail(Errc::BudgetExceeded, "search budget must be between 1 and 10^8 candidates");
  }
}

// ---------------------------------------------------------------------------
// Local obstructions: a primitive global zero of sum a_i v_i^2 reduces to a
// zero modulo P^k with v not all divisible by P, for every place P and k.

inline constexpr std::uint64_t kLocalSearchCap = 100'000;

bool has_primitive_zero_mod(const std::vector<Poly>& a, const Poly& P, unsigned precision) {
  const FieldPtr& F = P.field();
  const std::size_t n = a.size();
  const std::uint64_t Q = saturating_power(F->order(), static_cast<std::size_t>(P.degree()), kLocalSearchCap);
  std::vector<Poly> digit;
  digit.reserve(Q);
  for (std::uint64_t i = 0; i < Q; ++i) digit.push_back(poly_from_index(F, i));
  std::vector<Poly> ppow{Poly::constant(F, 1)};
  for (unsigned j = 0; j < precision; ++j) ppow.push_back(ppow.back() * P);

  std::vector<Poly> v(n, Poly(F));
  std::function<bool(unsigned)> dfs = [&](unsigned level) -> bool {
    if (level == precision) return true;
    const Poly& mod = ppow[level + 1];
    // terms[i][d] = a_i * (v_i + d * P^level)^2 mod P^(level+1)
    std::vector<std::vector<Poly>> terms(n);
    std::vector<std::vector<Poly>> lifted(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint64_t d = 0; d < Q; ++d) {
        Poly w = v[i] + digit[d] * ppow[level];
        terms[i].push_back((a[i] * w * w) % mod);
        lifted[i].push_back(std::move(w));
      }
    }
    std::vector<std::uint64_t> idx(n, 0);
    do {
      if (level == 0) {
        // v mod P is nonzero with first nonzero digit 1 (scaling by a unit).
        auto first = std::find_if(idx.begin(), idx.end(), [](auto d) { return d != 0; });
        if (first == idx.end() || *first != 1) continue;
      }
      Poly s(F);
      for (std::size_t i = 0; i < n; ++i) s += terms[i][idx[i]];
      if (!(s % mod).is_zero()) continue;
      std::vector<Poly> saved = v;
      for (std::size_t i = 0; i < n; ++i) v[i] = lifted[i][idx[i]];
      if (dfs(level + 1)) return true;
      v = std::move(saved);
    } while (advance(idx, Q));
    return false;
  };
  return dfs(0);
}

std::vector<Poly> reversed(const std::vector<Poly>& a) {
  int top = 0;
  for (const auto& f : a) top = std::max(top, f.degree());
  std::vector<Poly> out;
  for (const auto& f : a) {
    std::vector<Code> cs(static_cast<std::size_t>(top) + 1, 0);
    for (int j = 0; j <= f.degree(); ++j) cs[static_cast<std::size_t>(top - j)] = f.coeff(static_cast<std::size_t>(j));
    out.emplace_back(f.field(), std::move(cs));
  }
  return out;
}

bool residue_search_fits(const ResidueForm& r) {
  return saturating_power(r.field->order(), r.dim(), kMaxSearchCandidates) <= kMaxSearchCandidates;
}

// Beyond the lifting cap, fall back to exhaustive search on the two residue
// forms of the Springer split at P.
bool obstructed_at(const std::vector<Poly>& a, const Poly& P) {
  const std::uint64_t Q = saturating_power(P.field()->order(), static_cast<std::size_t>(P.degree()), kLocalSearchCap);
  if (saturating_power(Q, a.size(), kLocalSearchCap) > kLocalSearchCap) {
    std::vector<RatFunc> coeffs;
    for (const auto& f : a) coeffs.emplace_back(f);
    const auto [q0, q1] = springer_split(DiagForm(std::move(coeffs)), Place::finite(P));
    if (!residue_search_fits(q0) || !residue_search_fits(q1)) return false;
    return !oracle_residue_isotropy(q0) && !oracle_residue_isotropy(q1);
  }
  unsigned top = 0;
  for (const auto& f : a) top = std::max(top, multiplicity(f, P));
  const unsigned precision = std::min(top + 2, 5u);
  return !has_primitive_zero_mod(a, P, precision);
}

bool locally_obstructed(const std::vector<Poly>& a, std::uint64_t seed) {
  const FieldPtr& F = a.front().field();
  std::vector<Poly> places;
  for (const auto& f : a) {
    if (f.degree() < 1) continue;
    for (auto& fac : factor(f, seed).factors) places.push_back(std::move(fac.poly));
  }
  if (F->order() <= 32) {
    for (Code c = 0; c < F->order(); ++c) places.emplace_back(F, std::vector<Code>{F->neg(c), 1});
  }
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  for (const auto& P : places) {
    if (obstructed_at(a, P)) return true;
  }
  // The infinite place: y^E a_i(1/y) at y = 0.
  return obstructed_at(reversed(a), Poly::x(F));
}

// ---------------------------------------------------------------------------
// Bounded enumeration. Entries 0..n-2 are enumerated (first nonzero entry
// monic), the last entry is solved by a polynomial square root.

std::optional<std::vector<Poly>> enumerate_zero(const std::vector<Poly>& a, bool first_nonzero,
                                                const SearchBudget& budget) {
  const std::size_t n = a.size();
  if (n < 2) return std::nullopt;
  const FieldPtr& F = a.front().field();
  const std::uint64_t q = F->order();
  const std::size_t last = n - 1;
  const Poly& solved = a[last];
  std::uint64_t count = 0;

  for (unsigned d = 0; d <= budget.max_entry_degree; ++d) {
    const std::uint64_t N = saturating_power(q, d + 1, budget.max_candidates);
    const std::uint64_t top = N / q;  // indices >= top have degree exactly d
    if (N > budget.max_candidates || count + top > budget.max_candidates) {
      fail(Errc::BudgetExceeded, "witness search exceeded " + std::to_string(budget.max_candidates) + " candidates");
    }
    std::vector<std::vector<Poly>> table(last);
    for (std::size_t i = 0; i < last; ++i) {
      table[i].reserve(N);
      for (std::uint64_t idx = 0; idx < N; ++idx) {
        Poly v = poly_from_index(F, idx);
        table[i].push_back(a[i] * v * v);
      }
    }
    const std::size_t first_limit = first_nonzero ? 1 : last;
    for (std::size_t i0 = 0; i0 < first_limit; ++i0) {
      // Monic indices for entry i0: q^e + low with low < q^e.
      std::vector<std::uint64_t> monic;
      for (std::uint64_t pe = 1; pe <= top; pe *= q) {
        for (std::uint64_t low = 0; low < pe; ++low) monic.push_back(pe + low);
      }
      const std::size_t free_count = last - i0 - 1;
      for (std::uint64_t m : monic) {
        std::vector<std::uint64_t> rest(free_count, 0);
        do {
          bool full_degree = m >= top;
          for (auto r : rest) full_degree = full_degree || r >= top;
          if (!full_degree) continue;
          if (++count > budget.max_candidates) {
            fail(Errc::BudgetExceeded,
                 "witness search exceeded " + std::to_string(budget.max_candidates) + " candidates");
          }
          Poly s = table[i0][m];
          for (std::size_t j = 0; j < free_count; ++j) s += table[i0 + 1 + j][rest[j]];
          std::optional<Poly> tail;
          if (s.is_zero()) {
            tail = Poly(F);
          } else {
            const int gap = s.degree() - solved.degree();
            if (gap < 0 || gap % 2 != 0) continue;
            if (!F->is_square(F->div(F->neg(s.coeffs().back()), solved.coeffs().back()))) continue;
            auto [quo, rem] = divmod(-s, solved);
            if (!rem.is_zero()) continue;
            tail = poly_sqrt(quo);
            if (!tail || tail->degree() > static_cast<int>(budget.max_entry_degree)) continue;
          }
          std::vector<Poly> v(n, Poly(F));
          v[i0] = poly_from_index(F, m);
          for (std::size_t j = 0; j < free_count; ++j) v[i0 + 1 + j] = poly_from_index(F, rest[j]);
          v[last] = *tail;
          return v;
        } while (advance(rest, N));
      }
    }
  }
  return std::nullopt;
}

// -1 as a sum of k squares in F_q, by exhaustive search (k = 1 or 2).
std::optional<std::vector<Code>> minus_one_as_squares(const GaloisField& K, unsigned k) {
  const std::uint64_t q = K.order();
  if (saturating_power(q, k, kMaxSearchCandidates) > kMaxSearchCandidates) return std::nullopt;
  const Code target = K.neg(1);
  std::vector<std::uint64_t> v(k, 0);
  do {
    Code s = 0;
    for (auto c : v) s = K.add(s, K.mul(c, c));
    if (s == target) return std::vector<Code>(v.begin(), v.end());
  } while (advance(v, q));
  return std::nullopt;
}

Poly evaluate(const std::vector<Poly>& a, const std::vector<Poly>& v) {
  Poly s(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[i] * v[i];
  return s;
}

}  // namespace

bool oracle_residue_isotropy(const ResidueForm& r) {
  const std::size_t n = r.dim();
  if (n == 0) return false;
  const auto& K = *r.field;
  const std::uint64_t Q = K.order();
  if (saturating_power(Q, n, kMaxSearchCandidates) > kMaxSearchCandidates) {
    fail(Errc::BudgetExceeded, "residue form too large for exhaustive search");
  }
  // Projective enumeration: first nonzero coordinate equal to 1.
  for (std::size_t i0 = 0; i0 < n; ++i0) {
    std::vector<std::uint64_t> rest(n - i0 - 1, 0);
    do {
      Code s = r.coeffs[i0];
      for (std::size_t j = 0; j < rest.size(); ++j) {
        const Code v = rest[j];
        s = K.add(s, K.mul(r.coeffs[i0 + 1 + j], K.mul(v, v)));
      }
      if (s == 0) return true;
    } while (advance(rest, Q));
  }
  return false;
}

bool oracle_local_isotropy(const DiagForm& q, const Place& place) {
  const auto [q0, q1] = springer_split(q, place);
  return oracle_residue_isotropy(q0) || oracle_residue_isotropy(q1);
}

std::optional<std::vector<Poly>> oracle_isotropy_witness(const DiagForm& q, const SearchBudget& budget) {
  check_budget(budget);
  // a_i = N_i / D_i scales by D_i^2 to N_i * D_i.
  std::vector<Poly> a;
  for (const auto& c : q.coeffs()) a.push_back(c.num() * c.den());
  if (a.size() < 2 || locally_obstructed(a, budget.seed)) return std::nullopt;

  // Solve for the last coordinate of least degree; the others keep their order.
  std::size_t lowest = a.size() - 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    if (a[i].degree() < a[lowest].degree()) lowest = i;
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i != lowest) order.push_back(i);
  }
  order.push_back(lowest);
  std::vector<Poly> permuted;
  for (auto i : order) permuted.push_back(a[i]);

  auto found = enumerate_zero(permuted, false, budget);
  if (!found) return std::nullopt;
  std::vector<Poly> w(a.size(), Poly(q.field()));
  for (std::size_t k = 0; k < order.size(); ++k) w[order[k]] = (*found)[k];
  if (!evaluate(a, w).is_zero()) fail(Errc::InvariantViolation, "witness search returned a non-zero value");
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = w[i] * q[i].den();
  return w;
}

std::optional<std::vector<RatFunc>> oracle_length_upper(const RatFunc& a, unsigned n, const SearchBudget& budget) {
  if (a.is_zero()) fail(Errc::ZeroElement, "length of zero");
  if (n < 1 || n > 3) fail(Errc::InvalidArgument, "number of squares must be 1, 2 or 3");
  check_budget(budget);
  const FieldPtr& F = a.field();
  // a = A / D^2 with A = N * D.
  const Poly A = a.num() * a.den();
  const Poly& D = a.den();
  if (n == 1) {
    auto root = poly_sqrt(A);
    if (!root) return std::nullopt;
    return std::vector<RatFunc>{RatFunc(*root, D)};
  }
  // a = ((a+1)/2)^2 - ((a-1)/2)^2, and -1 = s_1^2 + ... + s_(n-1)^2 in F_q.
  if (const auto s = minus_one_as_squares(*F, n - 1)) {
    const RatFunc half = RatFunc::from_int(F, 2).inverse();
    const RatFunc one = RatFunc::from_int(F, 1);
    std::vector<RatFunc> terms{(a + one) * half};
    for (Code c : *s) terms.push_back(RatFunc(Poly::constant(F, c)) * (a - one) * half);
    RatFunc total = RatFunc::from_int(F, 0);
    for (const auto& b : terms) total = total + b * b;
    if (!(total == a)) fail(Errc::InvariantViolation, "two-square identity produced a wrong representation");
    return terms;
  }
  // -A d^2 + c_1^2 + ... + c_n^2 = 0 with d != 0.
  std::vector<Poly> coeffs{-A};
  for (unsigned i = 0; i < n; ++i) coeffs.push_back(Poly::constant(F, 1));
  if (locally_obstructed(coeffs, budget.seed)) return std::nullopt;
  auto found = enumerate_zero(coeffs, true, budget);
  if (!found) return std::nullopt;
  const Poly denom = (*found)[0] * D;
  std::vector<RatFunc> terms;
  RatFunc total = RatFunc::from_int(F, 0);
  for (unsigned i = 1; i <= n; ++i) {
    terms.emplace_back((*found)[i], denom);
    total = total + terms.back() * terms.back();
  }
  if (!(total == a)) fail(Errc::InvariantViolation, "sum-of-squares search returned a wrong representation");
  return terms;
}

}  // namespace qff
