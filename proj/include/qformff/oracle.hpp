#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qformff/local.hpp"

namespace qff {

/// Brute-force referees. They use valuations and exhaustive search only,
/// never quadratic characters or symbol formulas.

inline constexpr std::uint64_t kMaxSearchCandidates = 100'000'000;

struct SearchBudget {
  /// Bound on the degree of the polynomial entries that are enumerated.
  unsigned max_entry_degree = 6;
  /// Number of candidate vectors evaluated before giving up (<= 10^8).
  std::uint64_t max_candidates = 20'000'000;
  std::uint64_t seed = kDefaultSeed;
};

/// Exhaustive search for a nonzero isotropic vector over the residue field.
/// Requires |kappa|^dim <= 10^8.
bool oracle_residue_isotropy(const ResidueForm& r);

/// Springer split at the place, then exhaustive residue search on both parts.
bool oracle_local_isotropy(const DiagForm& q, const Place& place);

/// Polynomial vector v != 0 with q(v) = 0, or nullopt if none exists with the
/// enumerated entries of degree <= max_entry_degree (coefficients are first
/// made polynomial by square scaling; the returned vector is for q itself).
///
/// An absent result is exact for the degree bound: either a local
/// obstruction modulo a small power of some place rules out every primitive
/// witness, or the whole bounded search space was enumerated. Throws
/// BudgetExceeded when neither happens within max_candidates.
std::optional<std::vector<Poly>> oracle_isotropy_witness(const DiagForm& q, const SearchBudget& budget = {});

/// b_1..b_n in K with sum b_i^2 = a; n in {1, 2, 3}. When -1 is a sum of
/// n - 1 squares in F_q the answer is the identity
/// a = ((a+1)/2)^2 - ((a-1)/2)^2. Otherwise b_i = c_i / (d * D) is searched,
/// D the denominator of a and deg c_i, deg d <= max_entry_degree, with the
/// exactness contract of oracle_isotropy_witness. Every returned
/// representation has been checked by expansion.
std::optional<std::vector<RatFunc>> oracle_length_upper(const RatFunc& a, unsigned n,
                                                        const SearchBudget& budget = {});

}  // namespace qff
