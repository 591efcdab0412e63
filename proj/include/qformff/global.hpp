#pragma once

#include <cstdint>
#include <vector>

#include "qformff/local.hpp"

namespace qff {

/// Witt decomposition data of a form over F_q(x).
struct WittData {
  unsigned dim;
  unsigned aniso_dim;
  unsigned witt_index;
  bool hyperbolic;
  bool isotropic;

  friend bool operator==(const WittData&, const WittData&) = default;
};

/// Finite places dividing some coefficient (numerator or denominator), in
/// canonical order, followed by the infinite place. Every other place sees
/// only unit coefficients.
std::vector<Place> relevant_places(const DiagForm& q, std::uint64_t seed = kDefaultSeed);

bool is_isotropic(const DiagForm& q, std::uint64_t seed = kDefaultSeed);
bool is_hyperbolic(const DiagForm& q, std::uint64_t seed = kDefaultSeed);

/// Maximum of the local anisotropic dimensions over relevant_places(q).
unsigned anisotropic_dimension(const DiagForm& q, std::uint64_t seed = kDefaultSeed);
unsigned witt_index(const DiagForm& q, std::uint64_t seed = kDefaultSeed);
/// Throws InvariantViolation if the computed data is inconsistent.
WittData witt_data(const DiagForm& q, std::uint64_t seed = kDefaultSeed);

/// Least n such that a is a sum of n squares in F_q(x); a nonzero.
unsigned length(const RatFunc& a, std::uint64_t seed = kDefaultSeed);

/// Level s(K) of K = F_q(x): 1 if q = 1 mod 4, else 2.
unsigned level(const ConstField& F);
/// Pythagoras number P(K) of K = F_q(x): 2 if q = 1 mod 4, else 3.
unsigned pythagoras_number(const ConstField& F);

}  // namespace qff
