#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qformff/ff.hpp"
#include "qformff/poly.hpp"

namespace qff {

/// Element of K = F_q(x) as a reduced fraction with monic denominator.
/// Zero is 0/1.
class RatFunc {
 public:
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc from_int(FieldPtr field, std::int64_t n);
  static RatFunc constant(const FFElem& c);
  static RatFunc x(FieldPtr field);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc inverse() const;
  RatFunc operator-() const { return RatFunc(-num_, den_, Normalized{}); }

  friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator/(const RatFunc& f, const RatFunc& g);
  friend bool operator==(const RatFunc& f, const RatFunc& g) = default;

 private:
  struct Normalized {};
  RatFunc(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// A place of F_q(x): a monic irreducible polynomial or the infinite place.
class Place {
 public:
  /// Validates that `poly` is monic and irreducible.
  static Place finite(Poly poly);
  static Place infinite(FieldPtr base);

  bool is_infinite() const { return !poly_.has_value(); }
  /// Place polynomial; only for finite places.
  const Poly& poly() const;
  unsigned degree() const { return poly_ ? static_cast<unsigned>(poly_->degree()) : 1u; }
  const FieldPtr& base_field() const { return base_; }

  friend bool operator==(const Place& a, const Place& b);
  /// Finite places by (degree, coefficients); the infinite place last.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);

 private:
  Place(FieldPtr base, std::optional<Poly> poly) : base_(std::move(base)), poly_(std::move(poly)) {}

  FieldPtr base_;
  std::optional<Poly> poly_;
};

/// Residue field F_q[x]/(P) at a finite place, F_q at infinity. Degree-one
/// places reuse the constant field itself.
class ResidueField {
 public:
  explicit ResidueField(const Place& place);

  const FieldPtr& base() const { return base_; }
  const FieldPtr& field() const { return field_; }
  const std::optional<Poly>& modulus() const { return modulus_; }
  std::uint64_t order() const { return field_->order(); }

  /// Residue class of a polynomial f modulo the place polynomial.
  Code reduce(const Poly& f) const;

 private:
  FieldPtr base_;
  std::optional<Poly> modulus_;
  FieldPtr field_;
};

ResidueField residue_field(const Place& place);

int valuation(const RatFunc& f, const Place& place);

/// Residue of f * pi^(-v) with pi = P(x) at a finite place and pi = 1/x at
/// infinity.
FFElem unit_residue(const RatFunc& f, const Place& place);
FFElem unit_residue(const RatFunc& f, const Place& place, const ResidueField& kappa);

struct PlaceValuation {
  Place place;
  int valuation;

  friend bool operator==(const PlaceValuation&, const PlaceValuation&) = default;
};

/// Places with nonzero valuation, finite ones in canonical order, then infinity.
std::vector<PlaceValuation> support(const RatFunc& f, std::uint64_t seed = kDefaultSeed);

/// Monic irreducible factors of a nonzero polynomial, as places.
std::vector<Place> finite_places_dividing(const Poly& f, std::uint64_t seed = kDefaultSeed);

/// 0 counts as a square.
bool is_global_square(const RatFunc& f);

}  // namespace qff
