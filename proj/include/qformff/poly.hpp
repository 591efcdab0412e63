#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qformff/ff.hpp"

namespace qff {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2021'0f0fULL;

/// Dense univariate polynomial over a finite field, lowest degree first.
/// Never stores trailing zeros; the zero polynomial has no coefficients and
/// degree() == -1.
class Poly {
 public:
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Code> coeffs);

  static Poly constant(const FFElem& c);
  static Poly constant(FieldPtr field, Code c);
  static Poly x(FieldPtr field);
  static Poly monomial(FieldPtr field, Code c, unsigned degree);

  const FieldPtr& field() const { return field_; }
  std::span<const Code> coeffs() const { return coeffs_; }
  Code coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Leading coefficient; zero for the zero polynomial.
  FFElem lc() const { return {field_, coeffs_.empty() ? 0 : coeffs_.back()}; }
  Poly monic() const;
  Poly scaled(Code c) const;
  Poly derivative() const;
  Code eval(Code at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g);

  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(Poly f, const Poly& g) { return f *= g; }
  friend bool operator==(const Poly& f, const Poly& g);

  /// Canonical order: by degree, then lexicographically on the coefficient
  /// codes (lowest degree first).
  friend std::strong_ordering operator<=>(const Poly& f, const Poly& g);

 private:
  void trim();
  void check_field(const Poly& g) const;

  FieldPtr field_;
  std::vector<Code> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);

/// Monic gcd.
Poly gcd(const Poly& f, const Poly& g);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);
Poly pow(const Poly& base, unsigned e);

struct Factor {
  Poly poly;
  unsigned multiplicity;

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Factorization {
  FFElem unit;
  std::vector<Factor> factors;

  Poly expand() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// f = lc(f) * prod g_i^{m_i} with g_i monic, squarefree and pairwise coprime,
/// sorted by multiplicity.
std::vector<Factor> squarefree_decomposition(const Poly& f);

/// Complete factorization (squarefree, distinct-degree, Cantor-Zassenhaus).
/// The seed only influences running time.
Factorization factor(const Poly& f, std::uint64_t seed = kDefaultSeed);

bool is_irreducible(const Poly& f);

/// Number of times p divides f (f nonzero, deg p >= 1).
unsigned multiplicity(const Poly& f, const Poly& p);

bool poly_is_square(const Poly& f);
std::optional<Poly> poly_sqrt(const Poly& f);

}  // namespace qff
