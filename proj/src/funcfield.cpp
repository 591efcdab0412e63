#include "qformff/funcfield.hpp"

#include <algorithm>
#include <limits>

namespace qff {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(Errc::ZeroDenominator, "rational function with zero denominator");
  if (!same_field(num_.field(), den_.field())) fail(Errc::FieldMismatch, "numerator and denominator fields differ");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), 1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (!den_.is_monic()) {
    const Code s = num_.field()->inv(den_.coeffs().back());
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

RatFunc RatFunc::from_int(FieldPtr field, std::int64_t n) {
  const Code c = field->from_int(n);
  return RatFunc(Poly::constant(std::move(field), c));
}

RatFunc RatFunc::constant(const FFElem& c) { return RatFunc(Poly::constant(c)); }

RatFunc RatFunc::x(FieldPtr field) { return RatFunc(Poly::x(std::move(field))); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
  return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) {
  return RatFunc(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator*(const RatFunc& f, const RatFunc& g) { return RatFunc(f.num_ * g.num_, f.den_ * g.den_); }

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
  if (g.is_zero()) fail(Errc::DivisionByZero, "division by zero rational function");
  return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
}

// ---------------------------------------------------------------------------

Place Place::finite(Poly poly) {
  if (poly.degree() < 1) fail(Errc::DegreeTooSmall, "place polynomial must have degree >= 1");
  if (!poly.is_monic()) fail(Errc::NotIrreducible, "place polynomial must be monic");
  if (!is_irreducible(poly)) fail(Errc::NotIrreducible, "place polynomial must be irreducible");
  FieldPtr base = poly.field();
  return Place(std::move(base), std::move(poly));
}

Place Place::infinite(FieldPtr base) { return Place(std::move(base), std::nullopt); }

const Poly& Place::poly() const {
  if (!poly_) fail(Errc::InvariantViolation, "the infinite place has no polynomial");
  return *poly_;
}

bool operator==(const Place& a, const Place& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite() && same_field(a.base_, b.base_);
  return *a.poly_ == *b.poly_;
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return *a.poly_ <=> *b.poly_;
}

// ---------------------------------------------------------------------------

ResidueField::ResidueField(const Place& place) : base_(place.base_field()) {
  if (place.is_infinite() || place.degree() == 1) {
    if (!place.is_infinite()) modulus_ = place.poly();
    field_ = base_;
    return;
  }
  modulus_ = place.poly();
  field_ = GaloisField::extension(base_, std::vector<Code>(modulus_->coeffs().begin(), modulus_->coeffs().end()));
}

Code ResidueField::reduce(const Poly& f) const {
  if (!modulus_) fail(Errc::InvariantViolation, "reduction at the infinite place");
  const Poly r = f % *modulus_;
  if (modulus_->degree() == 1) return r.coeff(0);
  return field_->from_digits(r.coeffs());
}

ResidueField residue_field(const Place& place) { return ResidueField(place); }

int valuation(const RatFunc& f, const Place& place) {
  if (f.is_zero()) fail(Errc::ZeroElement, "valuation of zero");
  if (place.is_infinite()) return f.den().degree() - f.num().degree();
  const int vn = static_cast<int>(multiplicity(f.num(), place.poly()));
  const int vd = static_cast<int>(multiplicity(f.den(), place.poly()));
  return vn - vd;
}

FFElem unit_residue(const RatFunc& f, const Place& place) { return unit_residue(f, place, ResidueField(place)); }

FFElem unit_residue(const RatFunc& f, const Place& place, const ResidueField& kappa) {
  if (f.is_zero()) fail(Errc::ZeroElement, "unit residue of zero");
  const auto& K = *kappa.field();
  if (place.is_infinite()) {
    const Code r = K.div(f.num().coeffs().back(), f.den().coeffs().back());
    return {kappa.field(), r};
  }
  Poly num = f.num();
  Poly den = f.den();
  const Poly& P = place.poly();
  for (;;) {
    auto [q, r] = divmod(num, P);
    if (!r.is_zero()) break;
    num = std::move(q);
  }
  for (;;) {
    auto [q, r] = divmod(den, P);
    if (!r.is_zero()) break;
    den = std::move(q);
  }
  return {kappa.field(), K.div(kappa.reduce(num), kappa.reduce(den))};
}

std::vector<Place> finite_places_dividing(const Poly& f, std::uint64_t seed) {
  std::vector<Place> out;
  for (auto& fac : factor(f, seed).factors) out.push_back(Place::finite(std::move(fac.poly)));
  return out;
}

std::vector<PlaceValuation> support(const RatFunc& f, std::uint64_t seed) {
  if (f.is_zero()) fail(Errc::ZeroElement, "support of zero");
  std::vector<PlaceValuation> out;
  for (const auto& fac : factor(f.num(), seed).factors) {
    out.push_back({Place::finite(fac.poly), static_cast<int>(fac.multiplicity)});
  }
  for (const auto& fac : factor(f.den(), seed).factors) {
    out.push_back({Place::finite(fac.poly), -static_cast<int>(fac.multiplicity)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.place < b.place; });
  const Place inf = Place::infinite(f.field());
  if (const int v = valuation(f, inf); v != 0) out.push_back({inf, v});
  return out;
}

bool is_global_square(const RatFunc& f) { return poly_is_square(f.num()) && poly_is_square(f.den()); }

}  // namespace qff
