#include "qformff/global.hpp"

#include <algorithm>

namespace qff {

std::vector<Place> relevant_places(const DiagForm& q, std::uint64_t seed) {
  std::vector<Place> places;
  for (const auto& a : q.coeffs()) {
    for (const auto* part : {&a.num(), &a.den()}) {
      if (part->degree() < 1) continue;
      for (auto& pl : finite_places_dividing(*part, seed)) places.push_back(std::move(pl));
    }
  }
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  places.push_back(Place::infinite(q.field()));
  return places;
}

bool is_isotropic(const DiagForm& q, std::uint64_t seed) {
  if (q.dim() <= 1) return false;
  if (q.dim() == 2) return is_global_square(q.discriminant());
  for (const auto& place : relevant_places(q, seed)) {
    if (!local_is_isotropic(q, place)) return false;
  }
  return true;
}

bool is_hyperbolic(const DiagForm& q, std::uint64_t seed) {
  if (q.dim() % 2 != 0) return false;
  if (!is_global_square(q.discriminant())) return false;
  for (const auto& place : relevant_places(q, seed)) {
    if (!local_is_hyperbolic(q, place)) return false;
  }
  return true;
}

unsigned anisotropic_dimension(const DiagForm& q, std::uint64_t seed) {
  unsigned best = 0;
  for (const auto& place : relevant_places(q, seed)) {
    best = std::max(best, local_anisotropic_dimension(q, place));
    if (best == 4) break;
  }
  return best;
}

unsigned witt_index(const DiagForm& q, std::uint64_t seed) {
  return static_cast<unsigned>((q.dim() - anisotropic_dimension(q, seed)) / 2);
}

WittData witt_data(const DiagForm& q, std::uint64_t seed) {
  WittData w{};
  w.dim = static_cast<unsigned>(q.dim());
  w.aniso_dim = anisotropic_dimension(q, seed);
  w.witt_index = (w.dim - w.aniso_dim) / 2;
  w.hyperbolic = is_hyperbolic(q, seed);
  w.isotropic = is_isotropic(q, seed);
  const bool coherent = w.aniso_dim <= 4 && w.aniso_dim <= w.dim && (w.dim - w.aniso_dim) % 2 == 0 &&
                        w.hyperbolic == (w.aniso_dim == 0) && w.isotropic == (w.aniso_dim < w.dim);
  if (!coherent) fail(Errc::InvariantViolation, "inconsistent Witt data");
  return w;
}

unsigned length(const RatFunc& a, std::uint64_t seed) {
  if (a.is_zero()) fail(Errc::ZeroElement, "length of zero");
  if (is_global_square(a)) return 1;
  unsigned best = 2;
  for (const auto& [place, v] : support(a, seed)) {
    if (v % 2 == 0) continue;
    const unsigned l = local_length(a, place);
    if (l == 3) return 3;
    best = std::max(best, l);
  }
  return best;
}

unsigned level(const ConstField& F) { return F.q() % 4 == 1 ? 1 : 2; }

unsigned pythagoras_number(const ConstField& F) { return F.q() % 4 == 1 ? 2 : 3; }

}  // namespace qff
