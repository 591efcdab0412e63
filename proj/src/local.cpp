#include "qformff/local.hpp"

namespace qff {

DiagForm::DiagForm(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(Errc::DegenerateForm, "a quadratic form needs at least one coefficient");
  for (const auto& a : coeffs_) {
    if (a.is_zero()) fail(Errc::DegenerateForm, "zero coefficient in a diagonal form");
    if (!same_field(a.field(), coeffs_.front().field())) fail(Errc::FieldMismatch, "coefficients over different fields");
  }
}

RatFunc DiagForm::determinant() const {
  RatFunc d = coeffs_.front();
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d = d * coeffs_[i];
  return d;
}

RatFunc DiagForm::discriminant() const {
  const std::size_t n = dim();
  const RatFunc d = determinant();
  return (n * (n - 1) / 2) % 2 == 0 ? d : -d;
}

DiagForm DiagForm::scaled(const RatFunc& c) const {
  std::vector<RatFunc> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return DiagForm(std::move(out));
}

DiagForm orthogonal_sum(const DiagForm& a, const DiagForm& b) {
  std::vector<RatFunc> out = a.coeffs_;
  out.insert(out.end(), b.coeffs_.begin(), b.coeffs_.end());
  return DiagForm(std::move(out));
}

namespace {

struct LocalEntry {
  int valuation;
  Code unit;
};

LocalEntry local_entry(const RatFunc& a, const Place& place, const ResidueField& kappa) {
  return {valuation(a, place), unit_residue(a, place, kappa).code()};
}

bool odd(int v) { return v % 2 != 0; }

int symbol(const LocalEntry& a, const LocalEntry& b, const GaloisField& K) {
  int s = 1;
  if (odd(a.valuation) && odd(b.valuation)) s *= K.quad_char(K.neg(1));
  if (odd(b.valuation)) s *= K.quad_char(a.unit);
  if (odd(a.valuation)) s *= K.quad_char(b.unit);
  return s;
}

std::vector<LocalEntry> local_entries(const DiagForm& q, const Place& place, const ResidueField& kappa) {
  std::vector<LocalEntry> out;
  out.reserve(q.dim());
  for (const auto& a : q.coeffs()) out.push_back(local_entry(a, place, kappa));
  return out;
}

}  // namespace

SquareClass local_square_class(const RatFunc& a, const Place& place) {
  const auto u = unit_residue(a, place);
  return {odd(valuation(a, place)), quad_char(u)};
}

int hilbert_symbol(const RatFunc& a, const RatFunc& b, const Place& place) {
  if (a.is_zero() || b.is_zero()) fail(Errc::ZeroElement, "Hilbert symbol of zero");
  const ResidueField kappa(place);
  return symbol(local_entry(a, place, kappa), local_entry(b, place, kappa), *kappa.field());
}

int hasse_invariant(const DiagForm& q, const Place& place) {
  const ResidueField kappa(place);
  const auto entries = local_entries(q, place, kappa);
  int h = 1;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) h *= symbol(entries[i], entries[j], *kappa.field());
  }
  return h;
}

SpringerSplit springer_split(const DiagForm& q, const Place& place) {
  const ResidueField kappa(place);
  SpringerSplit split{{kappa.field(), {}}, {kappa.field(), {}}};
  for (const auto& e : local_entries(q, place, kappa)) {
    (odd(e.valuation) ? split.uniformizer_part : split.unit_part).coeffs.push_back(e.unit);
  }
  return split;
}

unsigned residue_aniso_dim(const ResidueForm& r) {
  const std::size_t n = r.dim();
  if (n == 0) return 0;
  if (n % 2 == 1) return 1;
  const auto& K = *r.field;
  Code d = 1;
  for (Code c : r.coeffs) d = K.mul(d, c);
  if ((n * (n - 1) / 2) % 2 == 1) d = K.neg(d);
  return K.is_square(d) ? 0 : 2;
}

bool local_is_isotropic(const DiagForm& q, const Place& place) {
  const auto [q0, q1] = springer_split(q, place);
  return residue_aniso_dim(q0) < q0.dim() || residue_aniso_dim(q1) < q1.dim();
}

bool local_is_hyperbolic_by_invariants(const DiagForm& q, const Place& place) {
  if (q.dim() % 2 != 0) return false;
  if (!local_square_class(q.discriminant(), place).is_trivial()) return false;
  const std::size_t m = q.dim() / 2;
  const RatFunc minus_one = RatFunc::from_int(q.field(), -1);
  const int minus_one_symbol = hilbert_symbol(minus_one, minus_one, place);
  const int target = (m * (m - 1) / 2) % 2 == 0 ? 1 : minus_one_symbol;
  return hasse_invariant(q, place) == target;
}

bool local_is_hyperbolic_by_residue_forms(const DiagForm& q, const Place& place) {
  if (q.dim() % 2 != 0) return false;
  const auto [q0, q1] = springer_split(q, place);
  return residue_aniso_dim(q0) == 0 && residue_aniso_dim(q1) == 0;
}

bool local_is_hyperbolic(const DiagForm& q, const Place& place) {
  const bool by_residue = local_is_hyperbolic_by_residue_forms(q, place);
  if (by_residue != local_is_hyperbolic_by_invariants(q, place)) {
    fail(Errc::InvariantViolation, "local hyperbolicity routes disagree");
  }
  return by_residue;
}

unsigned local_anisotropic_dimension(const DiagForm& q, const Place& place) {
  const auto [q0, q1] = springer_split(q, place);
  return residue_aniso_dim(q0) + residue_aniso_dim(q1);
}

unsigned local_length(const RatFunc& a, const Place& place) {
  if (a.is_zero()) fail(Errc::ZeroElement, "length of zero");
  const ResidueField kappa(place);
  const auto e = local_entry(a, place, kappa);
  const auto& K = *kappa.field();
  if (!odd(e.valuation)) return K.is_square(e.unit) ? 1 : 2;
  return K.is_square(K.neg(1)) ? 2 : 3;
}

}  // namespace qff
