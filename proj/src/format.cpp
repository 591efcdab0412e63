#include "qformff/format.hpp"

namespace qff {

namespace {

// Sum of c_i * v^i over a prime field, highest degree first.
std::string render_prime_poly(std::span<const Code> coeffs, char var) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Code c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string mono = i == 0 ? "" : i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i);
    if (mono.empty()) out += std::to_string(c);
    else if (c == 1) out += mono;
    else out += std::to_string(c) + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

bool single_term(const Poly& f) {
  int nonzero = 0;
  for (Code c : f.coeffs()) nonzero += c != 0;
  return nonzero <= 1;
}

// Coefficient text; elements outside the prime field are parenthesized.
std::string coeff_text(const GaloisField& F, Code c) {
  if (c < F.characteristic()) return std::to_string(c);
  const auto digits = F.digits(c);
  return "(" + render_prime_poly(digits, 't') + ")";
}

}  // namespace

std::string render(const FFElem& c) { return coeff_text(*c.field(), c.code()); }

std::string render(const Poly& f) {
  if (f.is_zero()) return "0";
  const auto& F = *f.field();
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Code c = f.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string mono = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
    if (mono.empty()) out += coeff_text(F, c);
    else if (c == 1) out += mono;
    else out += coeff_text(F, c) + "*" + mono;
  }
  return out;
}

std::string render(const RatFunc& f) {
  if (f.is_polynomial()) return render(f.num());
  const auto wrap = [](const Poly& p) { return single_term(p) ? render(p) : "(" + render(p) + ")"; };
  return wrap(f.num()) + "/" + wrap(f.den());
}

std::string render(const DiagForm& q) {
  std::string out;
  for (const auto& a : q.coeffs()) {
    if (!out.empty()) out += ", ";
    out += render(a);
  }
  return out;
}

std::string render(const Place& place) { return place.is_infinite() ? "inf" : render(place.poly()); }

std::string render(const Factorization& f) {
  std::string out;
  if (f.factors.empty() || f.unit.code() != 1) out = render(f.unit);
  for (const auto& [g, m] : f.factors) {
    if (!out.empty()) out += " * ";
    out += "(" + render(g) + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

std::string render_modulus(const ConstField& F) {
  return render_prime_poly(F.modulus(), 't');
}

std::string render(const ConstField& F) {
  if (F.k() == 1) return "GF(" + std::to_string(F.p()) + ")";
  return "GF(" + std::to_string(F.q()) + ", " + render_modulus(F) + ")";
}

}  // namespace qff
