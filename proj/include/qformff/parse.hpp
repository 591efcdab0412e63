#pragma once

#include <string_view>

#include "qformff/local.hpp"

namespace qff {

/// "GF(p)", "GF(p^k, m(t))" or "GF(q, m(t))" with q = p^k and m monic
/// irreducible of degree k over F_p.
ConstField parse_field(std::string_view spec);

/// Expressions over F_q(x): integers, x, t (the generator of F_q over F_p
/// when k > 1), + - * / ^ and parentheses. Juxtaposition multiplies.
RatFunc parse_ratfunc(std::string_view src, const ConstField& F);
Poly parse_poly(std::string_view src, const ConstField& F);
/// Comma-separated coefficients.
DiagForm parse_form(std::string_view src, const ConstField& F);
/// "inf" / "infinity", or a polynomial (scaled to be monic; must be irreducible).
Place parse_place(std::string_view src, const ConstField& F);

}  // namespace qff
