#pragma once

#include <string>

#include "qformff/local.hpp"

namespace qff {

// Canonical text; every rendering parses back to the same value.

std::string render(const FFElem& c);
std::string render(const Poly& f);
std::string render(const RatFunc& f);
std::string render(const DiagForm& q);
std::string render(const Place& place);
std::string render(const Factorization& f);
std::string render(const ConstField& F);
/// Modulus of an extension as a polynomial in t.
std::string render_modulus(const ConstField& F);

}  // namespace qff
