#include "qformff/parse.hpp"

#include <cctype>
#include <string>

namespace qff {

namespace {

[[noreturn]] void parse_error(std::string_view src, std::size_t at, const std::string& what) {
  fail(Errc::ParseError, what + " at position " + std::to_string(at) + " in '" + std::string(src) + "'");
}

// Recursive descent over
//   expr    := ["+"|"-"] term (("+"|"-") term)*
//   term    := factor (["*"|"/"] factor)*
//   factor  := primary ["^" uint]
//   primary := uint | var | "t" | "(" expr ")"
class ExprParser {
 public:
  ExprParser(std::string_view src, FieldPtr field, char var, std::optional<Code> generator)
      : src_(src), field_(std::move(field)), var_(var), generator_(generator) {}

  RatFunc parse() {
    RatFunc value = expr();
    skip_space();
    if (pos_ != src_.size()) parse_error(src_, pos_, "unexpected '" + std::string(1, src_[pos_]) + "'");
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= src_.size()) return false;
    const char c = src_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == var_ || (c == 't' && var_ != 't');
  }

  RatFunc expr() {
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    RatFunc value = term();
    if (negate) value = -value;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        value = value + term();
      } else if (peek('-')) {
        ++pos_;
        value = value - term();
      } else {
        return value;
      }
    }
  }

  RatFunc term() {
    RatFunc value = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        value = value * factor();
      } else if (peek('/')) {
        const std::size_t at = ++pos_;
        RatFunc d = factor();
        if (d.is_zero()) fail(Errc::ZeroDenominator, "division by zero at position " + std::to_string(at));
        value = value / d;
      } else if (starts_primary()) {
        value = value * factor();
      } else {
        return value;
      }
    }
  }

  RatFunc factor() {
    RatFunc base = primary();
    if (peek('^')) {
      ++pos_;
      skip_space();
      const std::uint64_t e = integer(false);
      RatFunc out = RatFunc::from_int(field_, 1);
      for (std::uint64_t i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }

  // Decimal literal; reduced modulo p unless it is an exponent.
  std::uint64_t integer(bool reduce) {
    skip_space();
    const std::size_t start = pos_;
    const std::uint64_t p = field_->characteristic();
    std::uint64_t value = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(src_[pos_] - '0');
      if (reduce) {
        value = static_cast<std::uint64_t>((static_cast<unsigned __int128>(value) * 10 + digit) % p);
      } else {
        if (value > 100'000) parse_error(src_, start, "exponent too large");
        value = value * 10 + digit;
      }
      ++pos_;
    }
    if (pos_ == start) parse_error(src_, start, "expected an integer");
    return value;
  }

  RatFunc primary() {
    skip_space();
    if (pos_ >= src_.size()) parse_error(src_, pos_, "unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Poly::constant(field_, integer(true)));
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!peek(')')) parse_error(src_, pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (c == var_) {
      ++pos_;
      return RatFunc::x(field_);
    }
    if (c == 't' && var_ != 't') {
      if (!generator_) parse_error(src_, pos_, "'t' is only available over extension fields");
      ++pos_;
      return RatFunc(Poly::constant(field_, *generator_));
    }
    parse_error(src_, pos_, "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  FieldPtr field_;
  char var_;
  std::optional<Code> generator_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.empty()) fail(Errc::ParseError, "expected an integer in '" + std::string(whole) + "'");
  std::uint64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail(Errc::ParseError, "expected an integer in '" + std::string(whole) + "'");
    }
    if (v > 1'000'000'000'000'000ULL) fail(Errc::FieldTooLarge, "field order too large");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

std::optional<Code> generator_of(const ConstField& F) {
  if (F.k() == 1) return std::nullopt;
  return Code{F.p()};
}

}  // namespace

ConstField parse_field(std::string_view spec) {
  std::string_view s = trim(spec);
  if (s.size() < 4 || s.substr(0, 3) != "GF(" || s.back() != ')') {
    fail(Errc::ParseError, "field must look like GF(p) or GF(p^k, modulus): '" + std::string(spec) + "'");
  }
  s = s.substr(3, s.size() - 4);
  std::string_view order_part = s;
  std::optional<std::string_view> modulus_part;
  if (const auto comma = s.find(','); comma != std::string_view::npos) {
    order_part = s.substr(0, comma);
    modulus_part = s.substr(comma + 1);
  }
  std::uint64_t p = 0;
  unsigned k = 1;
  if (const auto caret = order_part.find('^'); caret != std::string_view::npos) {
    p = parse_uint(order_part.substr(0, caret), spec);
    const std::uint64_t kk = parse_uint(order_part.substr(caret + 1), spec);
    if (kk == 0 || kk > 62) fail(Errc::ParseError, "bad extension degree in '" + std::string(spec) + "'");
    k = static_cast<unsigned>(kk);
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  } else {
    const std::uint64_t order = parse_uint(order_part, spec);
    if (order < 2) fail(Errc::NotPrime, "field order must be a prime power");
    p = order;
    for (std::uint64_t d = 2; d * d <= order; ++d) {
      if (order % d == 0) {
        p = d;
        break;
      }
    }
    std::uint64_t rest = order;
    k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1) fail(Errc::NotPrime, std::to_string(order) + " is not a prime power");
  }
  if (p == 2) fail(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  if (k == 1) {
    if (modulus_part) fail(Errc::ParseError, "a prime field takes no modulus: '" + std::string(spec) + "'");
    return ConstField::prime(p);
  }
  if (!modulus_part) fail(Errc::ParseError, "an extension field needs a modulus in t: '" + std::string(spec) + "'");
  const auto prime = ConstField::prime(p);
  const RatFunc m = ExprParser(*modulus_part, prime.field(), 't', std::nullopt).parse();
  if (!m.is_polynomial()) fail(Errc::ParseError, "modulus must be a polynomial in t");
  if (m.num().degree() != static_cast<int>(k)) {
    fail(Errc::ParseError, "modulus degree does not match the field order in '" + std::string(spec) + "'");
  }
  return ConstField::extension(p, std::vector<std::uint64_t>(m.num().coeffs().begin(), m.num().coeffs().end()));
}

RatFunc parse_ratfunc(std::string_view src, const ConstField& F) {
  // A slash outside parentheses separates a whole numerator from a whole
  // denominator: "x+1/x+2" is (x+1)/(x+2).
  std::vector<std::size_t> slashes;
  int depth = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] == '(') ++depth;
    else if (src[i] == ')') --depth;
    else if (src[i] == '/' && depth == 0) slashes.push_back(i);
  }
  if (slashes.size() > 1) parse_error(src, slashes[1], "more than one top-level '/'");
  if (slashes.empty()) return ExprParser(src, F.field(), 'x', generator_of(F)).parse();
  const auto num = src.substr(0, slashes[0]);
  const auto den = src.substr(slashes[0] + 1);
  const RatFunc n = ExprParser(num, F.field(), 'x', generator_of(F)).parse();
  const RatFunc d = ExprParser(den, F.field(), 'x', generator_of(F)).parse();
  if (d.is_zero()) fail(Errc::ZeroDenominator, "zero denominator in '" + std::string(src) + "'");
  return n / d;
}

Poly parse_poly(std::string_view src, const ConstField& F) {
  RatFunc f = parse_ratfunc(src, F);
  if (!f.is_polynomial()) fail(Errc::ParseError, "expected a polynomial: '" + std::string(src) + "'");
  return f.num();
}

DiagForm parse_form(std::string_view src, const ConstField& F) {
  std::vector<RatFunc> coeffs;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= src.size(); ++i) {
    if (i == src.size() || (src[i] == ',' && depth == 0)) {
      const auto piece = trim(src.substr(start, i - start));
      if (piece.empty()) fail(Errc::ParseError, "empty coefficient in form '" + std::string(src) + "'");
      coeffs.push_back(parse_ratfunc(piece, F));
      start = i + 1;
    } else if (src[i] == '(') {
      ++depth;
    } else if (src[i] == ')') {
      --depth;
    }
  }
  return DiagForm(std::move(coeffs));
}

Place parse_place(std::string_view src, const ConstField& F) {
  const auto s = trim(src);
  if (s == "inf" || s == "infinity") return Place::infinite(F.field());
  const Poly p = parse_poly(s, F);
  if (p.degree() < 1) fail(Errc::DegreeTooSmall, "place polynomial must have degree >= 1");
  return Place::finite(p.monic());
}

}  // namespace qff
