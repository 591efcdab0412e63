#include "qformff/ff.hpp"

#include <limits>
#include <string>

namespace qff {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::BothZero: return "BothZero";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::DegenerateForm: return "DegenerateForm";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NotPrime: return "NotPrime";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// GaloisField

FieldPtr GaloisField::prime(std::uint64_t p) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p > (std::uint64_t{1} << 62)) fail(Errc::FieldTooLarge, "characteristic too large");
  std::shared_ptr<GaloisField> f(new GaloisField());
  f->p_ = p;
  f->order_ = p;
  return f;
}

FieldPtr GaloisField::extension(FieldPtr base, std::vector<Code> modulus) {
  if (!base) fail(Errc::FieldMismatch, "extension of a null field");
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) fail(Errc::DegreeTooSmall, "extension modulus must have degree >= 1");
  if (modulus.back() != 1) fail(Errc::ReducibleModulus, "extension modulus must be monic");
  for (Code c : modulus) {
    if (!base->contains(c)) fail(Errc::FieldMismatch, "modulus coefficient outside base field");
  }
  const auto n = static_cast<unsigned>(modulus.size() - 1);
  std::uint64_t order = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (order > (std::numeric_limits<std::uint64_t>::max() >> 1) / base->order()) {
      fail(Errc::FieldTooLarge, "field order exceeds 2^63");
    }
    order *= base->order();
  }
  std::shared_ptr<GaloisField> f(new GaloisField());
  f->p_ = base->p_;
  f->order_ = order;
  f->degree_ = n;
  f->abs_degree_ = n * base->abs_degree_;
  f->base_ = std::move(base);
  f->modulus_ = std::move(modulus);
  return f;
}

Code GaloisField::from_int(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return static_cast<Code>(r);
}

Code GaloisField::add(Code a, Code b) const {
  if (base_ == nullptr) {
    Code s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Code out = 0;
  Code scale = 1;
  for (unsigned i = 0; i < abs_degree_; ++i) {
    Code s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

Code GaloisField::neg(Code a) const {
  if (base_ == nullptr) return a == 0 ? 0 : p_ - a;
  Code out = 0;
  Code scale = 1;
  for (unsigned i = 0; i < abs_degree_; ++i) {
    Code d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

Code GaloisField::sub(Code a, Code b) const { return add(a, neg(b)); }

bool GaloisField::tables_ready() const {
  if (order_ > kTableLimit || base_ == nullptr) return false;
  std::call_once(tables_once_, [this] { build_tables(); });
  return true;
}

void GaloisField::build_tables() const {
  const std::uint64_t n = order_ - 1;
  const auto divisors = prime_divisors(n);
  Code gen = 0;
  for (Code g = 1; g < order_; ++g) {
    bool primitive = true;
    for (auto r : divisors) {
      if (pow_slow(g, n / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  std::vector<std::uint32_t> exp(n), log(order_, 0);
  Code x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp[i] = static_cast<std::uint32_t>(x);
    log[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, gen);
  }
  exp_ = std::move(exp);
  log_ = std::move(log);
}

Code GaloisField::mul_slow(Code a, Code b) const {
  if (base_ == nullptr) return mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  const auto& B = *base_;
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<Code> prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) {
      if (db[j] == 0) continue;
      prod[i + j] = B.add(prod[i + j], B.mul(da[i], db[j]));
    }
  }
  for (std::size_t i = prod.size(); i-- > degree_;) {
    const Code c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < degree_; ++j) {
      const std::size_t at = i - degree_ + j;
      prod[at] = B.sub(prod[at], B.mul(c, modulus_[j]));
    }
  }
  return from_digits(std::span<const Code>(prod.data(), degree_));
}

Code GaloisField::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  if (tables_ready()) {
    const std::uint64_t n = order_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % n];
  }
  return mul_slow(a, b);
}

Code GaloisField::pow_slow(Code a, std::uint64_t e) const {
  Code r = 1;
  while (e != 0) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

Code GaloisField::pow(Code a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (base_ == nullptr) return powmod(a, e, p_);
  if (tables_ready()) {
    const std::uint64_t n = order_ - 1;
    return exp_[static_cast<std::uint64_t>(static_cast<u128>(log_[a]) * (e % n) % n)];
  }
  Code r = 1;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Code GaloisField::inv(Code a) const {
  if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
  if (tables_ready()) {
    const std::uint64_t n = order_ - 1;
    return exp_[(n - log_[a]) % n];
  }
  return pow(a, order_ - 2);
}

bool GaloisField::is_square(Code a) const {
  if (a == 0 || p_ == 2) return true;
  if (tables_ready()) return log_[a] % 2 == 0;
  return pow(a, (order_ - 1) / 2) == 1;
}

int GaloisField::quad_char(Code a) const {
  if (a == 0) return 0;
  return is_square(a) ? 1 : -1;
}

std::optional<Code> GaloisField::sqrt(Code a) const {
  if (a == 0) return Code{0};
  if (p_ == 2) return pow(a, order_ / 2);
  if (!is_square(a)) return std::nullopt;
  // Tonelli-Shanks with order - 1 = 2^s * t, t odd.
  std::uint64_t t = order_ - 1;
  unsigned s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  Code z = 2;
  while (is_square(z)) ++z;
  Code c = pow(z, t);
  Code x = pow(a, (t + 1) / 2);
  Code b = pow(a, t);
  unsigned m = s;
  while (b != 1) {
    unsigned i = 0;
    Code bb = b;
    while (bb != 1) {
      bb = mul(bb, bb);
      ++i;
    }
    Code w = c;
    for (unsigned j = 0; j + 1 < m - i; ++j) w = mul(w, w);
    x = mul(x, w);
    c = mul(w, w);
    b = mul(b, c);
    m = i;
  }
  return x;
}

std::vector<Code> GaloisField::digits(Code a) const {
  std::vector<Code> out(degree_, 0);
  if (base_ == nullptr) {
    out[0] = a;
    return out;
  }
  const std::uint64_t b = base_->order();
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = a % b;
    a /= b;
  }
  return out;
}

Code GaloisField::from_digits(std::span<const Code> ds) const {
  if (ds.size() > degree_) fail(Errc::FieldMismatch, "too many digits for field element");
  const std::uint64_t b = base_ ? base_->order() : order_;
  Code out = 0;
  for (std::size_t i = ds.size(); i-- > 0;) out = out * b + ds[i];
  return out;
}

bool GaloisField::same_as(const GaloisField& other) const {
  if (this == &other) return true;
  if (p_ != other.p_ || order_ != other.order_ || degree_ != other.degree_) return false;
  if ((base_ == nullptr) != (other.base_ == nullptr)) return false;
  if (base_ == nullptr) return true;
  return modulus_ == other.modulus_ && base_->same_as(*other.base_);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

// ---------------------------------------------------------------------------
// FFElem

FFElem::FFElem(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_) fail(Errc::FieldMismatch, "element without a field");
  if (!field_->contains(code_)) fail(Errc::FieldMismatch, "code outside field");
}

FFElem FFElem::from_int(FieldPtr field, std::int64_t n) {
  const Code c = field->from_int(n);
  return {std::move(field), c};
}

FFElem FFElem::inverse() const { return {field_, field_->inv(code_)}; }

namespace {
void check_same(const FFElem& a, const FFElem& b) {
  if (!same_field(a.field(), b.field())) fail(Errc::FieldMismatch, "operands live in different fields");
}
}  // namespace

FFElem operator+(const FFElem& a, const FFElem& b) {
  check_same(a, b);
  return {a.field_, a.field_->add(a.code_, b.code_)};
}

FFElem operator-(const FFElem& a, const FFElem& b) {
  check_same(a, b);
  return {a.field_, a.field_->sub(a.code_, b.code_)};
}

FFElem operator*(const FFElem& a, const FFElem& b) {
  check_same(a, b);
  return {a.field_, a.field_->mul(a.code_, b.code_)};
}

FFElem operator/(const FFElem& a, const FFElem& b) {
  check_same(a, b);
  if (b.is_zero()) fail(Errc::DivisionByZero, "division by zero in finite field");
  return {a.field_, a.field_->div(a.code_, b.code_)};
}

bool operator==(const FFElem& a, const FFElem& b) {
  return a.code_ == b.code_ && same_field(a.field_, b.field_);
}

FFElem pow(const FFElem& a, std::uint64_t e) { return {a.field(), a.field()->pow(a.code(), e)}; }

bool is_square(const FFElem& a) { return a.field()->is_square(a.code()); }

int quad_char(const FFElem& a) {
  if (a.is_zero()) fail(Errc::ZeroArgument, "quadratic character of zero");
  return a.field()->quad_char(a.code());
}

std::optional<FFElem> sqrt(const FFElem& a) {
  auto r = a.field()->sqrt(a.code());
  if (!r) return std::nullopt;
  return FFElem(a.field(), *r);
}

std::vector<FFElem> enumerate(const FieldPtr& field, std::uint64_t cap) {
  if (field->order() > cap) {
    fail(Errc::FieldTooLarge, "field of order " + std::to_string(field->order()) +
                                  " exceeds enumeration cap " + std::to_string(cap));
  }
  std::vector<FFElem> out;
  out.reserve(field->order());
  for (Code c = 0; c < field->order(); ++c) out.emplace_back(field, c);
  return out;
}

ConstField ConstField::prime(std::uint64_t p) {
  if (p == 2) fail(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  return ConstField(GaloisField::prime(p));
}

}  // namespace qff
