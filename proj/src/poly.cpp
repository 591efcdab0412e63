#include "qformff/poly.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace qff {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) fail(Errc::FieldMismatch, "polynomial without a field");
}

Poly::Poly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) fail(Errc::FieldMismatch, "polynomial without a field");
  for (Code c : coeffs_) {
    if (!field_->contains(c)) fail(Errc::FieldMismatch, "coefficient outside field");
  }
  trim();
}

Poly Poly::constant(const FFElem& c) { return constant(c.field(), c.code()); }

Poly Poly::constant(FieldPtr field, Code c) { return Poly(std::move(field), std::vector<Code>{c}); }

Poly Poly::x(FieldPtr field) { return Poly(std::move(field), std::vector<Code>{0, 1}); }

Poly Poly::monomial(FieldPtr field, Code c, unsigned degree) {
  std::vector<Code> cs(degree + 1, 0);
  cs[degree] = c;
  return Poly(std::move(field), std::move(cs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_field(const Poly& g) const {
  if (!same_field(field_, g.field_)) fail(Errc::FieldMismatch, "polynomials over different fields");
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(coeffs_.back()));
}

Poly Poly::scaled(Code c) const {
  if (c == 0) return Poly(field_);
  Poly out(*this);
  for (auto& a : out.coeffs_) a = field_->mul(a, c);
  return out;
}

Poly Poly::derivative() const {
  Poly out(field_);
  if (coeffs_.size() <= 1) return out;
  out.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.coeffs_[i - 1] = field_->mul(coeffs_[i], field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())));
  }
  out.trim();
  return out;
}

Code Poly::eval(Code at) const {
  Code acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, at), coeffs_[i]);
  return acc;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& a : out.coeffs_) a = field_->neg(a);
  return out;
}

Poly& Poly::operator+=(const Poly& g) {
  check_field(g);
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size(), 0);
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] = field_->add(coeffs_[i], g.coeffs_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  check_field(g);
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size(), 0);
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] = field_->sub(coeffs_[i], g.coeffs_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& g) {
  check_field(g);
  if (is_zero() || g.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Code> prod(coeffs_.size() + g.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      prod[i + j] = field_->add(prod[i + j], field_->mul(coeffs_[i], g.coeffs_[j]));
    }
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

bool operator==(const Poly& f, const Poly& g) {
  return f.coeffs_ == g.coeffs_ && same_field(f.field_, g.field_);
}

std::strong_ordering operator<=>(const Poly& f, const Poly& g) {
  if (auto c = f.degree() <=> g.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(f.coeffs_.begin(), f.coeffs_.end(), g.coeffs_.begin(),
                                                g.coeffs_.end());
}

DivMod divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  if (!same_field(f.field(), g.field())) fail(Errc::FieldMismatch, "polynomials over different fields");
  const auto& F = *f.field();
  if (f.degree() < g.degree()) return {Poly(f.field()), f};
  std::vector<Code> rem(f.coeffs().begin(), f.coeffs().end());
  const auto gd = static_cast<std::size_t>(g.degree());
  std::vector<Code> quo(rem.size() - gd, 0);
  const Code lc_inv = F.inv(g.coeffs().back());
  for (std::size_t i = rem.size(); i-- > gd;) {
    if (rem[i] == 0) continue;
    const Code c = F.mul(rem[i], lc_inv);
    quo[i - gd] = c;
    for (std::size_t j = 0; j <= gd; ++j) {
      rem[i - gd + j] = F.sub(rem[i - gd + j], F.mul(c, g.coeffs()[j]));
    }
  }
  rem.resize(gd);
  return {Poly(f.field(), std::move(quo)), Poly(f.field(), std::move(rem))};
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).quotient; }
Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).remainder; }

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) fail(Errc::BothZero, "gcd of two zero polynomials");
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly result = Poly::constant(base.field(), 1) % mod;
  Poly b = base % mod;
  while (e != 0) {
    if (e & 1) result = (result * b) % mod;
    e >>= 1;
    if (e != 0) b = (b * b) % mod;
  }
  return result;
}

Poly pow(const Poly& base, unsigned e) {
  Poly result = Poly::constant(base.field(), 1);
  Poly b = base;
  while (e != 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

Poly Factorization::expand() const {
  Poly out = Poly::constant(unit);
  for (const auto& [poly, m] : factors) out *= pow(poly, m);
  return out;
}

namespace {

// g with g(x)^p = f(x), for f' = 0.
Poly pth_root(const Poly& f) {
  const auto& F = *f.field();
  const std::uint64_t p = F.characteristic();
  const std::uint64_t root_exp = F.order() / p;
  std::vector<Code> out(f.coeffs().size() / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out[i / p] = F.pow(f.coeffs()[i], root_exp);
  return Poly(f.field(), std::move(out));
}

void squarefree_monic(const Poly& f, unsigned scale, std::vector<Factor>& out) {
  const Poly one = Poly::constant(f.field(), 1);
  const Poly df = f.derivative();
  if (df.is_zero()) {
    squarefree_monic(pth_root(f), scale * static_cast<unsigned>(f.field()->characteristic()), out);
    return;
  }
  Poly c = gcd(f, df);
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (!z.is_one()) out.push_back({z, i * scale});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one()) {
    squarefree_monic(pth_root(c), scale * static_cast<unsigned>(f.field()->characteristic()), out);
  }
}

// x^(q^k) mod f by iterated Frobenius.
Poly frobenius_step(const Poly& h, const Poly& f) { return powmod(h, h.field()->order(), f); }

std::vector<Factor> distinct_degree(const Poly& f) {
  std::vector<Factor> out;
  Poly rest = f;
  const Poly x = Poly::x(f.field());
  Poly h = x % rest;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
    h = frobenius_step(h, rest);
    Poly g = gcd(h - x, rest);
    if (!g.is_one()) {
      out.push_back({g, d});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back({rest, static_cast<unsigned>(rest.degree())});
  return out;
}

Poly random_poly(const FieldPtr& field, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Code> dist(0, field->order() - 1);
  std::vector<Code> cs(static_cast<std::size_t>(max_degree) + 1);
  for (auto& c : cs) c = dist(rng);
  return Poly(field, std::move(cs));
}

// Cantor-Zassenhaus splitting of a product of distinct monic irreducibles of degree d.
void equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (static_cast<unsigned>(f.degree()) == d) {
    out.push_back(f);
    return;
  }
  const auto& F = *f.field();
  const Poly one = Poly::constant(f.field(), 1);
  for (;;) {
    Poly a = random_poly(f.field(), f.degree() - 1, rng);
    if (a.degree() < 1) continue;
    // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q - 1)/2)
    Poly s = a % f;
    Poly t = s;
    for (unsigned i = 1; i < d; ++i) {
      s = frobenius_step(s, f);
      t = (t * s) % f;
    }
    Poly b = powmod(t, (F.order() - 1) / 2, f);
    Poly g = gcd(b - one, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<Factor> out;
  if (f.degree() == 0) return out;
  squarefree_monic(f.monic(), 1, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const Factor& a, const Factor& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "factorization of zero");
  Factorization out{f.lc(), {}};
  std::mt19937_64 rng(seed);
  for (const auto& [part, m] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) out.factors.push_back({std::move(g), m});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) fail(Errc::DegreeTooSmall, "irreducibility needs degree >= 1");
  const auto n = static_cast<unsigned>(f.degree());
  if (n == 1) return true;
  const Poly g = f.monic();
  const Poly x = Poly::x(f.field());
  std::vector<unsigned> prime_factors;
  unsigned m = n;
  for (unsigned r = 2; r * r <= m; ++r) {
    if (m % r == 0) {
      prime_factors.push_back(r);
      while (m % r == 0) m /= r;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  // h[k] = x^(q^k) mod g for k = 0..n
  std::vector<Poly> h{x % g};
  for (unsigned k = 1; k <= n; ++k) h.push_back(frobenius_step(h.back(), g));
  if (!(h[n] - x).is_zero()) return false;
  for (unsigned r : prime_factors) {
    if (!gcd(h[n / r] - x, g).is_one()) return false;
  }
  return true;
}

unsigned multiplicity(const Poly& f, const Poly& p) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "multiplicity in zero");
  if (p.degree() < 1) fail(Errc::DegreeTooSmall, "multiplicity of a constant");
  unsigned m = 0;
  Poly g = f;
  for (;;) {
    auto [q, r] = divmod(g, p);
    if (!r.is_zero()) return m;
    g = std::move(q);
    ++m;
  }
}

bool poly_is_square(const Poly& f) {
  if (f.is_zero()) return true;
  if (!f.field()->is_square(f.coeffs().back())) return false;
  for (const auto& fac : squarefree_decomposition(f)) {
    if (fac.multiplicity % 2 != 0) return false;
  }
  return true;
}

std::optional<Poly> poly_sqrt(const Poly& f) {
  if (f.is_zero()) return f;
  if (f.degree() % 2 != 0) return std::nullopt;
  const auto& F = *f.field();
  auto lead = F.sqrt(f.coeffs().back());
  if (!lead) return std::nullopt;
  const auto m = static_cast<std::size_t>(f.degree() / 2);
  // Solve for g top-down from f = g^2.
  std::vector<Code> g(m + 1, 0);
  g[m] = *lead;
  const Code inv_two_lead = F.inv(F.add(*lead, *lead));
  for (std::size_t i = 1; i <= m; ++i) {
    Code acc = f.coeff(2 * m - i);
    for (std::size_t j = 1; j < i; ++j) acc = F.sub(acc, F.mul(g[m - j], g[m - i + j]));
    g[m - i] = F.mul(acc, inv_two_lead);
  }
  Poly root(f.field(), std::move(g));
  if (!(root * root == f)) return std::nullopt;
  return root;
}

ConstField ConstField::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (p == 2) fail(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  auto base = GaloisField::prime(p);
  for (auto& c : modulus) c %= p;
  Poly m(base, modulus);
  if (m.degree() < 2) fail(Errc::DegreeTooSmall, "extension modulus must have degree >= 2");
  if (!m.is_monic()) fail(Errc::ReducibleModulus, "extension modulus must be monic");
  if (!is_irreducible(m)) fail(Errc::ReducibleModulus, "extension modulus is reducible over F_" + std::to_string(p));
  return ConstField(GaloisField::extension(base, std::vector<Code>(m.coeffs().begin(), m.coeffs().end())));
}

}  // namespace qff
