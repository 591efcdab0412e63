#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "qformff/error.hpp"

namespace qff {

/// Integer encoding of a finite field element.
///
/// A field in this library is a tower F_p = B_0 ⊂ B_1 ⊂ ... where each step is
/// B_{i+1} = B_i[y]/(m_i(y)). An element of B_{i+1} is the polynomial
/// c_0 + c_1 y + ... + c_{n-1} y^{n-1} over B_i, encoded as the integer
/// sum c_j |B_i|^j. Since |B_i| is a power of p the code is also the base-p
/// digit vector of the element over the prime field, so elements of the
/// prime subfield keep their natural codes 0..p-1 at every level.
using Code = std::uint64_t;

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// Immutable finite-field descriptor. Shared by pointer between all values
/// living in the field.
class GaloisField {
 public:
  /// Largest field order for which exp/log tables are built on first use.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

  static FieldPtr prime(std::uint64_t p);

  /// Extension base[y]/(modulus). `modulus` is monic of degree >= 1 with
  /// coefficients given as codes of `base`, lowest degree first.
  /// Irreducibility is not checked here; see ConstField and ResidueField.
  static FieldPtr extension(FieldPtr base, std::vector<Code> modulus);

  std::uint64_t order() const { return order_; }
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  unsigned absolute_degree() const { return abs_degree_; }
  bool is_prime_field() const { return base_ == nullptr; }
  const FieldPtr& base() const { return base_; }
  std::span<const Code> modulus() const { return modulus_; }

  bool contains(Code a) const { return a < order_; }
  Code from_int(std::int64_t n) const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const;

  /// 0 counts as a square.
  bool is_square(Code a) const;
  /// +1 for nonzero squares, -1 for nonsquares, 0 for zero.
  int quad_char(Code a) const;
  std::optional<Code> sqrt(Code a) const;

  /// Coefficients over base(), length degree().
  std::vector<Code> digits(Code a) const;
  Code from_digits(std::span<const Code> digits) const;

  /// Same tower with the same moduli.
  bool same_as(const GaloisField& other) const;

 private:
  GaloisField() = default;

  Code mul_slow(Code a, Code b) const;
  Code pow_slow(Code a, std::uint64_t e) const;
  bool tables_ready() const;
  void build_tables() const;

  std::uint64_t p_ = 0;
  std::uint64_t order_ = 0;
  unsigned degree_ = 1;
  unsigned abs_degree_ = 1;
  FieldPtr base_;
  std::vector<Code> modulus_;

  mutable std::once_flag tables_once_;
  mutable std::vector<std::uint32_t> exp_;
  mutable std::vector<std::uint32_t> log_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of a finite field, tagged with its field.
class FFElem {
 public:
  FFElem(FieldPtr field, Code code);
  static FFElem from_int(FieldPtr field, std::int64_t n);

  const FieldPtr& field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  FFElem operator-() const { return {field_, field_->neg(code_)}; }
  FFElem inverse() const;

  friend FFElem operator+(const FFElem& a, const FFElem& b);
  friend FFElem operator-(const FFElem& a, const FFElem& b);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  friend FFElem operator/(const FFElem& a, const FFElem& b);
  friend bool operator==(const FFElem& a, const FFElem& b);

 private:
  FieldPtr field_;
  Code code_;
};

FFElem pow(const FFElem& a, std::uint64_t e);
bool is_square(const FFElem& a);
int quad_char(const FFElem& a);
std::optional<FFElem> sqrt(const FFElem& a);

inline constexpr std::uint64_t kEnumerationCap = 1'000'000;

/// All elements in code order, zero first.
std::vector<FFElem> enumerate(const FieldPtr& field, std::uint64_t cap = kEnumerationCap);

bool is_prime(std::uint64_t n);

/// The constant field F_q of K = F_q(x); q odd.
class ConstField {
 public:
  static ConstField prime(std::uint64_t p);
  /// F_p[t]/(modulus), modulus given over F_p lowest degree first; it must be
  /// monic and irreducible of degree >= 2.
  static ConstField extension(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t p() const { return field_->characteristic(); }
  unsigned k() const { return field_->degree(); }
  std::uint64_t q() const { return field_->order(); }
  std::span<const Code> modulus() const { return field_->modulus(); }
  const FieldPtr& field() const { return field_; }

  FFElem element(std::int64_t n) const { return FFElem::from_int(field_, n); }
  FFElem from_code(Code c) const { return {field_, c}; }

  friend bool operator==(const ConstField& a, const ConstField& b) {
    return same_field(a.field_, b.field_);
  }

 private:
  explicit ConstField(FieldPtr f) : field_(std::move(f)) {}
  FieldPtr field_;
};

}  // namespace qff
