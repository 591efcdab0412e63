#pragma once

#include <cstddef>
#include <vector>

#include "qformff/funcfield.hpp"

namespace qff {

/// Non-degenerate diagonal form <a_1, ..., a_n> over F_q(x).
class DiagForm {
 public:
  /// Throws DegenerateForm on an empty list or a zero coefficient.
  explicit DiagForm(std::vector<RatFunc> coeffs);

  std::size_t dim() const { return coeffs_.size(); }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  const RatFunc& operator[](std::size_t i) const { return coeffs_[i]; }
  const FieldPtr& field() const { return coeffs_.front().field(); }

  RatFunc determinant() const;
  /// (-1)^(n(n-1)/2) * determinant.
  RatFunc discriminant() const;

  DiagForm scaled(const RatFunc& c) const;
  friend DiagForm orthogonal_sum(const DiagForm& a, const DiagForm& b);
  friend bool operator==(const DiagForm&, const DiagForm&) = default;

 private:
  std::vector<RatFunc> coeffs_;
};

/// Class of an element in K_p^* / K_p^*2.
struct SquareClass {
  bool odd_valuation;
  int unit_char;

  bool is_trivial() const { return !odd_valuation && unit_char == 1; }
  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

/// Diagonal form over a residue field; may be empty.
struct ResidueForm {
  FieldPtr field;
  std::vector<Code> coeffs;

  std::size_t dim() const { return coeffs.size(); }
};

/// q ~ q0 + pi*q1 with q0, q1 unit forms.
struct SpringerSplit {
  ResidueForm unit_part;
  ResidueForm uniformizer_part;
};

SquareClass local_square_class(const RatFunc& a, const Place& place);

int hilbert_symbol(const RatFunc& a, const RatFunc& b, const Place& place);

/// prod_{i<j} (a_i, a_j)_p.
int hasse_invariant(const DiagForm& q, const Place& place);

SpringerSplit springer_split(const DiagForm& q, const Place& place);

/// Anisotropic dimension of a form over a finite field (0, 1 or 2).
unsigned residue_aniso_dim(const ResidueForm& r);

bool local_is_isotropic(const DiagForm& q, const Place& place);

/// Discriminant is a local square and the Hasse invariant equals (-1,-1)^(m(m-1)/2).
bool local_is_hyperbolic_by_invariants(const DiagForm& q, const Place& place);
/// Both Springer parts are hyperbolic over the residue field.
bool local_is_hyperbolic_by_residue_forms(const DiagForm& q, const Place& place);
/// Evaluates both routes; throws InvariantViolation if they disagree.
bool local_is_hyperbolic(const DiagForm& q, const Place& place);

/// Dimension of the anisotropic part of q over the completion, in 0..4.
unsigned local_anisotropic_dimension(const DiagForm& q, const Place& place);

/// Least number of squares summing to a in the completion, in 1..3.
unsigned local_length(const RatFunc& a, const Place& place);

}  // namespace qff
