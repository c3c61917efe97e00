#pragma once

#include "cpog/bigint.hpp"
#include "cpog/spectrum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cpog {

struct EliminationResult {
  std::int64_t rank = 0;
  BigInt determinant;
};

/// Fraction-free Gaussian elimination with the Bareiss pivot-division rule
/// and column skipping for rank-deficient matrices. All intermediate
/// divisions are exact (enforced at runtime); row swaps are tracked for the
/// determinant sign. Determinant is the last pivot at full rank, else 0.
EliminationResult bareiss_eliminate(ExactMatrix m);

/// Coefficients c_0..c_n of det(xI - M), monic (c_n = 1).
struct CharPoly {
  std::vector<BigInt> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Characteristic polynomial via the Faddeev-LeVerrier recurrence; every
/// division by the step index is exact over the integers.
CharPoly char_poly(const ExactMatrix& m, std::int64_t dimension_cap = 1500);

struct IntegerRootResult {
  Spectrum roots;                 // integer roots with multiplicities
  std::vector<BigInt> remainder;  // monic factor with no integer roots; [1] when fully split
};

/// Strips all integer roots of a monic polynomial. Candidates are 0 plus
/// the divisors of the lowest nonzero coefficient within a root bound
/// derived from coefficient magnitudes (|root| <= 2 max_k |c_{d-k}|^{1/k});
/// each candidate is verified by exact synthetic division.
IntegerRootResult integer_roots(const CharPoly& p);

struct EigenvalueCheck {
  std::int64_t eigenvalue = 0;
  std::int64_t claimed_multiplicity = 0;
  std::int64_t nullity = 0;
  bool pass = false;
};

/// Proof-by-computation that a claimed spectrum is exact: per-eigenvalue
/// nullity checks plus total-multiplicity and trace checks. When the
/// multiplicities sum to the dimension and everything passes, the claimed
/// multiset is exactly the spectrum.
struct SpectrumCertificate {
  std::int64_t dimension = 0;
  std::vector<EigenvalueCheck> checks;
  bool multiplicities_complete = false;  // sum of claimed multiplicities == dimension
  bool trace_matches = false;            // sum of eigenvalue*multiplicity == trace
  bool pass = false;
};

SpectrumCertificate certify_spectrum(const ExactMatrix& L, const Spectrum& claimed);

/// Index partition on which a matrix is block-uniform: within class r the
/// diagonal is a constant delta_r and off-diagonal entries a constant
/// beta_rr; between classes r != s all entries equal beta_rs. Such a
/// partition always exists (the discrete one); coarse ones turn rank and
/// spectrum questions on an n x n matrix into the same questions on the
/// d x d quotient plus per-class scalar bookkeeping.
struct UniformBlockStructure {
  std::vector<int> class_of;              // index -> class
  std::vector<std::int64_t> class_size;   // per class
  std::vector<BigInt> diagonal;           // delta_r
  ExactMatrix off;                        // beta_rs

  std::int64_t classes() const { return static_cast<std::int64_t>(class_size.size()); }

  /// Quotient of (M - shift*I): Q_rs = beta_rs * n_s for r != s,
  /// Q_rr = (delta_r - shift) + beta_rr * (n_r - 1).
  ExactMatrix quotient(const BigInt& shift) const;
};

/// Coarsest uniform partition found by signature refinement, verified
/// exactly; falls back to the discrete partition when no coarse one exists.
UniformBlockStructure detect_uniform_blocks(const ExactMatrix& m);

/// dim ker(M - lambda*I) = sum over classes of (n_r - 1)[delta_r - lambda = beta_rr]
/// plus the nullity of the shifted quotient.
std::int64_t nullity_of_shift(const UniformBlockStructure& s, const BigInt& lambda);

/// dim ker(M), via the block structure.
std::int64_t nullity(const ExactMatrix& m);

/// M - lambda*I.
ExactMatrix shifted(const ExactMatrix& m, const BigInt& lambda);

struct IntegerSpectrumResult {
  Spectrum integer_part;
  std::vector<BigInt> remainder;  // non-integer-rooted factor of the characteristic polynomial
};

/// All integer eigenvalues of M with exact algebraic multiplicities:
/// per-class eigenvalues (delta_r - beta_rr, multiplicity n_r - 1) plus the
/// integer roots of the quotient's characteristic polynomial.
IntegerSpectrumResult exact_integer_spectrum(const ExactMatrix& m, std::int64_t dimension_cap = 1500);

}  // namespace cpog
