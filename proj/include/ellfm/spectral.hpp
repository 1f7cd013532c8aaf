#pragma once

// Spectral covers C = n*Theta + k*muhat in X^, Simpson rank and degree of
// sheaves on them, and the passage between rank-one sheaves on a cover and
// fibrewise degree-zero sheaves on X.

#include "ellfm/fourier_mukai.hpp"
#include "ellfm/geometry.hpp"
#include "ellfm/rational.hpp"

namespace ellfm {

class CoverClass {
 public:
  /// Throws PreconditionViolation unless n >= 1.
  CoverClass(SurfaceGeometry geo, long n, long k);

  const SurfaceGeometry& geometry() const noexcept { return geo_; }
  long degree() const noexcept { return n_; }
  long fibre_coeff() const noexcept { return k_; }
  DivisorClass divisor() const;

  bool operator==(const CoverClass&) const = default;

 private:
  SurfaceGeometry geo_;
  long n_;
  long k_;
};

struct CoverInvariants {
  Rational chi;             // chi(O_C)
  Rational arithmetic_genus;  // p = 1 - chi
  Rational ell;             // C.Theta

  bool operator==(const CoverInvariants&) const = default;
};

CoverInvariants cover_invariants(const CoverClass& cover);

/// P(m) = leading*m + constant, the Hilbert polynomial with respect to mu_C.
struct HilbertPolynomial {
  Rational leading;
  Rational constant;

  bool operator==(const HilbertPolynomial&) const = default;
};

/// Simpson rank r_C and degree d_C of a pure one-dimensional sheaf on a cover.
struct CoverSheafInvariants {
  CoverClass cover;
  Rational rank;
  Rational degree;

  /// d_C / r_C; throws PreconditionViolation for zero rank.
  Rational slope() const;
  bool operator==(const CoverSheafInvariants&) const = default;
};

/// r_C = leading / n, d_C = constant - r_C * chi(C). Requires leading > 0.
CoverSheafInvariants simpson_from_hilbert(const HilbertPolynomial& poly, const CoverClass& cover);
HilbertPolynomial hilbert_from_simpson(const CoverSheafInvariants& inv);

/// Rank n'/n and degree c' - n'e + n'(1-g) - (n'/n) chi(C) on C of the transform
/// of a WIT_1 sheaf G on X supported on C. Requires c1(G).mu == 0.
CoverSheafInvariants degree_on_cover(const ChernCharacter& sheaf, const CoverClass& cover);

/// Chern character on X of the inverse transform of a rank-one, degree-r sheaf on C:
/// (n, varpi^-1(C) - nH + (r - p + 1 + n(g-1) - ell) mu, -(ne + ell)).
ChernCharacter cover_sheaf_to_surface_ch(const CoverClass& cover, const Rational& degree);

/// The same sheaf viewed on X^: (0, C, r - C^2/2).
ChernCharacter cover_sheaf_ch_on_cover_side(const CoverClass& cover, const Rational& degree);

}  // namespace ellfm
