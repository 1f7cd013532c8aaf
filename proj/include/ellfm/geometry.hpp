#pragma once

// Intersection theory on the rank-2 lattice span{H, mu} of an elliptic surface
// X -> B with section H, and on span{Theta, muhat} of the dual fibration X^.
// Everything is determined by the genus g of B and e = deg E = -H^2.

#include <string>
#include <string_view>

#include "ellfm/rational.hpp"

namespace ellfm {

enum class Side { X, Xhat };

std::string_view side_name(Side side);
/// Accepts "X" and "Xhat" (case-sensitive).
Side parse_side(std::string_view text);

class SurfaceGeometry {
 public:
  /// Throws PreconditionViolation unless genus >= 0 and e >= 0.
  SurfaceGeometry(long genus, long e);

  long genus() const noexcept { return genus_; }
  long e() const noexcept { return e_; }

  bool operator==(const SurfaceGeometry&) const = default;

 private:
  long genus_;
  long e_;
};

/// alpha*H + beta*mu on X, or alpha*Theta + beta*muhat on X^.
class DivisorClass {
 public:
  DivisorClass(Side side, Rational section, Rational fibre);

  static DivisorClass zero(Side side) { return {side, 0, 0}; }
  /// H (or Theta).
  static DivisorClass section(Side side) { return {side, 1, 0}; }
  /// mu (or muhat).
  static DivisorClass fibre(Side side) { return {side, 0, 1}; }

  Side side() const noexcept { return side_; }
  const Rational& section_coeff() const noexcept { return section_; }
  const Rational& fibre_coeff() const noexcept { return fibre_; }

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& other);

  friend DivisorClass operator*(const Rational& scale, const DivisorClass& d);

  bool operator==(const DivisorClass& other) const;

 private:
  Side side_;
  Rational section_;
  Rational fibre_;
};

/// Symmetric bilinear pairing with H^2 = -e, H.mu = 1, mu^2 = 0.
/// Throws SideMismatch when u and v live on different surfaces.
Rational intersect(const SurfaceGeometry& geo, const DivisorClass& u, const DivisorClass& v);

/// The isomorphism X -> X^ on the lattice: H -> Theta, mu -> muhat.
DivisorClass varpi(const DivisorClass& u);
DivisorClass varpi_inverse(const DivisorClass& u);

/// Absolute canonical class (2g - 2 + e) * fibre, i.e. p^*(K_B + E).
DivisorClass canonical_class(const SurfaceGeometry& geo, Side side);

/// Relative canonical class p^*E = e * fibre.
DivisorClass relative_canonical_class(const SurfaceGeometry& geo, Side side);

/// Element of the graded ring in degrees 0, 2, 4; deg4 is the coefficient of
/// the fundamental class w.
struct GradedClass {
  Rational deg0;
  DivisorClass deg2;
  Rational deg4;

  bool operator==(const GradedClass& other) const;
};

GradedClass add(const GradedClass& a, const GradedClass& b);
/// Product truncated above degree 4.
GradedClass multiply(const SurfaceGeometry& geo, const GradedClass& a, const GradedClass& b);

/// Todd class of the virtual relative tangent bundle: 1 - 1/2 p^*E + e w.
GradedClass todd_relative(const SurfaceGeometry& geo);

/// The same class assembled term by term from its Weierstrass expansion
/// 1 - 1/2 p^*E + H.p^*E + 13/12 (p^*E)^2, with the degree-4 terms evaluated
/// through the pairing.
GradedClass todd_relative_expanded(const SurfaceGeometry& geo);

/// chi(O_C) = -1/2 C.(C + K) for an effective curve C on X^ with C.muhat > 0.
Rational chi_divisor_curve(const SurfaceGeometry& geo, const DivisorClass& curve);

std::string to_string(const DivisorClass& d);

}  // namespace ellfm
