#pragma once

// Chern characters on X and X^ and the relative Fourier-Mukai transform as an
// exact linear map between them.

#include <string>

#include "ellfm/geometry.hpp"
#include "ellfm/rational.hpp"

namespace ellfm {

/// (rank, c1, ch2) of a sheaf or complex; ch2 is the coefficient of the
/// fundamental class. For complexes this is the alternating sum over cohomology.
class ChernCharacter {
 public:
  /// Throws SideMismatch unless c1 lives on `side`.
  ChernCharacter(Side side, Rational rank, DivisorClass c1, Rational ch2);

  /// rank + section*H + fibre*mu + ch2*w on X.
  static ChernCharacter on_x(Rational rank, Rational section, Rational fibre, Rational ch2);
  static ChernCharacter on_xhat(Rational rank, Rational section, Rational fibre, Rational ch2);

  Side side() const noexcept { return side_; }
  const Rational& rank() const noexcept { return rank_; }
  const DivisorClass& c1() const noexcept { return c1_; }
  const Rational& ch2() const noexcept { return ch2_; }

  ChernCharacter operator+(const ChernCharacter& other) const;
  ChernCharacter operator-(const ChernCharacter& other) const;
  ChernCharacter operator-() const;
  friend ChernCharacter operator*(const Rational& scale, const ChernCharacter& ch);

  bool operator==(const ChernCharacter& other) const;

 private:
  Side side_;
  Rational rank_;
  DivisorClass c1_;
  Rational ch2_;
};

/// The four scalars every stability formula consumes.
struct FibreInvariants {
  Rational rank;            // n
  Rational fibre_degree;    // d = c1.mu
  Rational section_degree;  // c = c1.H
  Rational ch2;             // s

  bool operator==(const FibreInvariants&) const = default;
};

FibreInvariants fibre_invariants(const SurfaceGeometry& geo, const ChernCharacter& ch);

/// ch(S(F)) = ch(S^0 F) - ch(S^1 F) for F on X; the result lives on X^.
ChernCharacter fm_transform_ch(const SurfaceGeometry& geo, const ChernCharacter& sheaf);

/// ch of the inverse transform of G on X^; the result lives on X.
ChernCharacter fm_inverse_ch(const SurfaceGeometry& geo, const ChernCharacter& sheaf);

/// ch(S^1 F) for a WIT_1 sheaf F. Only the degree-zero gate (c1.mu == 0) is
/// checkable from invariants; fibrewise semistability is the caller's claim.
ChernCharacter wit1_transform_ch(const SurfaceGeometry& geo, const ChernCharacter& sheaf);

/// Polarization a*H + b*mu with a, b > 0.
class Polarization {
 public:
  Polarization(Rational a, Rational b);
  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }

 private:
  Rational a_;
  Rational b_;
};

std::string to_string(const ChernCharacter& ch);

}  // namespace ellfm
