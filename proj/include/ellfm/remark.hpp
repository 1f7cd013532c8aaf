#pragma once

// End-to-end check of the non-integral spectral cover counterexample on B = P^1:
// L = p^*w^2 (x) O_C on C = 2*Theta sits in
//   0 -> p^*w (x) O_Theta -> L -> p^*w^2 (x) O_Theta -> 0,
// has slope -4e while its subsheaf has slope -3e, and its transform F, an
// extension of p^*w by O_X, is destabilized by O_X for every aH + b*mu iff e > 0.

#include <string>
#include <vector>

#include "ellfm/fourier_mukai.hpp"
#include "ellfm/geometry.hpp"
#include "ellfm/rational.hpp"

namespace ellfm {

struct RemarkCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool ok;
};

struct RemarkReport {
  Rational cover_sheaf_slope;  // slope of L on C
  Rational subsheaf_slope;     // slope of p^*w (x) O_Theta on C
  ChernCharacter surface_sheaf;  // ch(F)
  bool destabilized_everywhere;  // O_X destabilizes F at every sampled polarization
  bool destabilized_nowhere;     // ... at none of them
  std::vector<RemarkCheck> checks;

  bool passed() const;
};

/// Polarizations sampled for the "every aH + b*mu" claim.
std::vector<Polarization> remark_polarization_samples();

/// Requires genus 0 (PreconditionViolation otherwise).
RemarkReport verify_remark(const SurfaceGeometry& geo);

}  // namespace ellfm
