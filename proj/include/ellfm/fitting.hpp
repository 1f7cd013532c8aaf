#pragma once

// S-equivalence classes of fibrewise semistable degree-zero sheaves, encoded by
// the points of X^_s carrying their rank-one Jordan-Holder factors.

#include <string>
#include <vector>

namespace ellfm {

struct SEquivalencePart {
  std::string point;  // opaque id of xi_i^* in the fibre of X^
  long multiplicity;  // n_i >= 1
  bool singular;      // xi_i^* is the singular point of the fibre

  bool operator==(const SEquivalencePart&) const = default;
};

/// Canonical multiset of parts: parts at the same point are merged and the
/// result is sorted by point id, so S-equivalent decompositions compare equal.
class SEquivalenceClass {
 public:
  /// Throws PreconditionViolation on an empty list, a multiplicity < 1, two
  /// distinct singular points, or one point flagged both ways.
  explicit SEquivalenceClass(std::vector<SEquivalencePart> parts);

  const std::vector<SEquivalencePart>& parts() const noexcept { return parts_; }
  long rank() const noexcept;
  /// n_0, the multiplicity at the singular point (0 if none).
  long singular_multiplicity() const noexcept;

  bool operator==(const SEquivalenceClass&) const = default;

 private:
  std::vector<SEquivalencePart> parts_;
};

struct CycleTerm {
  std::string point;
  long exponent;

  bool operator==(const CycleTerm&) const = default;
};

struct FittingCycle {
  std::vector<CycleTerm> cycle;  // F_0 = prod m_i^{n_i}
  long length;                   // length of O / F_0
};

/// length(O/m^k) at a point of the fibre: k at a smooth point, 2k - 1 at the
/// planar double point of a singular Weierstrass fibre.
long colength_of_power(long exponent, bool singular);

FittingCycle fitting_cycle(const SEquivalenceClass& cls);

/// n_0 xi_0^* + ... + n_r xi_r^*, a degree-n point of the symmetric product.
struct SymPoint {
  std::vector<CycleTerm> terms;
  long degree;

  bool operator==(const SymPoint&) const = default;
};

SymPoint sym_point(const SEquivalenceClass& cls);

std::string to_string(const SymPoint& point);

/// Parses "id:mult" or "id:mult:s" (singular). Throws ParseError.
SEquivalencePart parse_part(const std::string& text);

}  // namespace ellfm
