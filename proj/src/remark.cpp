#include "ellfm/remark.hpp"

#include <algorithm>

#include "ellfm/errors.hpp"
#include "ellfm/spectral.hpp"
#include "ellfm/stability.hpp"

namespace ellfm {

namespace {

// chi(B, w^j (x) O(m*pt)) on the section Theta = B, via Riemann-Roch on B.
HilbertPolynomial twisted_section_hilbert(const SurfaceGeometry& geo, long twist) {
  return {1, Rational(-twist * geo.e() + 1 - geo.genus())};
}

RemarkCheck check(std::string name, const std::string& expected, const std::string& computed) {
  return {std::move(name), expected, computed, expected == computed};
}

}  // namespace

bool RemarkReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RemarkCheck& c) { return c.ok; });
}

std::vector<Polarization> remark_polarization_samples() {
  const std::vector<Rational> values = {ratio(1, 100), ratio(1, 7), ratio(1, 2), 1, 3, 100};
  std::vector<Polarization> out;
  for (const auto& a : values) {
    for (const auto& b : values) out.emplace_back(a, b);
  }
  return out;
}

RemarkReport verify_remark(const SurfaceGeometry& geo) {
  if (geo.genus() != 0) {
    throw PreconditionViolation("verify-remark is set on B = P^1 and needs genus 0");
  }
  const long e = geo.e();
  const CoverClass cover(geo, 2, 0);

  const HilbertPolynomial sub = twisted_section_hilbert(geo, 1);
  const HilbertPolynomial quot = twisted_section_hilbert(geo, 2);
  const HilbertPolynomial whole{sub.leading + quot.leading, sub.constant + quot.constant};

  const CoverSheafInvariants whole_inv = simpson_from_hilbert(whole, cover);
  const CoverSheafInvariants sub_inv = simpson_from_hilbert(sub, cover);

  const ChernCharacter on_cover = cover_sheaf_ch_on_cover_side(cover, whole_inv.degree);
  const ChernCharacter surface = fm_inverse_ch(geo, on_cover);
  const ChernCharacter structure_sheaf = ChernCharacter::on_x(1, 0, 0, 0);
  const ChernCharacter pullback_omega = ChernCharacter::on_x(1, 0, -e, 0);  // c1 = -E, c1^2 = 0

  RemarkReport report{whole_inv.slope(), sub_inv.slope(), surface, true, true, {}};

  // O_X has c1 = 0, so n' = 1, c' = 0, d' = 0.
  const SubsheafCandidate structure_candidate{1, 0, 0};
  for (const auto& pol : remark_polarization_samples()) {
    const bool hit = is_destabilizing(geo, structure_candidate, surface, pol);
    report.destabilized_everywhere = report.destabilized_everywhere && hit;
    report.destabilized_nowhere = report.destabilized_nowhere && !hit;
  }

  auto& checks = report.checks;
  checks.push_back(check("slope of L on C = 2Theta", to_string(Rational(-4 * e)),
                         to_string(report.cover_sheaf_slope)));
  checks.push_back(check("slope of p^*w (x) O_Theta", to_string(Rational(-3 * e)),
                         to_string(report.subsheaf_slope)));
  checks.push_back(check("ch(F) = ch(O_X) + ch(p^*w)", to_string(structure_sheaf + pullback_omega),
                         to_string(surface)));
  checks.push_back(check("ch(F) from the cover-sheaf formula",
                         to_string(cover_sheaf_to_surface_ch(cover, whole_inv.degree)),
                         to_string(surface)));
  const CoverSheafInvariants f_on_cover = degree_on_cover(surface, cover);
  checks.push_back(check("(r_C, d_C) of L from ch(F)",
                         to_string(whole_inv.rank) + ", " + to_string(whole_inv.degree),
                         to_string(f_on_cover.rank) + ", " + to_string(f_on_cover.degree)));
  const CoverSheafInvariants o_on_cover = degree_on_cover(structure_sheaf, cover);
  checks.push_back(check("(r_C, d_C) of the subsheaf from ch(O_X)",
                         to_string(sub_inv.rank) + ", " + to_string(sub_inv.degree),
                         to_string(o_on_cover.rank) + ", " + to_string(o_on_cover.degree)));

  auto verdict = [](bool everywhere, bool nowhere) -> std::string {
    if (everywhere) return "every sampled polarization";
    if (nowhere) return "no polarization";
    return "some polarizations";
  };
  checks.push_back(check("O_X strictly destabilizes F at",
                         e > 0 ? verdict(true, false) : verdict(false, true),
                         verdict(report.destabilized_everywhere, report.destabilized_nowhere)));
  return report;
}

}  // namespace ellfm
