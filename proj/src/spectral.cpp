#include "ellfm/spectral.hpp"

#include "ellfm/errors.hpp"

namespace ellfm {

CoverClass::CoverClass(SurfaceGeometry geo, long n, long k) : geo_(geo), n_(n), k_(k) {
  if (n < 1) throw PreconditionViolation("spectral cover degree n must be >= 1");
}

DivisorClass CoverClass::divisor() const { return {Side::Xhat, n_, k_}; }

CoverInvariants cover_invariants(const CoverClass& cover) {
  const SurfaceGeometry& geo = cover.geometry();
  Rational chi = chi_divisor_curve(geo, cover.divisor());
  Rational p = 1 - chi;
  Rational ell = intersect(geo, cover.divisor(), DivisorClass::section(Side::Xhat));
  return {std::move(chi), std::move(p), std::move(ell)};
}

Rational CoverSheafInvariants::slope() const {
  if (rank == 0) throw PreconditionViolation("slope undefined for Simpson rank 0");
  return degree / rank;
}

CoverSheafInvariants simpson_from_hilbert(const HilbertPolynomial& poly, const CoverClass& cover) {
  if (poly.leading <= 0) {
    throw PreconditionViolation("Hilbert polynomial of a pure one-dimensional sheaf needs positive leading coefficient");
  }
  const Rational chi = cover_invariants(cover).chi;
  Rational rank = poly.leading / cover.degree();
  Rational degree = poly.constant - rank * chi;
  return {cover, std::move(rank), std::move(degree)};
}

HilbertPolynomial hilbert_from_simpson(const CoverSheafInvariants& inv) {
  const Rational chi = cover_invariants(inv.cover).chi;
  return {inv.rank * inv.cover.degree(), inv.degree + inv.rank * chi};
}

CoverSheafInvariants degree_on_cover(const ChernCharacter& sheaf, const CoverClass& cover) {
  if (sheaf.side() != Side::X) throw SideMismatch("degree_on_cover expects a Chern character on X");
  const SurfaceGeometry& geo = cover.geometry();
  const FibreInvariants inv = fibre_invariants(geo, sheaf);
  if (inv.fibre_degree != 0) {
    throw PreconditionViolation("degree_on_cover: sheaf must have fibre degree 0, got c1.mu = " +
                                to_string(inv.fibre_degree));
  }
  const Rational& n_sub = inv.rank;
  const long n = cover.degree();
  const Rational chi = cover_invariants(cover).chi;
  Rational degree = inv.section_degree - n_sub * geo.e() + n_sub * (1 - geo.genus()) -
                    n_sub / n * chi;
  return {cover, n_sub / n, std::move(degree)};
}

ChernCharacter cover_sheaf_to_surface_ch(const CoverClass& cover, const Rational& degree) {
  const SurfaceGeometry& geo = cover.geometry();
  const auto [chi, p, ell] = cover_invariants(cover);
  const long n = cover.degree();
  const DivisorClass mu = DivisorClass::fibre(Side::X);
  const DivisorClass c1 = varpi_inverse(cover.divisor()) -
                          Rational(n) * DivisorClass::section(Side::X) +
                          Rational(degree - p + 1 + n * (geo.genus() - 1) - ell) * mu;
  return {Side::X, n, c1, Rational(-(n * geo.e() + ell))};
}

ChernCharacter cover_sheaf_ch_on_cover_side(const CoverClass& cover, const Rational& degree) {
  const DivisorClass c = cover.divisor();
  const Rational self = intersect(cover.geometry(), c, c);
  return {Side::Xhat, 0, c, degree - self / 2};
}

}  // namespace ellfm
