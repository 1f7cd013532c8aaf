#include "ellfm/fourier_mukai.hpp"

#include "ellfm/errors.hpp"

namespace ellfm {

ChernCharacter::ChernCharacter(Side side, Rational rank, DivisorClass c1, Rational ch2)
    : side_(side), rank_(std::move(rank)), c1_(std::move(c1)), ch2_(std::move(ch2)) {
  if (c1_.side() != side_) throw SideMismatch("Chern character: c1 lives on the other surface");
}

ChernCharacter ChernCharacter::on_x(Rational rank, Rational section, Rational fibre, Rational ch2) {
  return {Side::X, std::move(rank), DivisorClass(Side::X, std::move(section), std::move(fibre)),
          std::move(ch2)};
}

ChernCharacter ChernCharacter::on_xhat(Rational rank, Rational section, Rational fibre,
                                       Rational ch2) {
  return {Side::Xhat, std::move(rank),
          DivisorClass(Side::Xhat, std::move(section), std::move(fibre)), std::move(ch2)};
}

ChernCharacter ChernCharacter::operator+(const ChernCharacter& other) const {
  if (side_ != other.side_) throw SideMismatch("Chern character sum across surfaces");
  return {side_, rank_ + other.rank_, c1_ + other.c1_, ch2_ + other.ch2_};
}

ChernCharacter ChernCharacter::operator-(const ChernCharacter& other) const {
  return *this + (-other);
}

ChernCharacter ChernCharacter::operator-() const { return {side_, -rank_, -c1_, -ch2_}; }

ChernCharacter operator*(const Rational& scale, const ChernCharacter& ch) {
  return {ch.side_, scale * ch.rank_, scale * ch.c1_, scale * ch.ch2_};
}

bool ChernCharacter::operator==(const ChernCharacter& other) const {
  return side_ == other.side_ && rank_ == other.rank_ && c1_ == other.c1_ && ch2_ == other.ch2_;
}

FibreInvariants fibre_invariants(const SurfaceGeometry& geo, const ChernCharacter& ch) {
  return {ch.rank(), intersect(geo, ch.c1(), DivisorClass::fibre(ch.side())),
          intersect(geo, ch.c1(), DivisorClass::section(ch.side())), ch.ch2()};
}

ChernCharacter fm_transform_ch(const SurfaceGeometry& geo, const ChernCharacter& sheaf) {
  if (sheaf.side() != Side::X) throw SideMismatch("fm_transform_ch expects a Chern character on X");
  const auto [n, d, c, s] = fibre_invariants(geo, sheaf);
  const Rational e(geo.e());
  const Rational half = ratio(1, 2);

  const DivisorClass theta = DivisorClass::section(Side::Xhat);
  const DivisorClass muhat = DivisorClass::fibre(Side::Xhat);
  const DivisorClass c1 = -varpi(sheaf.c1()) + Rational(d * e) * muhat + Rational(d - n) * theta +
                          Rational(c - half * e * d + s) * muhat;
  const Rational ch2 = -c - d * e + half * n * e;
  return {Side::Xhat, d, c1, ch2};
}

ChernCharacter fm_inverse_ch(const SurfaceGeometry& geo, const ChernCharacter& sheaf) {
  if (sheaf.side() != Side::Xhat) {
    throw SideMismatch("fm_inverse_ch expects a Chern character on Xhat");
  }
  const auto [n, d, c, s] = fibre_invariants(geo, sheaf);
  const Rational e(geo.e());
  const Rational half = ratio(1, 2);

  const DivisorClass h = DivisorClass::section(Side::X);
  const DivisorClass mu = DivisorClass::fibre(Side::X);
  const DivisorClass c1 = varpi_inverse(sheaf.c1()) - Rational(n * e) * mu - Rational(d + n) * h +
                          Rational(s + n * e - c - half * e * d) * mu;
  const Rational ch2 = -(c + d * e + half * n * e);
  return {Side::X, d, c1, ch2};
}

ChernCharacter wit1_transform_ch(const SurfaceGeometry& geo, const ChernCharacter& sheaf) {
  if (sheaf.side() != Side::X) throw SideMismatch("wit1_transform_ch expects a Chern character on X");
  const Rational d = intersect(geo, sheaf.c1(), DivisorClass::fibre(Side::X));
  if (d != 0) {
    throw PreconditionViolation("wit1_transform_ch: degree-zero gate failed, fibre degree c1.mu = " +
                                to_string(d) + " (WIT_1 requires fibrewise degree 0)");
  }
  return -fm_transform_ch(geo, sheaf);
}

Polarization::Polarization(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ <= 0 || b_ <= 0) throw PreconditionViolation("polarization aH + b mu needs a > 0 and b > 0");
}

std::string to_string(const ChernCharacter& ch) {
  return "(" + to_string(ch.rank()) + ", " + to_string(ch.c1()) + ", " + to_string(ch.ch2()) + ")";
}

}  // namespace ellfm
