#include "ellfm/geometry.hpp"

#include <string>

#include "ellfm/errors.hpp"

namespace ellfm {

namespace {

void require_same_side(const DivisorClass& u, const DivisorClass& v, const char* op) {
  if (u.side() != v.side()) {
    throw SideMismatch(std::string(op) + ": operands live on " + std::string(side_name(u.side())) +
                       " and " + std::string(side_name(v.side())));
  }
}

}  // namespace

std::string_view side_name(Side side) { return side == Side::X ? "X" : "Xhat"; }

Side parse_side(std::string_view text) {
  if (text == "X") return Side::X;
  if (text == "Xhat") return Side::Xhat;
  throw ParseError("side must be X or Xhat, got '" + std::string(text) + "'", 1);
}

SurfaceGeometry::SurfaceGeometry(long genus, long e) : genus_(genus), e_(e) {
  if (genus < 0) throw PreconditionViolation("genus must be nonnegative");
  if (e < 0) throw PreconditionViolation("e = -H^2 must be nonnegative");
}

DivisorClass::DivisorClass(Side side, Rational section, Rational fibre)
    : side_(side), section_(std::move(section)), fibre_(std::move(fibre)) {}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same_side(*this, other, "sum");
  return {side_, section_ + other.section_, fibre_ + other.fibre_};
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  require_same_side(*this, other, "difference");
  return {side_, section_ - other.section_, fibre_ - other.fibre_};
}

DivisorClass DivisorClass::operator-() const { return {side_, -section_, -fibre_}; }

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  *this = *this + other;
  return *this;
}

DivisorClass operator*(const Rational& scale, const DivisorClass& d) {
  return {d.side_, scale * d.section_, scale * d.fibre_};
}

bool DivisorClass::operator==(const DivisorClass& other) const {
  return side_ == other.side_ && section_ == other.section_ && fibre_ == other.fibre_;
}

Rational intersect(const SurfaceGeometry& geo, const DivisorClass& u, const DivisorClass& v) {
  require_same_side(u, v, "intersect");
  const Rational e(geo.e());
  return Rational(-e * u.section_coeff() * v.section_coeff() +
                  u.section_coeff() * v.fibre_coeff() + u.fibre_coeff() * v.section_coeff());
}

DivisorClass varpi(const DivisorClass& u) {
  if (u.side() != Side::X) throw SideMismatch("varpi expects a class on X");
  return {Side::Xhat, u.section_coeff(), u.fibre_coeff()};
}

DivisorClass varpi_inverse(const DivisorClass& u) {
  if (u.side() != Side::Xhat) throw SideMismatch("varpi_inverse expects a class on Xhat");
  return {Side::X, u.section_coeff(), u.fibre_coeff()};
}

DivisorClass canonical_class(const SurfaceGeometry& geo, Side side) {
  return Rational(2 * geo.genus() - 2 + geo.e()) * DivisorClass::fibre(side);
}

DivisorClass relative_canonical_class(const SurfaceGeometry& geo, Side side) {
  return Rational(geo.e()) * DivisorClass::fibre(side);
}

bool GradedClass::operator==(const GradedClass& other) const {
  return deg0 == other.deg0 && deg2 == other.deg2 && deg4 == other.deg4;
}

GradedClass add(const GradedClass& a, const GradedClass& b) {
  return {a.deg0 + b.deg0, a.deg2 + b.deg2, a.deg4 + b.deg4};
}

GradedClass multiply(const SurfaceGeometry& geo, const GradedClass& a, const GradedClass& b) {
  require_same_side(a.deg2, b.deg2, "multiply");
  return {a.deg0 * b.deg0, a.deg0 * b.deg2 + b.deg0 * a.deg2,
          a.deg0 * b.deg4 + a.deg4 * b.deg0 + intersect(geo, a.deg2, b.deg2)};
}

GradedClass todd_relative(const SurfaceGeometry& geo) {
  return {1, ratio(-geo.e(), 2) * DivisorClass::fibre(Side::X), geo.e()};
}

GradedClass todd_relative_expanded(const SurfaceGeometry& geo) {
  const DivisorClass pE = relative_canonical_class(geo, Side::X);
  const DivisorClass h = DivisorClass::section(Side::X);
  const Rational top = intersect(geo, h, pE) + ratio(13, 12) * intersect(geo, pE, pE);
  return {1, ratio(-1, 2) * pE, top};
}

Rational chi_divisor_curve(const SurfaceGeometry& geo, const DivisorClass& curve) {
  if (curve.side() != Side::Xhat) throw SideMismatch("chi_divisor_curve expects a curve on Xhat");
  const DivisorClass fibre = DivisorClass::fibre(Side::Xhat);
  if (intersect(geo, curve, fibre) <= 0) {
    throw PreconditionViolation("chi_divisor_curve: curve must have positive degree over B (C.muhat > 0)");
  }
  const DivisorClass k = canonical_class(geo, Side::Xhat);
  return Rational(ratio(-1, 2) * intersect(geo, curve, curve + k));
}

std::string to_string(const DivisorClass& d) {
  const bool on_x = d.side() == Side::X;
  const char* sec = on_x ? "H" : "Theta";
  const char* fib = on_x ? "mu" : "muhat";
  std::string out;
  auto term = [&out](const Rational& c, const char* name) {
    if (c == 0) return;
    if (out.empty()) {
      if (c == -1) out += "-";
      else if (c != 1) out += to_string(c) + "*";
    } else {
      out += c < 0 ? " - " : " + ";
      const Rational mag = abs(c);
      if (mag != 1) out += to_string(mag) + "*";
    }
    out += name;
  };
  term(d.section_coeff(), sec);
  term(d.fibre_coeff(), fib);
  return out.empty() ? "0" : out;
}

}  // namespace ellfm
