#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ellfm/errors.hpp"
#include "ellfm/stability.hpp"
#include "oracles.hpp"

using namespace ellfm;

namespace {

std::vector<SubsheafCandidate> candidates_of(const std::vector<ScanEntry>& hits) {
  std::vector<SubsheafCandidate> out;
  for (const auto& h : hits) out.push_back(h.candidate);
  return out;
}

ChernCharacter remark_bundle(long e) { return ChernCharacter::on_x(2, 0, -e, 0); }

}  // namespace

TEST_CASE("slope") {
  for (long e = 0; e <= 4; ++e) {
    const SurfaceGeometry geo(0, e);
    for (const Rational& a : {Rational(1), ratio(1, 3), Rational(7)}) {
      const Polarization pol(a, 5);
      CHECK(slope(geo, remark_bundle(e), pol) == -e * a / 2);
      CHECK(slope(geo, ChernCharacter::on_x(1, 0, 0, 0), pol) == 0);
    }
  }
  CHECK_THROWS_AS(slope(SurfaceGeometry(0, 1), ChernCharacter::on_x(0, 0, 1, 0), Polarization(1, 1)),
                  PreconditionViolation);
  CHECK_THROWS_AS(slope(SurfaceGeometry(0, 1), ChernCharacter::on_x(-1, 0, 1, 0), Polarization(1, 1)),
                  PreconditionViolation);
}

TEST_CASE("is_destabilizing") {
  const SurfaceGeometry geo(0, 1);
  const Polarization unit(1, 1);
  CHECK(is_destabilizing(geo, {1, 0, 0}, remark_bundle(1), unit));
  CHECK(destabilizing_excess(fibre_invariants(geo, remark_bundle(1)), {1, 0, 0}, unit) == 1);
  CHECK_FALSE(is_destabilizing(geo, {1, 0, 0}, ChernCharacter::on_x(2, 0, 0, 0), unit));
  CHECK(destabilizing_excess({2, 0, 0, 0}, {1, 0, -1}, Polarization(1, 10)) == -20);
  CHECK_FALSE(is_destabilizing(geo, {1, 0, -1}, ChernCharacter::on_x(2, 0, 0, 0), Polarization(1, 10)));

  CHECK_THROWS_AS(is_destabilizing(geo, {2, 0, 0}, remark_bundle(1), unit), PreconditionViolation);
  CHECK_THROWS_AS(is_destabilizing(geo, {0, 0, 0}, remark_bundle(1), unit), PreconditionViolation);
}

TEST_CASE("is_destabilizing agrees with explicit slope comparison") {
  std::mt19937_64 rng(5);
  for (long e = 0; e <= 4; ++e) {
    const SurfaceGeometry geo(2, e);
    for (int i = 0; i < 300; ++i) {
      std::uniform_int_distribution<long> rank(2, 6), small(-5, 5);
      const ChernCharacter f = ChernCharacter::on_x(rank(rng), small(rng), small(rng), small(rng));
      const SubsheafCandidate cand{std::uniform_int_distribution<long>(1, f.rank().get_num().get_si() - 1)(rng),
                                   small(rng), small(rng)};
      Rational a = oracle::random_rational(rng, 7), b = oracle::random_rational(rng, 7);
      if (a <= 0) a = 1 - a;
      if (b <= 0) b = 1 - b;
      const Polarization pol(a, b);
      CHECK(is_destabilizing(geo, cand, f, pol) == oracle::destabilizes_by_slopes(geo, cand, f, pol));
    }
  }
}

TEST_CASE("destabilizer scan examples") {
  const SurfaceGeometry geo(0, 1);
  const auto box = CandidateBox::symmetric(3, 3);
  const auto hits = destabilizer_scan(geo, remark_bundle(1), Polarization(1, 1), box);
  const auto cands = candidates_of(hits);
  CHECK(std::find(cands.begin(), cands.end(), SubsheafCandidate{1, 0, 0}) != cands.end());

  CHECK(destabilizer_scan(geo, ChernCharacter::on_x(1, 0, 0, 0), Polarization(1, 1), box).empty());

  // (2, 0, 0) on e = 0: the box contains (1, 1, 0), whose slope a exceeds 0, so the
  // scan is not empty; it is exactly the brute-force set.
  const SurfaceGeometry flat(0, 0);
  const ChernCharacter trivial2 = ChernCharacter::on_x(2, 0, 0, 0);
  const auto flat_hits = destabilizer_scan(flat, trivial2, Polarization(1, 1), box);
  auto sorted = candidates_of(flat_hits);
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == oracle::brute_force_destabilizers(flat, trivial2, Polarization(1, 1), box));
  CHECK(std::find(sorted.begin(), sorted.end(), SubsheafCandidate{1, 1, 0}) != sorted.end());
  CHECK(std::find(sorted.begin(), sorted.end(), SubsheafCandidate{1, 0, 0}) == sorted.end());

  CHECK_THROWS_AS(destabilizer_scan(geo, remark_bundle(1), Polarization(1, 1), {0, -1, 0, 0}),
                  PreconditionViolation);
  CHECK_THROWS_AS(destabilizer_scan(geo, ChernCharacter::on_x(ratio(3, 2), 0, 0, 0), Polarization(1, 1), box),
                  PreconditionViolation);
}

TEST_CASE("scan matches brute force, is ordered, and kernels agree") {
  std::mt19937_64 rng(31);
  for (long e = 0; e <= 3; ++e) {
    const SurfaceGeometry geo(1, e);
    for (int i = 0; i < 25; ++i) {
      std::uniform_int_distribution<long> rank(1, 5), small(-4, 4), bound(0, 4);
      const ChernCharacter f = ChernCharacter::on_x(rank(rng), small(rng), small(rng), 0);
      const Polarization pol(std::uniform_int_distribution<long>(1, 5)(rng),
                             std::uniform_int_distribution<long>(1, 5)(rng));
      const CandidateBox box = CandidateBox::symmetric(bound(rng), bound(rng));
      const auto serial = destabilizer_scan(geo, f, pol, box, Execution::serial);
      const auto parallel = destabilizer_scan(geo, f, pol, box, Execution::parallel);
      REQUIRE(serial == parallel);
      REQUIRE(std::is_sorted(serial.begin(), serial.end(), kernels::scan_order));
      auto sorted = candidates_of(serial);
      std::sort(sorted.begin(), sorted.end());
      REQUIRE(sorted == oracle::brute_force_destabilizers(geo, f, pol, box));
      REQUIRE(destabilizer_scan(geo, f, pol, box) == parallel);
    }
  }
}

TEST_CASE("candidate space enumerates in lexicographic order") {
  const kernels::CandidateSpace space{2, {-1, 1, -2, 0}};
  REQUIRE(space.size() == 18);
  std::vector<SubsheafCandidate> seen;
  for (long long i = 0; i < space.size(); ++i) seen.push_back(space.at(i));
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.front() == SubsheafCandidate{1, -1, -2});
  CHECK(seen.back() == SubsheafCandidate{2, 1, 0});
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("threshold examples") {
  const SurfaceGeometry geo(0, 0);
  const ChernCharacter f = ChernCharacter::on_x(2, 0, 0, 0);
  const CandidateBox box{3, 3, -1, -1};
  const ThresholdReport t = threshold_b0(geo, f, 1, box);
  CHECK(t.b0 == 3);
  REQUIRE(t.binding.has_value());
  CHECK(*t.binding == SubsheafCandidate{1, 3, -1});
  CHECK(threshold_b0(geo, f, 2, box).b0 == 6);

  const ThresholdReport none = threshold_b0(geo, f, 1, {0, -1, 0, 0});
  CHECK(none.b0 == 0);
  CHECK_FALSE(none.binding.has_value());
  CHECK_FALSE(none.rho.has_value());

  // Remark bundle on e = 1: a(2c' + n')/(2(-d')) peaks at c' = 3, d' = -1.
  const SurfaceGeometry geo1(0, 1);
  const ThresholdReport r = threshold_b0(geo1, remark_bundle(1), 1, CandidateBox::symmetric(3, 3));
  CHECK(r.b0 == ratio(7, 2));
  CHECK(*r.binding == SubsheafCandidate{1, 3, -1});
  CHECK(*r.rho == 7);
  CHECK(r.b_independent ==
        std::vector<SubsheafCandidate>{{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}});

  // All ratios negative: clamp to zero, no binding candidate.
  const ThresholdReport clamped = threshold_b0(geo, f, 1, {-3, -1, -2, -1});
  CHECK(clamped.b0 == 0);
  CHECK_FALSE(clamped.binding.has_value());

  CHECK_THROWS_AS(threshold_b0(geo, ChernCharacter::on_x(2, 1, 0, 0), 1, box), PreconditionViolation);
  CHECK_THROWS_AS(threshold_b0(geo, f, 0, box), PreconditionViolation);
}

TEST_CASE("threshold is homogeneous in a, monotone in the box, and sound") {
  std::mt19937_64 rng(77);
  for (long e = 0; e <= 4; ++e) {
    const SurfaceGeometry geo(0, e);
    for (int i = 0; i < 20; ++i) {
      std::uniform_int_distribution<long> rank(2, 5), small(-4, 4), bound(0, 4);
      const ChernCharacter f = ChernCharacter::on_x(rank(rng), 0, small(rng), small(rng));
      const Rational a = std::uniform_int_distribution<long>(1, 4)(rng);
      const long cb = bound(rng), db = bound(rng);
      const ThresholdReport t = threshold_b0(geo, f, a, CandidateBox::symmetric(cb, db));
      const ThresholdReport serial =
          threshold_b0(geo, f, a, CandidateBox::symmetric(cb, db), Execution::serial);
      REQUIRE(t.b0 == serial.b0);
      REQUIRE(t.binding == serial.binding);
      REQUIRE(t.rho == serial.rho);
      REQUIRE(t.b_independent == serial.b_independent);

      CHECK(threshold_b0(geo, f, 2 * a, CandidateBox::symmetric(cb, db)).b0 == 2 * t.b0);
      CHECK(threshold_b0(geo, f, a, CandidateBox::symmetric(cb + 1, db + 1)).b0 >= t.b0);

      const long n = f.rank().get_num().get_si();
      for (const Rational& extra : {ratio(1, 1000), ratio(1, 2), Rational(1), Rational(50)}) {
        const Polarization pol(a, t.b0 + extra);
        for (long np = 1; np < n; ++np) {
          for (long c = -cb; c <= cb; ++c) {
            for (long d = -db; d < 0; ++d) {
              REQUIRE_FALSE(is_destabilizing(geo, {np, c, d}, f, pol));
            }
          }
        }
      }
      // Just below b0 the binding candidate does destabilize.
      if (t.binding) {
        const Polarization below(a, t.b0 - t.b0 / 1000);
        CHECK(is_destabilizing(geo, *t.binding, f, below));
      }
    }
  }
}
