#include "ellfm/stability.hpp"

#include <algorithm>
#include <string>

#include "ellfm/errors.hpp"

namespace ellfm {

namespace {

// n as a positive integer, for enumerating sub-ranks.
long integral_rank(const FibreInvariants& inv, const char* op) {
  if (!is_integer(inv.rank) || inv.rank <= 0 || !inv.rank.get_num().fits_slong_p()) {
    throw PreconditionViolation(std::string(op) + ": rank must be a positive integer, got " +
                                to_string(inv.rank));
  }
  return inv.rank.get_num().get_si();
}

kernels::CandidateSpace make_space(long n, const CandidateBox& box) {
  kernels::CandidateSpace space{n - 1, box};
  if (!box.empty()) {
    long long c_span = 0;
    long long d_span = 0;
    long long cells = 0;
    if (__builtin_sub_overflow(static_cast<long long>(box.c_max), box.c_min, &c_span) ||
        __builtin_sub_overflow(static_cast<long long>(box.d_max), box.d_min, &d_span) ||
        __builtin_mul_overflow(c_span + 1, d_span + 1, &cells) ||
        __builtin_mul_overflow(cells, static_cast<long long>(n - 1), &cells)) {
      throw PreconditionViolation("candidate box is too large to enumerate");
    }
  }
  return space;
}

}  // namespace

Rational slope(const SurfaceGeometry& geo, const ChernCharacter& sheaf, const Polarization& pol) {
  const FibreInvariants inv = fibre_invariants(geo, sheaf);
  if (inv.rank <= 0) throw PreconditionViolation("slope needs positive rank, got " + to_string(inv.rank));
  return (pol.a() * inv.section_degree + pol.b() * inv.fibre_degree) / inv.rank;
}

Rational destabilizing_excess(const FibreInvariants& sheaf, const SubsheafCandidate& cand,
                              const Polarization& pol) {
  const Rational& n = sheaf.rank;
  return pol.a() * (n * cand.section_degree - cand.rank * sheaf.section_degree) +
         pol.b() * (n * cand.fibre_degree - cand.rank * sheaf.fibre_degree);
}

bool is_destabilizing(const SurfaceGeometry& geo, const SubsheafCandidate& cand,
                      const ChernCharacter& sheaf, const Polarization& pol) {
  const FibreInvariants inv = fibre_invariants(geo, sheaf);
  if (cand.rank < 1 || inv.rank <= cand.rank) {
    throw PreconditionViolation("is_destabilizing: need rank(F) > n' >= 1, got rank(F) = " +
                                to_string(inv.rank) + ", n' = " + std::to_string(cand.rank));
  }
  return destabilizing_excess(inv, cand, pol) > 0;
}

std::vector<ScanEntry> destabilizer_scan(const SurfaceGeometry& geo, const ChernCharacter& sheaf,
                                         const Polarization& pol, const CandidateBox& box,
                                         Execution exec) {
  if (box.empty()) throw PreconditionViolation("destabilizer_scan: candidate box is empty or inverted");
  const FibreInvariants inv = fibre_invariants(geo, sheaf);
  const kernels::CandidateSpace space = make_space(integral_rank(inv, "destabilizer_scan"), box);
  return exec == Execution::serial ? kernels::serial::scan(inv, pol, space)
                                   : kernels::omp::scan(inv, pol, space);
}

ThresholdReport threshold_b0(const SurfaceGeometry& geo, const ChernCharacter& sheaf,
                             const Rational& a, const CandidateBox& box, Execution exec) {
  const FibreInvariants inv = fibre_invariants(geo, sheaf);
  if (inv.fibre_degree != 0) {
    throw PreconditionViolation(
        "threshold_b0: fibre degree c1.mu = " + to_string(inv.fibre_degree) +
        " is nonzero; the threshold only applies to fibrewise degree-zero (WIT_1 / semistable) sheaves");
  }
  if (a <= 0) throw PreconditionViolation("threshold_b0: a must be positive");
  const long n = integral_rank(inv, "threshold_b0");

  ThresholdReport report{0, std::nullopt, std::nullopt, {}, box};
  if (box.empty()) return report;

  const kernels::CandidateSpace space = make_space(n, box);
  kernels::ThresholdAccumulator acc = exec == Execution::serial
                                          ? kernels::serial::threshold(inv, a, space)
                                          : kernels::omp::threshold(inv, a, space);
  if (acc.best_ratio && *acc.best_ratio > 0) {
    report.b0 = *acc.best_ratio;
    report.binding = acc.binding;
  }
  report.rho = std::move(acc.rho);
  report.b_independent = std::move(acc.b_independent);
  std::sort(report.b_independent.begin(), report.b_independent.end());
  return report;
}

namespace kernels {

long long CandidateSpace::size() const noexcept {
  if (box.empty() || max_sub_rank < 1) return 0;
  const long long cs = static_cast<long long>(box.c_max) - box.c_min + 1;
  const long long ds = static_cast<long long>(box.d_max) - box.d_min + 1;
  return cs * ds * max_sub_rank;
}

SubsheafCandidate CandidateSpace::at(long long index) const noexcept {
  const long long ds = static_cast<long long>(box.d_max) - box.d_min + 1;
  const long long cs = static_cast<long long>(box.c_max) - box.c_min + 1;
  const long long d_off = index % ds;
  index /= ds;
  const long long c_off = index % cs;
  index /= cs;
  return {static_cast<long>(index + 1), static_cast<long>(box.c_min + c_off),
          static_cast<long>(box.d_min + d_off)};
}

bool scan_order(const ScanEntry& lhs, const ScanEntry& rhs) {
  if (lhs.excess != rhs.excess) return lhs.excess > rhs.excess;
  return lhs.candidate < rhs.candidate;
}

void accumulate(ThresholdAccumulator& acc, const FibreInvariants& sheaf, const Rational& a,
                const SubsheafCandidate& cand) {
  Rational rho = sheaf.rank * cand.section_degree - cand.rank * sheaf.section_degree;
  if (cand.fibre_degree < 0) {
    Rational ratio = a * rho / (sheaf.rank * -cand.fibre_degree);
    if (!acc.best_ratio || ratio > *acc.best_ratio ||
        (ratio == *acc.best_ratio && cand < *acc.binding)) {
      acc.best_ratio = std::move(ratio);
      acc.binding = cand;
    }
  } else if (cand.fibre_degree == 0 && rho > 0) {
    acc.b_independent.push_back(cand);
  }
  if (!acc.rho || rho > *acc.rho) acc.rho = std::move(rho);
}

void merge(ThresholdAccumulator& acc, ThresholdAccumulator&& other) {
  if (other.best_ratio &&
      (!acc.best_ratio || *other.best_ratio > *acc.best_ratio ||
       (*other.best_ratio == *acc.best_ratio && *other.binding < *acc.binding))) {
    acc.best_ratio = std::move(other.best_ratio);
    acc.binding = other.binding;
  }
  if (other.rho && (!acc.rho || *other.rho > *acc.rho)) acc.rho = std::move(other.rho);
  acc.b_independent.insert(acc.b_independent.end(), other.b_independent.begin(),
                           other.b_independent.end());
}

}  // namespace kernels

std::string to_string(const SubsheafCandidate& cand) {
  return "(n'=" + std::to_string(cand.rank) + ", c'=" + std::to_string(cand.section_degree) +
         ", d'=" + std::to_string(cand.fibre_degree) + ")";
}

}  // namespace ellfm
