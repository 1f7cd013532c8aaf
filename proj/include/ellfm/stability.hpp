#pragma once

// Slope stability with respect to aH + b*mu and numerical destabilizer search.
//
// A candidate subsheaf is described only by (n', c', d') = (rank, c1.H, c1.mu).
// It destabilizes F of rank n when n*c1(G).H' - n'*c1(F).H' > 0 for H' = aH + b*mu.

#include <optional>
#include <string>
#include <vector>

#include "ellfm/fourier_mukai.hpp"
#include "ellfm/geometry.hpp"
#include "ellfm/rational.hpp"

namespace ellfm {

struct SubsheafCandidate {
  long rank;            // n', 1 <= n' < n
  long section_degree;  // c' = c1(G).H
  long fibre_degree;    // d' = c1(G).mu

  auto operator<=>(const SubsheafCandidate&) const = default;
};

/// Inclusive ranges for c' and d'. A box with min > max in either range is empty.
struct CandidateBox {
  long c_min;
  long c_max;
  long d_min;
  long d_max;

  static CandidateBox symmetric(long c_bound, long d_bound) {
    return {-c_bound, c_bound, -d_bound, d_bound};
  }
  bool empty() const noexcept { return c_min > c_max || d_min > d_max; }
  bool operator==(const CandidateBox&) const = default;
};

/// (a*c + b*d) / n. Throws PreconditionViolation for rank <= 0.
Rational slope(const SurfaceGeometry& geo, const ChernCharacter& sheaf, const Polarization& pol);

/// a(n c' - n' c) + b(n d' - n' d): positive iff the candidate has strictly larger slope.
Rational destabilizing_excess(const FibreInvariants& sheaf, const SubsheafCandidate& cand,
                              const Polarization& pol);

/// Throws PreconditionViolation unless rank(F) = n > n' >= 1.
bool is_destabilizing(const SurfaceGeometry& geo, const SubsheafCandidate& cand,
                      const ChernCharacter& sheaf, const Polarization& pol);

struct ScanEntry {
  SubsheafCandidate candidate;
  Rational excess;  // destabilizing_excess, > 0

  bool operator==(const ScanEntry&) const = default;
};

struct ThresholdReport {
  Rational b0;  // >= 0
  std::optional<SubsheafCandidate> binding;
  /// max of n c' - n' c over the scanned box (empty box: none).
  std::optional<Rational> rho;
  /// d' = 0 candidates with n c' > n' c: destabilizing for every b.
  std::vector<SubsheafCandidate> b_independent;
  CandidateBox box;
};

enum class Execution { serial, parallel };

/// Every destabilizing candidate in the box, ordered by excess descending and then
/// (n', c', d') ascending. Throws PreconditionViolation for an empty box or a
/// non-integral / nonpositive rank.
std::vector<ScanEntry> destabilizer_scan(const SurfaceGeometry& geo, const ChernCharacter& sheaf,
                                         const Polarization& pol, const CandidateBox& box,
                                         Execution exec = Execution::parallel);

/// Smallest b0 >= 0 such that no candidate of the box with d' < 0 destabilizes for
/// b > b0. This is exact relative to the box and a lower bound for a threshold
/// valid over all subsheaves. Requires fibre degree 0; an empty box gives b0 = 0.
ThresholdReport threshold_b0(const SurfaceGeometry& geo, const ChernCharacter& sheaf,
                             const Rational& a, const CandidateBox& box,
                             Execution exec = Execution::parallel);

namespace kernels {

/// Flattened candidate space: index -> (n', c', d') with d' fastest.
struct CandidateSpace {
  long max_sub_rank;  // n - 1
  CandidateBox box;

  long long size() const noexcept;
  SubsheafCandidate at(long long index) const noexcept;
};

struct ThresholdAccumulator {
  std::optional<Rational> best_ratio;
  std::optional<SubsheafCandidate> binding;
  std::optional<Rational> rho;
  std::vector<SubsheafCandidate> b_independent;
};

/// Orders scan entries: excess descending, then candidate ascending.
bool scan_order(const ScanEntry& lhs, const ScanEntry& rhs);

namespace serial {
std::vector<ScanEntry> scan(const FibreInvariants& sheaf, const Polarization& pol,
                            const CandidateSpace& space);
ThresholdAccumulator threshold(const FibreInvariants& sheaf, const Rational& a,
                               const CandidateSpace& space);
}  // namespace serial

namespace omp {
std::vector<ScanEntry> scan(const FibreInvariants& sheaf, const Polarization& pol,
                            const CandidateSpace& space);
ThresholdAccumulator threshold(const FibreInvariants& sheaf, const Rational& a,
                               const CandidateSpace& space);
}  // namespace omp

/// Folds one candidate into the accumulator; shared by both kernels.
void accumulate(ThresholdAccumulator& acc, const FibreInvariants& sheaf, const Rational& a,
                const SubsheafCandidate& cand);
/// Merges `other` into `acc` with the same tie-breaking as sequential accumulation.
void merge(ThresholdAccumulator& acc, ThresholdAccumulator&& other);

}  // namespace kernels

std::string to_string(const SubsheafCandidate& cand);

}  // namespace ellfm
