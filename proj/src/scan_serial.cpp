// Reference kernels: plain sequential enumeration in candidate order.

#include <algorithm>

#include "ellfm/stability.hpp"

namespace ellfm::kernels::serial {

std::vector<ScanEntry> scan(const FibreInvariants& sheaf, const Polarization& pol,
                            const CandidateSpace& space) {
  std::vector<ScanEntry> hits;
  const long long total = space.size();
  for (long long i = 0; i < total; ++i) {
    const SubsheafCandidate cand = space.at(i);
    Rational excess = destabilizing_excess(sheaf, cand, pol);
    if (excess > 0) hits.push_back({cand, std::move(excess)});
  }
  std::sort(hits.begin(), hits.end(), scan_order);
  return hits;
}

ThresholdAccumulator threshold(const FibreInvariants& sheaf, const Rational& a,
                               const CandidateSpace& space) {
  ThresholdAccumulator acc;
  const long long total = space.size();
  for (long long i = 0; i < total; ++i) accumulate(acc, sheaf, a, space.at(i));
  return acc;
}

}  // namespace ellfm::kernels::serial
