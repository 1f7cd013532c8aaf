// OpenMP kernels. Each thread works on a contiguous static chunk of the
// candidate space; partial results are combined in thread order and then put in
// the same total order as the serial kernels, so output is independent of the
// thread count.

#include <omp.h>

#include <algorithm>
#include <vector>

#include "ellfm/stability.hpp"

namespace ellfm::kernels::omp {

std::vector<ScanEntry> scan(const FibreInvariants& sheaf, const Polarization& pol,
                            const CandidateSpace& space) {
  const long long total = space.size();
  std::vector<std::vector<ScanEntry>> partial(static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel
  {
    std::vector<ScanEntry>& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long long i = 0; i < total; ++i) {
      const SubsheafCandidate cand = space.at(i);
      Rational excess = destabilizing_excess(sheaf, cand, pol);
      if (excess > 0) local.push_back({cand, std::move(excess)});
    }
  }

  std::vector<ScanEntry> hits;
  for (auto& local : partial) {
    std::move(local.begin(), local.end(), std::back_inserter(hits));
  }
  std::sort(hits.begin(), hits.end(), scan_order);
  return hits;
}

ThresholdAccumulator threshold(const FibreInvariants& sheaf, const Rational& a,
                               const CandidateSpace& space) {
  const long long total = space.size();
  std::vector<ThresholdAccumulator> partial(static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel
  {
    ThresholdAccumulator& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long long i = 0; i < total; ++i) accumulate(local, sheaf, a, space.at(i));
  }

  ThresholdAccumulator acc;
  for (auto& local : partial) merge(acc, std::move(local));
  return acc;
}

}  // namespace ellfm::kernels::omp
