#include "qfb/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qfb {

EnsembleSummary run_ensemble(const HamiltonianSpec& spec, const Vector& psi0,
                             const ControlSchedule& schedule,
                             const KrausFamily& family,
                             const ReferenceTrajectory& reference,
                             std::uint64_t master_seed, int runs, int threads) {
  if (runs < 1) throw std::invalid_argument("run_ensemble: runs must be >= 1");
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw > 0 ? static_cast<int>(hw) : 1;
  }
  if (threads > runs) threads = runs;

  std::vector<std::vector<double>> fidelities(runs);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= runs) return;
      try {
        fidelities[i] = run_trajectory(spec, psi0, schedule, family, reference,
                                       master_seed, i)
                            .F_EM;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  EnsembleSummary sum;
  sum.runs = runs;
  sum.times = reference.times;
  const std::size_t rows = sum.times.size();
  sum.mean_F.assign(rows, 0.0);
  sum.std_F.assign(rows, 0.0);
  // Fixed-order reduction: accumulate by run index, never by completion time.
  for (int i = 0; i < runs; ++i)
    for (std::size_t r = 0; r < rows; ++r) sum.mean_F[r] += fidelities[i][r];
  for (std::size_t r = 0; r < rows; ++r) sum.mean_F[r] /= runs;
  for (int i = 0; i < runs; ++i)
    for (std::size_t r = 0; r < rows; ++r) {
      const double d = fidelities[i][r] - sum.mean_F[r];
      sum.std_F[r] += d * d;
    }
  for (std::size_t r = 0; r < rows; ++r)
    sum.std_F[r] = std::sqrt(sum.std_F[r] / runs);
  return sum;
}

}  // namespace qfb
