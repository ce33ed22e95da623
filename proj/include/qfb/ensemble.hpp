#pragma once

#include <cstdint>
#include <vector>

#include "qfb/trajectory.hpp"

namespace qfb {

// Per-time mean and population standard deviation of the exact-vs-corrected
// fidelity over independent runs.
struct EnsembleSummary {
  int runs = 0;
  std::vector<double> times;
  std::vector<double> mean_F;
  std::vector<double> std_F;
};

// Runs trajectories run_index = 0..runs-1 off the shared master seed.  Runs
// may execute on several threads; the reduction is ordered by run index, so
// the result is independent of the thread count.  threads <= 0 picks the
// hardware concurrency.
EnsembleSummary run_ensemble(const HamiltonianSpec& spec, const Vector& psi0,
                             const ControlSchedule& schedule,
                             const KrausFamily& family,
                             const ReferenceTrajectory& reference,
                             std::uint64_t master_seed, int runs,
                             int threads = 0);

}  // namespace qfb
