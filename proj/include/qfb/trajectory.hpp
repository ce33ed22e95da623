#pragma once

#include <cstdint>
#include <vector>

#include "qfb/dynamics.hpp"
#include "qfb/feedback.hpp"
#include "qfb/measurement.hpp"
#include "qfb/rng.hpp"
#include "qfb/types.hpp"

namespace qfb {

struct ControlSchedule {
  double tau = 1.0;      // period between measurements
  int K = 1;             // number of measurement-feedback cycles
  double step_dt = 0.0;  // integrator step; <= 0 selects tau / 50
  bool measurement = true;
  bool feedback = true;

  double effective_step() const { return step_dt > 0.0 ? step_dt : tau / 50.0; }
  double t_total() const { return tau * K; }
  void validate() const;
};

// Noiseless states at the cycle boundaries t_k = k tau, k = 0..K.
struct ReferenceTrajectory {
  std::vector<double> times;
  std::vector<Vector> states;
};

ReferenceTrajectory run_reference(const HamiltonianSpec& spec, const Vector& psi0,
                                  const ControlSchedule& schedule);

// One stochastic run.  Row k holds the state of affairs at t_k: the sampled
// outcome of cycle k (-1 before the first measurement), spin projections for
// two-dimensional systems (NaN otherwise) and pairwise fidelities between the
// exact (E), bare noisy (N), measured-and-corrected noisy (NM) and target (T)
// states.  Target columns are NaN when no target state is set.
struct TrajectoryRecord {
  std::uint64_t master_seed = 0;
  int run_index = 0;
  std::vector<double> times;
  std::vector<int> outcomes;
  std::vector<double> probabilities;  // probability of the sampled outcome
  std::vector<double> sz_E, sz_N, sz_NM;
  std::vector<double> F_EN, F_EM, F_TE, F_TN, F_TM;
  double infidelity = 0.0;  // 1 - F_EM at t_K
};

// Cycle k: noisy evolution over (t_{k-1}, t_k], unsharp measurement of the
// NM state, then a correction unitary synthesized from the reference state
// and its deterministically-branched post-measurement state.  Disabling
// feedback keeps the measurement but skips the correction; disabling
// measurement yields the bare noisy evolution.
TrajectoryRecord run_trajectory(const HamiltonianSpec& spec, const Vector& psi0,
                                const ControlSchedule& schedule,
                                const KrausFamily& family,
                                const ReferenceTrajectory& reference,
                                std::uint64_t master_seed, int run_index,
                                const Vector& target = Vector());

// The correction unitary for outcome n at step k depends only on the
// reference trajectory, so the whole field schedule is deterministic.
// fields[k - 1][n] describes cycle k, outcome n; the tabulated Bx/By/Bz are
// the generator components, i.e. field amplitude times the feedback duration.
struct FeedbackFieldSchedule {
  std::vector<double> times;  // t_1..t_K
  std::vector<std::vector<FeedbackHamiltonian>> fields;
};

FeedbackFieldSchedule feedback_field_schedule(const ReferenceTrajectory& reference,
                                              const KrausFamily& family);

}  // namespace qfb
