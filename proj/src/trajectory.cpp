#include "qfb/trajectory.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qfb/linalg.hpp"

namespace qfb {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double spin_z(const Vector& psi) {
  if (psi.size() != 2) return kNaN;
  return std::norm(psi(0)) - std::norm(psi(1));
}

}  // namespace

void ControlSchedule::validate() const {
  if (!(tau > 0.0))
    throw std::invalid_argument("ControlSchedule: tau must be positive");
  if (K < 0) throw std::invalid_argument("ControlSchedule: K must be >= 0");
  const double step = effective_step();
  if (!(step > 0.0))
    throw std::invalid_argument("ControlSchedule: step_dt must be positive");
  if (step > tau * (1.0 + 1e-12))
    throw std::invalid_argument("ControlSchedule: step_dt must not exceed tau");
}

ReferenceTrajectory run_reference(const HamiltonianSpec& spec, const Vector& psi0,
                                  const ControlSchedule& schedule) {
  schedule.validate();
  if (psi0.size() != spec.dim())
    throw std::invalid_argument("run_reference: state dimension mismatch");
  if (!is_normalized(psi0))
    throw std::invalid_argument("run_reference: psi0 must be normalized");

  Eigen::SelfAdjointEigenSolver<Matrix> es(spec.h0);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("run_reference: eigendecomposition failed");
  const Eigen::VectorXd w = es.eigenvalues();
  const Matrix& vecs = es.eigenvectors();
  const Vector coef = vecs.adjoint() * psi0;

  ReferenceTrajectory ref;
  ref.times.reserve(schedule.K + 1);
  ref.states.reserve(schedule.K + 1);
  for (int k = 0; k <= schedule.K; ++k) {
    const double t = k * schedule.tau;
    Vector phase(w.size());
    for (int i = 0; i < w.size(); ++i)
      phase(i) = std::exp(cx(0.0, -w(i) * t)) * coef(i);
    ref.times.push_back(t);
    ref.states.push_back(vecs * phase);
  }
  return ref;
}

TrajectoryRecord run_trajectory(const HamiltonianSpec& spec, const Vector& psi0,
                                const ControlSchedule& schedule,
                                const KrausFamily& family,
                                const ReferenceTrajectory& reference,
                                std::uint64_t master_seed, int run_index,
                                const Vector& target) {
  schedule.validate();
  if (psi0.size() != spec.dim())
    throw std::invalid_argument("run_trajectory: state dimension mismatch");
  if (schedule.measurement && family.dim() != spec.dim())
    throw std::invalid_argument("run_trajectory: Kraus family dimension mismatch");
  if (static_cast<int>(reference.states.size()) != schedule.K + 1)
    throw std::invalid_argument("run_trajectory: reference length mismatch");
  if ((reference.states.front() - psi0).norm() > 1e-9)
    throw std::invalid_argument("run_trajectory: reference does not start at psi0");
  if (target.size() != 0 && target.size() != psi0.size())
    throw std::invalid_argument("run_trajectory: target dimension mismatch");

  const RngStream traj = RngStream(master_seed).child(run_index);
  const RngStream meas = traj.child(0);
  const RngStream noise_root = traj.child(1);
  const double step = schedule.effective_step();
  const bool has_target = target.size() != 0;

  TrajectoryRecord rec;
  rec.master_seed = master_seed;
  rec.run_index = run_index;
  const int rows = schedule.K + 1;
  rec.times.reserve(rows);
  rec.outcomes.reserve(rows);
  rec.probabilities.reserve(rows);

  Vector psiN = psi0;
  Vector psiNM = psi0;
  const auto record_row = [&](int k, int outcome, double prob) {
    const Vector& psiE = reference.states[k];
    rec.times.push_back(reference.times[k]);
    rec.outcomes.push_back(outcome);
    rec.probabilities.push_back(prob);
    rec.sz_E.push_back(spin_z(psiE));
    rec.sz_N.push_back(spin_z(psiN));
    rec.sz_NM.push_back(spin_z(psiNM));
    rec.F_EN.push_back(fidelity(psiE, psiN));
    rec.F_EM.push_back(fidelity(psiE, psiNM));
    rec.F_TE.push_back(has_target ? fidelity(target, psiE) : kNaN);
    rec.F_TN.push_back(has_target ? fidelity(target, psiN) : kNaN);
    rec.F_TM.push_back(has_target ? fidelity(target, psiNM) : kNaN);
  };

  record_row(0, -1, kNaN);
  for (int k = 1; k <= schedule.K; ++k) {
    const double t0 = (k - 1) * schedule.tau;
    const double t1 = k * schedule.tau;
    const Matrix u = noisy_propagator(spec, t0, t1, noise_root, step);
    psiN = u * psiN;
    psiN.normalize();
    psiNM = u * psiNM;
    psiNM.normalize();

    int outcome = -1;
    double prob = kNaN;
    if (schedule.measurement) {
      const MeasurementOutcome out =
          measure(family, psiNM, meas, static_cast<std::uint64_t>(k - 1));
      outcome = out.index;
      prob = out.probability;
      psiNM = out.post_state;
      if (schedule.feedback) {
        const MeasurementOutcome branch =
            deterministic_branch(family, reference.states[k], out.index);
        const FeedbackUnitary fb =
            build_feedback(reference.states[k], branch.post_state, k, out.index);
        psiNM = fb.matrix * psiNM;
        psiNM.normalize();
      }
    }
    record_row(k, outcome, prob);
  }
  rec.infidelity = 1.0 - rec.F_EM.back();
  return rec;
}

FeedbackFieldSchedule feedback_field_schedule(const ReferenceTrajectory& reference,
                                              const KrausFamily& family) {
  if (reference.states.empty())
    throw std::invalid_argument("feedback_field_schedule: empty reference");
  if (family.dim() != reference.states.front().size())
    throw std::invalid_argument("feedback_field_schedule: dimension mismatch");

  FeedbackFieldSchedule sched;
  const int K = static_cast<int>(reference.states.size()) - 1;
  sched.times.reserve(K);
  sched.fields.reserve(K);
  for (int k = 1; k <= K; ++k) {
    sched.times.push_back(reference.times[k]);
    std::vector<FeedbackHamiltonian> row;
    row.reserve(family.outcomes());
    for (int n = 0; n < family.outcomes(); ++n) {
      const MeasurementOutcome branch =
          deterministic_branch(family, reference.states[k], n);
      const FeedbackUnitary fb =
          build_feedback(reference.states[k], branch.post_state, k, n);
      row.push_back(extract_feedback_hamiltonian(fb, 1.0));
    }
    sched.fields.push_back(std::move(row));
  }
  return sched;
}

}  // namespace qfb
