#include "qfb/validate.hpp"

#include <cmath>
#include <sstream>

#include "qfb/feedback.hpp"
#include "qfb/linalg.hpp"
#include "qfb/measurement.hpp"
#include "qfb/rng.hpp"

namespace qfb {

namespace {

Vector random_state(const RngStream& stream, std::uint64_t base, int dim) {
  Vector psi(dim);
  for (int d = 0; d < dim; ++d)
    psi(d) = cx(stream.normal(base + 2 * d), stream.normal(base + 2 * d + 1));
  psi.normalize();
  return psi;
}

std::vector<double> random_probabilities(const RngStream& stream,
                                         std::uint64_t base, int dim) {
  std::vector<double> p(dim);
  double sum = 0.0;
  for (int d = 0; d < dim; ++d) {
    p[d] = 0.05 + stream.uniform(base + d);  // bounded away from zero
    sum += p[d];
  }
  for (double& v : p) v /= sum;
  return p;
}

std::string format_sci(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

}  // namespace

SuiteResult validate_povm() {
  SuiteResult res;
  res.name = "povm";
  double worst = 0.0;
  for (double p0 : {0.05, 0.2, 0.35, 0.49})
    worst = std::max(worst, kraus_qubit(p0).completeness_residual());
  const std::vector<double> p_nine = {1.0 / 18, 1.0 / 18, 1.0 / 18, 1.0 / 18,
                                      3.0 / 18, 3.0 / 18, 3.0 / 18, 3.0 / 18,
                                      1.0 / 9};
  worst = std::max(worst, kraus_nlevel(p_nine).completeness_residual());
  const RngStream stream(7101);
  for (int rep = 0; rep < 100; ++rep) {
    const std::vector<double> p =
        random_probabilities(stream, 16 * static_cast<std::uint64_t>(rep), 9);
    worst = std::max(worst, kraus_nlevel(p).completeness_residual());
  }
  res.passed = worst <= 1e-12;
  res.detail = "max completeness residual " + format_sci(worst);
  return res;
}

SuiteResult validate_feedback() {
  SuiteResult res;
  res.name = "feedback";
  double worst_unitarity = 0.0;
  double worst_restore = 0.0;
  const RngStream root(7102);
  for (int dim = 2; dim <= 9; ++dim) {
    const RngStream stream = root.child(dim);
    const std::vector<double> p = random_probabilities(stream, 0, dim);
    const KrausFamily family = kraus_nlevel(p);
    for (int rep = 0; rep < 1000; ++rep) {
      const std::uint64_t base = 64 + 4 * static_cast<std::uint64_t>(rep) * dim;
      const Vector psi = random_state(stream, base, dim);
      const int outcome =
          static_cast<int>(stream.uniform(base + 2 * dim + 1) * dim) % dim;
      const MeasurementOutcome branch = deterministic_branch(family, psi, outcome);
      const FeedbackUnitary u = build_feedback(psi, branch.post_state, rep, outcome);
      worst_unitarity = std::max(worst_unitarity, unitarity_residual(u.matrix));
      worst_restore = std::max(
          worst_restore, std::abs(verify_restore(u, psi, branch.post_state) - 1.0));
    }
  }
  res.passed = worst_unitarity <= 1e-10 && worst_restore <= 1e-10;
  res.detail = "max unitarity residual " + format_sci(worst_unitarity) +
               ", max |restore - 1| " + format_sci(worst_restore);
  return res;
}

namespace {

// Probability pair of the induced measurement on a fixed probe state.
std::pair<double, double> dilation_probabilities(const RamseyDilation& d,
                                                 const Vector& psi) {
  return {(d.m_plus * psi).squaredNorm(), (d.m_minus * psi).squaredNorm()};
}

void check_dilation_params(const DilationParams& p, double& worst_equiv,
                           double& worst_complete, double& worst_prob_shift) {
  const RamseyDilation base = ramsey_dilation(p);
  worst_equiv = std::max(worst_equiv, base.equivalence_residual);
  worst_complete = std::max(worst_complete, base.completeness_residual);

  DilationParams shifted = p;
  shifted.omega_eps += 0.37 * (p.omega_L != 0.0 ? p.omega_L : 1.0);
  const RamseyDilation offset = ramsey_dilation(shifted);
  const RngStream stream(7103);
  for (int rep = 0; rep < 32; ++rep) {
    const Vector psi = random_state(stream, 8 * static_cast<std::uint64_t>(rep), 2);
    const auto a = dilation_probabilities(base, psi);
    const auto b = dilation_probabilities(offset, psi);
    worst_prob_shift = std::max(worst_prob_shift,
                                std::max(std::abs(a.first - b.first),
                                         std::abs(a.second - b.second)));
  }
}

}  // namespace

SuiteResult validate_dilation(const DilationParams* extra) {
  SuiteResult res;
  res.name = "dilation";
  double worst_equiv = 0.0, worst_complete = 0.0, worst_prob_shift = 0.0;
  try {
    for (double theta : {0.05, 0.32175, 0.7})
      check_dilation_params(DilationParams::for_theta(theta, 1.0), worst_equiv,
                            worst_complete, worst_prob_shift);
    if (extra)
      check_dilation_params(*extra, worst_equiv, worst_complete,
                            worst_prob_shift);
  } catch (const std::exception& e) {
    res.passed = false;
    res.detail = e.what();
    return res;
  }
  res.passed = worst_equiv <= 1e-10 && worst_complete <= 1e-12 &&
               worst_prob_shift <= 1e-12;
  res.detail = "max equivalence residual " + format_sci(worst_equiv) +
               ", max completeness residual " + format_sci(worst_complete) +
               ", max probability shift under Larmor offset " +
               format_sci(worst_prob_shift);
  return res;
}

SuiteResult validate_effective(const RydbergParams* params) {
  SuiteResult res;
  res.name = "effective-model";
  RydbergParams p;
  if (params) {
    p = *params;
  } else {
    // 2 pi x {15, 15, 740, 15} MHz in rad/ns.
    const double unit = 2.0 * M_PI;
    p.omega1 = unit * 0.015;
    p.omega2 = unit * 0.015;
    p.delta = unit * 0.74;
    p.V = unit * 0.015;
  }
  const EffectiveModelReport rep = validate_effective_model(p, 0.0);
  res.passed = rep.passed;
  std::ostringstream out;
  out.precision(6);
  out << "peak at t=" << rep.t_peak_observed << " vs expected "
      << rep.t_peak_expected << " (rel err " << format_sci(rep.peak_relative_error)
      << "), max rr population " << format_sci(rep.max_rr_population)
      << ", max e population " << format_sci(rep.max_e_population);
  if (!rep.regime_ok) out << "; regime warning: " << rep.regime_note;
  res.detail = out.str();
  return res;
}

std::vector<SuiteResult> validate_all(const DilationParams* dilation_extra,
                                      const RydbergParams* rydberg_params) {
  return {validate_povm(), validate_feedback(),
          validate_dilation(dilation_extra), validate_effective(rydberg_params)};
}

}  // namespace qfb
