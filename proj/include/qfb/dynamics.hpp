#pragma once

#include <functional>
#include <vector>

#include "qfb/rng.hpp"
#include "qfb/types.hpp"

namespace qfb {

enum class NoiseKind { none, static_offsets, gaussian_stochastic };

struct NoiseProcess {
  NoiseKind kind = NoiseKind::none;
  // One amplitude per generator (static case).
  std::vector<double> static_amplitudes;
  // Gaussian case, absolute angular-frequency units: each channel l holds a
  // piecewise-constant amplitude ~ Normal(mu, sigma^2) on the absolute grid
  // [j * resample_dt, (j+1) * resample_dt); interval j of channel l draws
  // stream.child(l).normal(j), so overlapping propagation calls agree.
  double mu = 0.0;
  double sigma = 0.0;
  double resample_dt = 0.0;
};

struct HamiltonianSpec {
  Matrix h0;
  std::vector<Matrix> noise_generators;
  NoiseProcess noise;

  int dim() const { return static_cast<int>(h0.rows()); }
  // Checks Hermiticity of h0 and every generator, and noise-field sanity.
  void validate() const;
};

// exp(-i H0 t) |psi0>; the noise process contributes nothing.
Vector propagate_exact(const HamiltonianSpec& spec, const Vector& psi0,
                       double t);

// Propagator of the noisy Hamiltonian from t0 to t1: a time-ordered product
// of exponential steps of length <= step_dt, with steps aligned to the noise
// resample grid so each step sees one constant Hamiltonian (making the
// product exact per constant piece).  The static case reduces to a single
// exponential, independent of step_dt.
Matrix noisy_propagator(const HamiltonianSpec& spec, double t0, double t1,
                        const RngStream& noise_stream, double step_dt);

Vector propagate_noisy(const HamiltonianSpec& spec, const Vector& psi0,
                       double t0, double t1, const RngStream& noise_stream,
                       double step_dt);

// Generic midpoint-rule time-ordered propagator for an explicitly
// time-dependent Hermitian H(t): each step exponentiates H evaluated at the
// step midpoint (2nd-order accurate, unconditionally unitary).
Vector propagate_midpoint(const std::function<Matrix(double)>& H,
                          const Vector& psi0, double t0, double t1,
                          double step_dt);

}  // namespace qfb
