#include "qfb/dynamics.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "qfb/linalg.hpp"

namespace qfb {

void HamiltonianSpec::validate() const {
  if (h0.rows() == 0 || h0.rows() != h0.cols())
    throw std::invalid_argument("HamiltonianSpec: h0 must be square and non-empty");
  if (!is_hermitian(h0))
    throw std::invalid_argument("HamiltonianSpec: h0 is not Hermitian");
  for (std::size_t l = 0; l < noise_generators.size(); ++l) {
    const Matrix& g = noise_generators[l];
    if (g.rows() != h0.rows() || g.cols() != h0.cols())
      throw std::invalid_argument("HamiltonianSpec: generator dimension mismatch");
    if (!is_hermitian(g))
      throw std::invalid_argument("HamiltonianSpec: noise generator is not Hermitian");
  }
  switch (noise.kind) {
    case NoiseKind::none:
      break;
    case NoiseKind::static_offsets:
      if (noise.static_amplitudes.size() != noise_generators.size())
        throw std::invalid_argument(
            "HamiltonianSpec: one static amplitude per generator required");
      break;
    case NoiseKind::gaussian_stochastic:
      if (!(noise.resample_dt > 0.0))
        throw std::invalid_argument("HamiltonianSpec: resample_dt must be positive");
      if (noise.sigma < 0.0)
        throw std::invalid_argument("HamiltonianSpec: sigma must be non-negative");
      break;
  }
}

Vector propagate_exact(const HamiltonianSpec& spec, const Vector& psi0,
                       double t) {
  return expm(spec.h0, t) * psi0;
}

namespace {

// Dressed Hamiltonian for one constant noise piece.
Matrix dressed(const HamiltonianSpec& spec, const std::vector<double>& amps) {
  Matrix h = spec.h0;
  for (std::size_t l = 0; l < amps.size(); ++l)
    h += amps[l] * spec.noise_generators[l];
  return h;
}

// Exponential of one constant piece, taken as m aligned substeps of equal
// length so the step structure matches step_dt while costing a single
// eigendecomposition.
Matrix piece_propagator(const Matrix& h, double len, double step_dt) {
  int m = static_cast<int>(std::ceil(len / step_dt));
  if (m < 1) m = 1;
  const Matrix u_sub = expm(h, len / m);
  Matrix acc = Matrix::Identity(h.rows(), h.cols());
  for (int k = 0; k < m; ++k) acc = u_sub * acc;
  return acc;
}

}  // namespace

Matrix noisy_propagator(const HamiltonianSpec& spec, double t0, double t1,
                        const RngStream& noise_stream, double step_dt) {
  const int d = spec.dim();
  if (t1 < t0)
    throw std::invalid_argument("noisy_propagator: t1 must be >= t0");
  if (!(step_dt > 0.0))
    throw std::invalid_argument("noisy_propagator: step_dt must be positive");
  const double span = t1 - t0;
  if (span == 0.0) return Matrix::Identity(d, d);

  switch (spec.noise.kind) {
    case NoiseKind::none:
      return expm(spec.h0, span);
    case NoiseKind::static_offsets: {
      if (spec.noise.static_amplitudes.size() != spec.noise_generators.size())
        throw std::invalid_argument(
            "noisy_propagator: one static amplitude per generator required");
      return expm(dressed(spec, spec.noise.static_amplitudes), span);
    }
    case NoiseKind::gaussian_stochastic:
      break;
  }

  const double dt_r = spec.noise.resample_dt;
  if (!(dt_r > 0.0))
    throw std::invalid_argument("noisy_propagator: resample_dt must be positive");
  if (step_dt > dt_r * (1.0 + 1e-12))
    throw std::invalid_argument(
        "noisy_propagator: step_dt must not exceed resample_dt");

  std::vector<RngStream> channels;
  channels.reserve(spec.noise_generators.size());
  for (std::size_t l = 0; l < spec.noise_generators.size(); ++l)
    channels.push_back(noise_stream.child(l));

  const double t_eps = 1e-12 * std::max({1.0, std::abs(t0), std::abs(t1)});
  std::vector<double> amps(spec.noise_generators.size(), 0.0);
  Matrix acc = Matrix::Identity(d, d);
  double t = t0;
  while (t < t1 - t_eps) {
    // Absolute interval index; the nudge keeps boundary times on the interval
    // they open despite accumulated roundoff.
    const auto j = static_cast<std::int64_t>(std::floor(t / dt_r + 1e-9));
    const double piece_end = std::min(t1, (static_cast<double>(j) + 1.0) * dt_r);
    const double len = piece_end - t;
    if (len < 1e-12 * dt_r) {
      t = piece_end;
      continue;
    }
    for (std::size_t l = 0; l < amps.size(); ++l)
      amps[l] = spec.noise.mu +
                spec.noise.sigma * channels[l].normal(static_cast<std::uint64_t>(j));
    acc = piece_propagator(dressed(spec, amps), len, step_dt) * acc;
    t = piece_end;
  }
  return acc;
}

Vector propagate_noisy(const HamiltonianSpec& spec, const Vector& psi0,
                       double t0, double t1, const RngStream& noise_stream,
                       double step_dt) {
  return noisy_propagator(spec, t0, t1, noise_stream, step_dt) * psi0;
}

Vector propagate_midpoint(const std::function<Matrix(double)>& H,
                          const Vector& psi0, double t0, double t1,
                          double step_dt) {
  if (t1 < t0)
    throw std::invalid_argument("propagate_midpoint: t1 must be >= t0");
  if (!(step_dt > 0.0))
    throw std::invalid_argument("propagate_midpoint: step_dt must be positive");
  const double span = t1 - t0;
  if (span == 0.0) return psi0;
  int m = static_cast<int>(std::ceil(span / step_dt));
  if (m < 1) m = 1;
  const double h = span / m;
  Vector psi = psi0;
  for (int k = 0; k < m; ++k) {
    const double t_mid = t0 + (static_cast<double>(k) + 0.5) * h;
    psi = expm(H(t_mid), h) * psi;
  }
  return psi;
}

}  // namespace qfb
