#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qfb/dynamics.hpp"
#include "qfb/linalg.hpp"
#include "qfb/rng.hpp"
#include "qfb/systems.hpp"
#include "qfb/types.hpp"

using namespace qfb;

namespace {

HamiltonianSpec gaussian_spec(double mu, double sigma, double resample_dt) {
  HamiltonianSpec spec;
  spec.h0 = 0.5 * pauli_z();
  spec.noise_generators = {0.5 * pauli_x(), 0.5 * pauli_z()};
  spec.noise.kind = NoiseKind::gaussian_stochastic;
  spec.noise.mu = mu;
  spec.noise.sigma = sigma;
  spec.noise.resample_dt = resample_dt;
  spec.validate();
  return spec;
}

}  // namespace

TEST_CASE("noise-free propagation matches the closed form") {
  HamiltonianSpec spec;
  spec.h0 = 0.5 * pauli_z();
  spec.validate();
  Vector psi0(2);
  psi0 << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  for (const double t : {0.0, 0.3, 1.7, 12.0}) {
    const Vector psi = propagate_exact(spec, psi0, t);
    Vector expect(2);
    expect << std::exp(cx(0.0, -0.5 * t)) / std::sqrt(2.0),
        std::exp(cx(0.0, 0.5 * t)) / std::sqrt(2.0);
    CHECK((psi - expect).norm() <= 1e-13);
  }
}

TEST_CASE("static offsets dress the generator into one exponential") {
  HamiltonianSpec spec;
  spec.h0 = 0.5 * pauli_z();
  spec.noise_generators = {0.5 * pauli_x()};
  spec.noise.kind = NoiseKind::static_offsets;
  spec.noise.static_amplitudes = {0.3};
  spec.validate();
  const Matrix expect = expm(Matrix(spec.h0 + 0.3 * 0.5 * pauli_x()), 1.4);
  const RngStream unused(0);
  // Independent of the step size: the dressed Hamiltonian is constant.
  CHECK((noisy_propagator(spec, 0.0, 1.4, unused, 1e-3) - expect).norm() <= 1e-13);
  CHECK((noisy_propagator(spec, 0.0, 1.4, unused, 10.0) - expect).norm() <= 1e-13);
}

TEST_CASE("stochastic propagation is deterministic in the stream") {
  const HamiltonianSpec spec = gaussian_spec(0.1, 0.2, 0.7);
  const RngStream s = RngStream(5).child(1);
  const Matrix a = noisy_propagator(spec, 0.0, 2.0, s, 0.05);
  const Matrix b = noisy_propagator(spec, 0.0, 2.0, s, 0.05);
  CHECK((a - b).norm() == 0.0);
  // A different stream draws different amplitudes.
  CHECK((noisy_propagator(spec, 0.0, 2.0, RngStream(5).child(2), 0.05) - a).norm() >
        1e-6);
  CHECK(unitarity_residual(a) <= 1e-12);
}

TEST_CASE("stochastic propagation composes across arbitrary split points") {
  const HamiltonianSpec spec = gaussian_spec(0.05, 0.3, 0.7);
  const RngStream s = RngStream(6).child(1);
  const Matrix whole = noisy_propagator(spec, 0.0, 2.0, s, 0.05);
  // 1.3 sits strictly inside the second resample interval [0.7, 1.4).
  const Matrix parts = noisy_propagator(spec, 1.3, 2.0, s, 0.05) *
                       noisy_propagator(spec, 0.0, 1.3, s, 0.05);
  CHECK((whole - parts).norm() <= 1e-11);
}

TEST_CASE("stochastic amplitudes are tied to the absolute time grid") {
  const HamiltonianSpec spec = gaussian_spec(0.0, 1.0, 1.0);
  const RngStream s = RngStream(7).child(1);
  // Same interval, same draws, regardless of how the call got there.
  const Matrix a = noisy_propagator(spec, 3.0, 4.0, s, 0.1);
  const Matrix b = noisy_propagator(spec, 3.0, 4.0, s, 0.1);
  CHECK((a - b).norm() == 0.0);
  // Different absolute interval of equal length sees different draws.
  CHECK((noisy_propagator(spec, 4.0, 5.0, s, 0.1) - a).norm() > 1e-6);
}

TEST_CASE("steps coarser than the resample grid are rejected") {
  const HamiltonianSpec spec = gaussian_spec(0.0, 0.1, 0.5);
  const RngStream s(8);
  CHECK_THROWS_AS(noisy_propagator(spec, 0.0, 1.0, s, 0.6), std::invalid_argument);
}

TEST_CASE("midpoint rule converges at second order") {
  const auto h = [](double t) {
    return Matrix(std::sin(t) * pauli_x() + std::cos(2.0 * t) * pauli_z());
  };
  Vector psi0(2);
  psi0 << 1.0, 0.0;
  const Vector ref = propagate_midpoint(h, psi0, 0.0, 1.0, 1e-5);
  const double err1 = (propagate_midpoint(h, psi0, 0.0, 1.0, 2e-3) - ref).norm();
  const double err2 = (propagate_midpoint(h, psi0, 0.0, 1.0, 1e-3) - ref).norm();
  CHECK(err1 / err2 == doctest::Approx(4.0).epsilon(0.15));
  CHECK(err2 <= 1e-5);
  CHECK(is_normalized(propagate_midpoint(h, psi0, 0.0, 1.0, 0.01)));
}
