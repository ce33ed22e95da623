#include <cmath>
#include <vector>

#include "doctest.h"
#include "qfb/dynamics.hpp"
#include "qfb/linalg.hpp"
#include "qfb/rng.hpp"
#include "qfb/systems.hpp"
#include "qfb/types.hpp"

using namespace qfb;

TEST_CASE("pauli matrices satisfy the algebra") {
  CHECK((pauli_x() * pauli_y() - cx(0.0, 1.0) * pauli_z()).norm() <= 1e-15);
  CHECK((pauli_z() * pauli_z() - Matrix::Identity(2, 2)).norm() <= 1e-15);
  CHECK(std::abs(pauli_x().trace()) <= 1e-15);
}

TEST_CASE("field direction angles pick out the expected axes") {
  CHECK((field_hamiltonian(2.0, 0.0, 0.0) - pauli_x()).norm() <= 1e-15);
  CHECK((field_hamiltonian(2.0, 0.0, M_PI / 2.0) - pauli_y()).norm() <= 1e-14);
  CHECK((field_hamiltonian(2.0, M_PI / 2.0, 0.3) - pauli_z()).norm() <= 1e-14);
}

TEST_CASE("spin in a transverse field precesses at the field frequency") {
  SpinFieldParams p;
  p.omega_L = 1.3;
  p.theta = 0.0;  // field along x
  p.phi = 0.0;
  const HamiltonianSpec spec = spin_hamiltonians(p);
  Vector up(2);
  up << 1.0, 0.0;
  for (double t = 0.0; t <= 10.0; t += 0.37) {
    const Vector psi = propagate_exact(spec, up, t);
    const double sz = (psi.adjoint() * pauli_z() * psi)(0, 0).real();
    CHECK(sz == doctest::Approx(std::cos(p.omega_L * t)).epsilon(1e-8));
  }
}

TEST_CASE("spin error enters through a single static difference generator") {
  SpinFieldParams p;
  p.omega_L = 1.0;
  p.theta = M_PI / 3.0;
  p.phi = M_PI / 4.0;
  p.omega_eps = 0.05;
  p.theta_p = p.theta * 0.98;
  p.phi_p = p.phi * 0.98;
  const HamiltonianSpec spec = spin_hamiltonians(p);
  CHECK((spec.h0 - field_hamiltonian(1.0, p.theta, p.phi)).norm() <= 1e-15);
  REQUIRE(spec.noise_generators.size() == 1);
  REQUIRE(spec.noise.static_amplitudes == std::vector<double>{1.0});
  const Matrix actual =
      field_hamiltonian(1.05, p.theta_p, p.phi_p);
  CHECK((spec.h0 + spec.noise_generators[0] - actual).norm() <= 1e-14);
}

TEST_CASE("driven qubit splits drive and splitting offsets into channels") {
  DrivenQubitParams p;
  p.omega0 = 1.0;
  p.beta0 = 1.0;
  p.d_eps = 0.07;
  p.d_beta = 0.02;
  const HamiltonianSpec spec = driven_qubit_hamiltonians(p);
  CHECK((spec.h0 - Matrix(0.5 * pauli_x() + 0.5 * pauli_z())).norm() <= 1e-15);
  REQUIRE(spec.noise_generators.size() == 2);
  CHECK((spec.noise_generators[0] - Matrix(0.5 * pauli_x())).norm() <= 1e-15);
  CHECK((spec.noise_generators[1] - Matrix(0.5 * pauli_z())).norm() <= 1e-15);
  CHECK(spec.noise.static_amplitudes == std::vector<double>({0.07, 0.02}));
}

TEST_CASE("atom-pair Hamiltonian has the ladder structure") {
  RydbergParams p;
  p.omega1 = 0.4;
  p.omega2 = 0.6;
  p.delta = 5.0;
  p.V = 2.0;
  const HamiltonianSpec spec = rydberg_hamiltonian(p);
  REQUIRE(spec.dim() == 9);
  CHECK(hermiticity_residual(spec.h0) <= 1e-15);
  // Laser 1 couples g<->e on either atom, laser 2 couples e<->r.
  CHECK(spec.h0(ryd::eg, ryd::gg).real() == doctest::Approx(0.4));
  CHECK(spec.h0(ryd::ge, ryd::gg).real() == doctest::Approx(0.4));
  CHECK(spec.h0(ryd::rg, ryd::eg).real() == doctest::Approx(0.6));
  CHECK(spec.h0(ryd::er, ryd::ee).real() == doctest::Approx(0.6));
  // Detuning counts intermediate-state occupation; interaction sits on rr.
  CHECK(spec.h0(ryd::ge, ryd::ge).real() == doctest::Approx(5.0));
  CHECK(spec.h0(ryd::ee, ryd::ee).real() == doctest::Approx(10.0));
  CHECK(spec.h0(ryd::rr, ryd::rr).real() == doctest::Approx(2.0));
  CHECK(spec.h0(ryd::gg, ryd::gg).real() == doctest::Approx(0.0));
  // No direct g<->r coupling.
  CHECK(std::abs(spec.h0(ryd::rg, ryd::gg)) <= 1e-15);
  REQUIRE(spec.noise_generators.size() == 2);
}

TEST_CASE("pair basis states and the entangled target are well formed") {
  const Vector t = rydberg_triplet();
  CHECK(is_normalized(t));
  CHECK(std::abs(t(ryd::gr) - cx(1.0 / std::sqrt(2.0))) <= 1e-15);
  CHECK(std::abs(t(ryd::rg) - cx(1.0 / std::sqrt(2.0))) <= 1e-15);
  const Vector gg = rydberg_ket(ryd::gg);
  CHECK(std::abs(gg(0) - cx(1.0)) <= 1e-15);
  CHECK(std::abs(t.dot(gg)) <= 1e-15);
}

TEST_CASE("two-level reduction holds in the blockade regime") {
  RydbergParams p;
  const double two_pi = 2.0 * M_PI;
  p.omega1 = two_pi * 0.015;
  p.omega2 = two_pi * 0.015;
  p.delta = two_pi * 0.74;
  p.V = two_pi * 0.015;
  CHECK(p.omega_eff() == doctest::Approx(two_pi * 0.015 * 0.015 / 0.74).epsilon(1e-14));
  const EffectiveModelReport report = validate_effective_model(p, 0.0);
  CHECK(report.t_peak_expected ==
        doctest::Approx(M_PI / (2.0 * std::sqrt(2.0) * p.omega_eff())).epsilon(1e-12));
  CHECK(report.peak_relative_error <= 0.05);
  CHECK(report.max_rr_population <= 0.05);
  CHECK(report.max_e_population <= 0.05);
  CHECK(report.regime_ok);
  CHECK(report.passed);
}

TEST_CASE("two-level reduction detects a broken blockade") {
  RydbergParams p;
  const double two_pi = 2.0 * M_PI;
  p.omega1 = p.omega2 = two_pi * 0.015;
  p.delta = two_pi * 0.74;
  p.V = two_pi * 1e-5;  // interaction far too weak to block double excitation
  const EffectiveModelReport report = validate_effective_model(p, 0.0);
  CHECK(report.max_rr_population > 0.5);
  CHECK(!report.passed);
}

TEST_CASE("probe strength angle maps to the equivalent two-outcome family") {
  const DilationParams p = DilationParams::for_theta(0.32175);
  CHECK(p.theta() == doctest::Approx(0.32175).epsilon(1e-14));
  const RamseyDilation d = ramsey_dilation(p);
  CHECK(d.p0_equiv == doctest::Approx(0.2).epsilon(1e-4));
  CHECK(d.equivalence_residual <= 1e-10);
  CHECK(d.completeness_residual <= 1e-12);
}

TEST_CASE("induced probe operators stay complete across strengths") {
  for (const double theta : {0.01, 0.1, 0.32175, 0.5, 0.7, 0.78}) {
    const RamseyDilation d = ramsey_dilation(DilationParams::for_theta(theta));
    const Matrix sum =
        d.m_plus.adjoint() * d.m_plus + d.m_minus.adjoint() * d.m_minus;
    CHECK((sum - Matrix::Identity(2, 2)).norm() <= 1e-12);
    CHECK(d.p0_equiv ==
          doctest::Approx(0.5 * std::pow(std::cos(theta) - std::sin(theta), 2))
              .epsilon(1e-12));
  }
}

TEST_CASE("probe outcome statistics ignore an unknown frequency offset") {
  DilationParams p = DilationParams::for_theta(0.3);
  const RamseyDilation base = ramsey_dilation(p);
  p.omega_eps = 0.37;
  const RamseyDilation shifted = ramsey_dilation(p);
  const RngStream s(26);
  for (int trial = 0; trial < 16; ++trial) {
    Vector psi(2);
    const RngStream t = s.child(trial);
    psi << cx(t.normal(0), t.normal(1)), cx(t.normal(2), t.normal(3));
    psi.normalize();
    CHECK(std::abs((base.m_plus * psi).squaredNorm() -
                   (shifted.m_plus * psi).squaredNorm()) <= 1e-12);
    CHECK(std::abs((base.m_minus * psi).squaredNorm() -
                   (shifted.m_minus * psi).squaredNorm()) <= 1e-12);
  }
}
