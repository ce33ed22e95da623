#pragma once

#include <string>

#include "qfb/dynamics.hpp"
#include "qfb/measurement.hpp"
#include "qfb/types.hpp"

namespace qfb {

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

// (omega/2) r.sigma with r = (cos(theta)cos(phi), cos(theta)sin(phi), sin(theta)).
Matrix field_hamiltonian(double omega, double theta, double phi);

// Spin-1/2 in a tilted magnetic field whose magnitude and direction both
// carry a static error.
struct SpinFieldParams {
  double omega_L = 1.0;   // ideal Larmor frequency
  double theta = 0.0;     // ideal field direction
  double phi = 0.0;
  double omega_eps = 0.0; // frequency error of the actual field
  double theta_p = 0.0;   // actual field direction
  double phi_p = 0.0;
};

// h0 = (omega_L/2) r.sigma; the actual field ((omega_L+omega_eps)/2) r'.sigma
// enters through a single static generator equal to the difference H - h0.
HamiltonianSpec spin_hamiltonians(const SpinFieldParams& p);

// Driven qubit with static offsets on both the drive and the splitting.
struct DrivenQubitParams {
  double omega0 = 1.0; // drive strength
  double beta0 = 1.0;  // energy splitting
  double d_eps = 0.0;  // offset on the drive (sigma_x channel)
  double d_beta = 0.0; // offset on the splitting (sigma_z channel)
};

// h0 = (omega0/2) sigma_x + (beta0/2) sigma_z with static generators
// sigma_x/2 and sigma_z/2 at amplitudes d_eps and d_beta.
HamiltonianSpec driven_qubit_hamiltonians(const DrivenQubitParams& p);

// Two three-level atoms {g, e, r}; pair basis ordered
// {gg, ge, eg, ee, gr, er, rg, re, rr}.
namespace ryd {
enum : int { gg = 0, ge = 1, eg = 2, ee = 3, gr = 4, er = 5, rg = 6, re = 7, rr = 8 };
}

struct RydbergParams {
  double omega1 = 1.0; // g <-> e Rabi frequency
  double omega2 = 1.0; // e <-> r Rabi frequency
  double delta = 10.0; // intermediate-state detuning
  double V = 1.0;      // Rydberg-Rydberg interaction

  double omega_eff() const { return omega1 * omega2 / delta; }
};

// Interaction-picture pair Hamiltonian with laser couplings, detuning term
// and the rr interaction; amplitude-noise generators for both lasers are
// attached (noise kind is left for the caller to configure).
HamiltonianSpec rydberg_hamiltonian(const RydbergParams& p);

// (|gr> + |rg>)/sqrt(2)
Vector rydberg_triplet();
Vector rydberg_ket(int index);

// Checks the two-level reduction |gg> <-> |T|: the full dynamics should peak
// in triplet population near pi/(2 sqrt(2) omega_eff), keep |rr> nearly empty
// (blockade) and barely populate single-atom |e> (adiabatic elimination).
struct EffectiveModelReport {
  double omega_eff = 0.0;
  double t_peak_expected = 0.0;
  double t_peak_observed = 0.0;
  double peak_relative_error = 0.0;
  double peak_triplet_population = 0.0;
  double max_rr_population = 0.0;
  double max_e_population = 0.0;
  bool regime_ok = true;       // V > sqrt(2) omega_eff and delta > 10 max(omega1,omega2)
  std::string regime_note;
  bool passed = false;         // peak error <= 5% and rr leakage <= 0.05
};

// t_max <= 0 selects a window just past the expected first peak.
EffectiveModelReport validate_effective_model(const RydbergParams& p, double t_max);

// Electron-spin Ramsey probe of a nuclear spin: pi/2 pulse, conditional
// Larmor precession, pi/2 pulse, projective electron readout.  Induces an
// unsharp two-outcome measurement on the nucleus.
struct DilationParams {
  double g = 1.0;         // electron-nuclear coupling
  double omega_L = 1.0;   // nuclear Larmor frequency
  double omega_eps = 0.0; // unknown offset on the Larmor frequency
  double t_int = 0.1;     // interaction time of one probe
  cx a0{0.8, 0.0};        // initial nuclear amplitudes, |a0|^2 + |b0|^2 = 1
  cx b0{0.6, 0.0};

  // Effective strength angle of the induced measurement.
  double theta() const { return 0.25 * g * t_int; }
  static DilationParams for_theta(double theta, double omega_L = 1.0);
};

struct RamseyDilation {
  Matrix m_plus;   // induced nuclear operator for electron outcome +
  Matrix m_minus;  // ... for electron outcome -
  double p0_equiv = 0.0;
  // Largest Frobenius deviation from the diagonal qubit pair after removing
  // the Larmor phase and one fitted unit phase per outcome.
  double equivalence_residual = 0.0;
  cx phase_plus{1.0, 0.0};   // fitted unit phases
  cx phase_minus{1.0, 0.0};
  double completeness_residual = 0.0;
};

// Builds the 4-dim composite Ramsey propagator, projects the electron, and
// returns the induced nuclear Kraus pair.  Verifies the pair matches
// kraus_qubit(p0_equiv) with p0_equiv = (cos(theta) - sin(theta))^2 / 2 up to
// the phases above; throws if the deviation exceeds 1e-10.
RamseyDilation ramsey_dilation(const DilationParams& p);

}  // namespace qfb
