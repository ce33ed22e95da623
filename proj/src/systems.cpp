#include "qfb/systems.hpp"

#include <cmath>
#include <stdexcept>

#include "qfb/linalg.hpp"

namespace qfb {

Matrix pauli_x() {
  Matrix m(2, 2);
  m << cx(0, 0), cx(1, 0), cx(1, 0), cx(0, 0);
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << cx(0, 0), cx(0, -1), cx(0, 1), cx(0, 0);
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << cx(1, 0), cx(0, 0), cx(0, 0), cx(-1, 0);
  return m;
}

Matrix field_hamiltonian(double omega, double theta, double phi) {
  const double rx = std::cos(theta) * std::cos(phi);
  const double ry = std::cos(theta) * std::sin(phi);
  const double rz = std::sin(theta);
  return 0.5 * omega * (rx * pauli_x() + ry * pauli_y() + rz * pauli_z());
}

HamiltonianSpec spin_hamiltonians(const SpinFieldParams& p) {
  HamiltonianSpec spec;
  spec.h0 = field_hamiltonian(p.omega_L, p.theta, p.phi);
  const Matrix h_full =
      field_hamiltonian(p.omega_L + p.omega_eps, p.theta_p, p.phi_p);
  spec.noise_generators.push_back(h_full - spec.h0);
  spec.noise.kind = NoiseKind::static_offsets;
  spec.noise.static_amplitudes = {1.0};
  spec.validate();
  return spec;
}

HamiltonianSpec driven_qubit_hamiltonians(const DrivenQubitParams& p) {
  HamiltonianSpec spec;
  spec.h0 = 0.5 * p.omega0 * pauli_x() + 0.5 * p.beta0 * pauli_z();
  spec.noise_generators.push_back(0.5 * pauli_x());
  spec.noise_generators.push_back(0.5 * pauli_z());
  spec.noise.kind = NoiseKind::static_offsets;
  spec.noise.static_amplitudes = {p.d_eps, p.d_beta};
  spec.validate();
  return spec;
}

namespace {

// Pair index in the ordering {gg, ge, eg, ee, gr, er, rg, re, rr} from
// single-atom indices g = 0, e = 1, r = 2.
constexpr int kPairIndex[3][3] = {{ryd::gg, ryd::ge, ryd::gr},
                                  {ryd::eg, ryd::ee, ryd::er},
                                  {ryd::rg, ryd::re, ryd::rr}};

Matrix lift_atom1(const Matrix& op3) {
  Matrix m = Matrix::Zero(9, 9);
  for (int a2 = 0; a2 < 3; ++a2)
    for (int to = 0; to < 3; ++to)
      for (int from = 0; from < 3; ++from)
        m(kPairIndex[to][a2], kPairIndex[from][a2]) += op3(to, from);
  return m;
}

Matrix lift_atom2(const Matrix& op3) {
  Matrix m = Matrix::Zero(9, 9);
  for (int a1 = 0; a1 < 3; ++a1)
    for (int to = 0; to < 3; ++to)
      for (int from = 0; from < 3; ++from)
        m(kPairIndex[a1][to], kPairIndex[a1][from]) += op3(to, from);
  return m;
}

Matrix lift_both(const Matrix& op3) { return lift_atom1(op3) + lift_atom2(op3); }

}  // namespace

HamiltonianSpec rydberg_hamiltonian(const RydbergParams& p) {
  Matrix couple = Matrix::Zero(3, 3);
  couple(1, 0) = p.omega1;  // |e><g|
  couple(2, 1) = p.omega2;  // |r><e|
  Matrix proj_e = Matrix::Zero(3, 3);
  proj_e(1, 1) = 1.0;

  HamiltonianSpec spec;
  const Matrix lifted = lift_both(couple);
  spec.h0 = lifted + lifted.adjoint() + p.delta * lift_both(proj_e);
  spec.h0(ryd::rr, ryd::rr) += p.V;

  Matrix x_ge = Matrix::Zero(3, 3);
  x_ge(1, 0) = x_ge(0, 1) = 1.0;
  Matrix x_er = Matrix::Zero(3, 3);
  x_er(2, 1) = x_er(1, 2) = 1.0;
  spec.noise_generators.push_back(lift_both(x_ge));
  spec.noise_generators.push_back(lift_both(x_er));
  spec.validate();
  return spec;
}

Vector rydberg_ket(int index) {
  Vector v = Vector::Zero(9);
  v(index) = 1.0;
  return v;
}

Vector rydberg_triplet() {
  Vector v = Vector::Zero(9);
  v(ryd::gr) = v(ryd::rg) = 1.0 / std::sqrt(2.0);
  return v;
}

EffectiveModelReport validate_effective_model(const RydbergParams& p,
                                              double t_max) {
  EffectiveModelReport rep;
  rep.omega_eff = p.omega_eff();
  if (!(rep.omega_eff > 0.0))
    throw std::invalid_argument("validate_effective_model: omega_eff must be positive");
  rep.t_peak_expected = M_PI / (2.0 * std::sqrt(2.0) * rep.omega_eff);
  if (t_max <= 0.0) t_max = 2.2 * rep.t_peak_expected;

  if (!(p.V > std::sqrt(2.0) * rep.omega_eff)) {
    rep.regime_ok = false;
    rep.regime_note += "interaction V does not dominate the effective coupling; ";
  }
  if (!(p.delta > 10.0 * std::max(p.omega1, p.omega2))) {
    rep.regime_ok = false;
    rep.regime_note += "detuning not large against the Rabi frequencies; ";
  }

  const HamiltonianSpec spec = rydberg_hamiltonian(p);
  Eigen::SelfAdjointEigenSolver<Matrix> es(spec.h0);
  const Eigen::VectorXd w = es.eigenvalues();
  const Matrix& vecs = es.eigenvectors();
  const Vector coef = vecs.adjoint() * rydberg_ket(ryd::gg);
  const Vector triplet = rydberg_triplet();

  const int n_samples = 4000;
  const double dt = t_max / n_samples;
  int peak_idx = 0;
  std::vector<double> p_T(n_samples + 1, 0.0);
  for (int s = 0; s <= n_samples; ++s) {
    const double t = s * dt;
    Vector phase(w.size());
    for (int i = 0; i < w.size(); ++i)
      phase(i) = std::exp(cx(0.0, -w(i) * t)) * coef(i);
    const Vector psi = vecs * phase;
    p_T[s] = std::norm(triplet.dot(psi));
    rep.max_rr_population = std::max(rep.max_rr_population, std::norm(psi(ryd::rr)));
    const double pe = std::norm(psi(ryd::ge)) + std::norm(psi(ryd::eg)) +
                      std::norm(psi(ryd::ee)) + std::norm(psi(ryd::er)) +
                      std::norm(psi(ryd::re));
    rep.max_e_population = std::max(rep.max_e_population, pe);
    if (p_T[s] > p_T[peak_idx]) peak_idx = s;
  }
  rep.peak_triplet_population = p_T[peak_idx];
  double t_peak = peak_idx * dt;
  if (peak_idx > 0 && peak_idx < n_samples) {
    // Parabolic refinement of the sampled maximum.
    const double y0 = p_T[peak_idx - 1], y1 = p_T[peak_idx], y2 = p_T[peak_idx + 1];
    const double denom = y0 - 2.0 * y1 + y2;
    if (denom < -1e-300) t_peak += 0.5 * dt * (y0 - y2) / denom;
  }
  rep.t_peak_observed = t_peak;
  rep.peak_relative_error =
      std::abs(t_peak - rep.t_peak_expected) / rep.t_peak_expected;
  rep.passed = rep.peak_relative_error <= 0.05 && rep.max_rr_population <= 0.05;
  return rep;
}

namespace {

Matrix kron2(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      m.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return m;
}

}  // namespace

DilationParams DilationParams::for_theta(double theta, double omega_L) {
  DilationParams p;
  p.g = 1.0;
  p.omega_L = omega_L;
  p.t_int = 4.0 * theta;
  return p;
}

RamseyDilation ramsey_dilation(const DilationParams& p) {
  const double theta = p.theta();
  if (theta < 0.0 || theta >= M_PI / 4.0)
    throw std::invalid_argument(
        "ramsey_dilation: strength angle must lie in [0, pi/4)");
  if (std::abs(std::norm(p.a0) + std::norm(p.b0) - 1.0) > 1e-12)
    throw std::invalid_argument(
        "ramsey_dilation: initial nuclear amplitudes must be normalized");

  const double t = p.t_int;
  const Matrix id2 = Matrix::Identity(2, 2);
  // Electron pi/2 pulses e^{-i S_h pi/2} with S_h = sigma_h / 2.
  const Matrix rx = expm(0.5 * pauli_x(), M_PI / 2.0);
  const Matrix ry = expm(0.5 * pauli_y(), M_PI / 2.0);
  // Nuclear precession conditioned on the electron state; the nucleus sees
  // the actual (possibly offset) Larmor frequency.
  const double omega_total = p.omega_L + p.omega_eps;
  const auto precession = [&](double sign) {
    Matrix u = Matrix::Zero(2, 2);
    const double omega = omega_total + sign * 0.5 * p.g;
    u(0, 0) = std::exp(cx(0.0, -0.5 * omega * t));
    u(1, 1) = std::exp(cx(0.0, 0.5 * omega * t));
    return u;
  };
  Matrix conditional = Matrix::Zero(4, 4);
  conditional.block(0, 0, 2, 2) = precession(+1.0);
  conditional.block(2, 2, 2, 2) = precession(-1.0);
  const Matrix u_full = kron2(rx, id2) * conditional * kron2(ry, id2);

  RamseyDilation out;
  // Electron projected to |+> (rows 0-1) or |-> (rows 2-3); electron starts
  // in |+> (columns 0-1).
  out.m_plus = u_full.block(0, 0, 2, 2);
  out.m_minus = u_full.block(2, 0, 2, 2);
  out.completeness_residual =
      (out.m_plus.adjoint() * out.m_plus + out.m_minus.adjoint() * out.m_minus -
       id2)
          .norm();

  const double c = std::cos(theta), s = std::sin(theta);
  out.p0_equiv = 0.5 * (c - s) * (c - s);
  const KrausFamily family = kraus_nlevel({out.p0_equiv, 1.0 - out.p0_equiv});
  const Matrix& q_minus = family.ops[0];  // diag(sqrt(p0), sqrt(1-p0))
  const Matrix& q_plus = family.ops[1];   // diag(sqrt(1-p0), sqrt(p0))

  // Remove the nuclear Larmor phase, then fit one unit phase per outcome.
  Matrix larmor_inv = Matrix::Zero(2, 2);
  larmor_inv(0, 0) = std::exp(cx(0.0, 0.5 * omega_total * t));
  larmor_inv(1, 1) = std::exp(cx(0.0, -0.5 * omega_total * t));
  const auto fit = [&](const Matrix& k, const Matrix& q, cx& phase) {
    const Matrix a = larmor_inv * k;
    const cx tr = (q.adjoint() * a).trace();
    phase = (std::abs(tr) > 0.0) ? tr / std::abs(tr) : cx(1.0, 0.0);
    return (a - phase * q).norm();
  };
  const double r_plus = fit(out.m_plus, q_plus, out.phase_plus);
  const double r_minus = fit(out.m_minus, q_minus, out.phase_minus);
  out.equivalence_residual = std::max(r_plus, r_minus);
  if (out.equivalence_residual > 1e-10)
    throw std::runtime_error(
        "ramsey_dilation: induced pair deviates from the diagonal qubit family");
  return out;
}

}  // namespace qfb
