#include "qfb/feedback.hpp"

#include <cmath>
#include <stdexcept>

#include "qfb/linalg.hpp"

namespace qfb {

EigenbasisSet build_basis(const Vector& psi) {
  if (!is_normalized(psi)) {
    throw std::invalid_argument("build_basis: state not normalized");
  }
  const Eigen::Index N = psi.size();
  Eigen::Index pivot = 0;
  if (std::abs(psi[0]) < 1e-8) {
    psi.cwiseAbs().maxCoeff(&pivot);
  }
  EigenbasisSet basis;
  basis.anchor = psi;
  basis.raw.reserve(N);
  basis.raw.push_back(psi);
  for (Eigen::Index j = 0; j < N; ++j) {
    if (j == pivot) continue;
    Vector v = Vector::Zero(N);
    v[pivot] = -std::conj(psi[j]);
    v[j] = std::conj(psi[pivot]);
    basis.raw.push_back(std::move(v));
  }
  basis.orthonormal = gram_schmidt_anchored(basis.raw);
  return basis;
}

FeedbackUnitary build_feedback(const Vector& psi_exact,
                               const Vector& psi_exact_post, int step,
                               int outcome) {
  if (psi_exact.size() != psi_exact_post.size()) {
    throw std::invalid_argument("build_feedback: dimension mismatch");
  }
  const EigenbasisSet to = build_basis(psi_exact);
  const EigenbasisSet from = build_basis(psi_exact_post);
  const Eigen::Index N = psi_exact.size();
  Matrix U = Matrix::Zero(N, N);
  for (Eigen::Index m = 0; m < N; ++m) {
    U += to.orthonormal[m] * from.orthonormal[m].adjoint();
  }
  return FeedbackUnitary{std::move(U), step, outcome};
}

Matrix compose_effective_kraus(const FeedbackUnitary& U, const Matrix& M) {
  if (U.matrix.cols() != M.rows()) {
    throw std::invalid_argument("compose_effective_kraus: dimension mismatch");
  }
  return U.matrix * M;
}

FeedbackHamiltonian extract_feedback_hamiltonian(const FeedbackUnitary& U,
                                                 double t_F) {
  if (!(t_F > 0.0)) {
    throw std::invalid_argument("extract_feedback_hamiltonian: t_F must be > 0");
  }
  FeedbackHamiltonian out;
  out.t_F = t_F;
  out.matrix = logm_unitary(U.matrix) / t_F;
  if (out.matrix.rows() == 2) {
    const cx trace_half = 0.5 * (out.matrix(0, 0) + out.matrix(1, 1));
    out.Bz = std::real(out.matrix(0, 0) - trace_half);
    out.Bx = std::real(out.matrix(0, 1));
    out.By = std::imag(out.matrix(0, 1));
  } else {
    out.Bx = out.By = out.Bz = std::nan("");
  }
  return out;
}

double verify_restore(const FeedbackUnitary& U, const Vector& psi_exact,
                      const Vector& psi_exact_post) {
  return std::abs(psi_exact.dot(U.matrix * psi_exact_post));
}

}  // namespace qfb
