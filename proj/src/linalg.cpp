#include "qfb/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qfb {

double hermiticity_residual(const Matrix& A) {
  return (A - A.adjoint()).norm();
}

double unitarity_residual(const Matrix& U) {
  return (U.adjoint() * U - Matrix::Identity(U.rows(), U.cols())).norm();
}

bool is_hermitian(const Matrix& A, double tol) {
  return A.rows() == A.cols() && hermiticity_residual(A) <= tol;
}

bool is_unitary(const Matrix& U, double tol) {
  return U.rows() == U.cols() && unitarity_residual(U) <= tol;
}

bool is_normalized(const Vector& psi, double tol) {
  return std::abs(psi.norm() - 1.0) <= tol;
}

Matrix expm(const Matrix& H, double t) {
  const double res = hermiticity_residual(H);
  if (H.rows() != H.cols() || res > tol_hermitian) {
    std::ostringstream msg;
    msg << "expm: input not Hermitian (residual " << res << ")";
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  const Eigen::VectorXd& w = es.eigenvalues();
  Vector phases(w.size());
  for (Eigen::Index j = 0; j < w.size(); ++j) {
    phases[j] = std::polar(1.0, -w[j] * t);
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix logm_unitary(const Matrix& U, bool* at_branch_cut) {
  const double res = unitarity_residual(U);
  if (U.rows() != U.cols() || res > tol_unitary) {
    std::ostringstream msg;
    msg << "logm_unitary: input not unitary (residual " << res << ")";
    throw std::invalid_argument(msg.str());
  }
  // Schur form of a normal matrix is diagonal (up to roundoff) with a truly
  // unitary similarity, so degenerate eigenvalues cannot spoil Hermiticity of
  // the recovered generator.
  Eigen::ComplexSchur<Matrix> schur(U);
  const Matrix& T = schur.matrixT();
  const Matrix& Q = schur.matrixU();
  if (at_branch_cut != nullptr) *at_branch_cut = false;
  Vector gen(U.rows());
  for (Eigen::Index j = 0; j < U.rows(); ++j) {
    const cx lambda = T(j, j);
    double h = -std::arg(lambda);  // in [-pi, pi)
    if (h <= -3.141592653589793238462643383279502884 + 1e-15) {
      h += 2.0 * 3.141592653589793238462643383279502884;
    }
    if (at_branch_cut != nullptr &&
        std::abs(std::abs(std::arg(lambda)) -
                 3.141592653589793238462643383279502884) < 1e-12) {
      *at_branch_cut = true;
    }
    gen[j] = h;
  }
  Matrix H = Q * gen.asDiagonal() * Q.adjoint();
  // Symmetrize away the Schur roundoff.
  return 0.5 * (H + H.adjoint().eval());
}

std::vector<Vector> gram_schmidt_anchored(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  if (!is_normalized(vectors.front())) {
    throw std::invalid_argument(
        "gram_schmidt_anchored: first vector must be normalized");
  }
  std::vector<Vector> out;
  out.reserve(vectors.size());
  out.push_back(vectors.front());
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    Vector v = vectors[i];
    // Two orthogonalization passes block roundoff reintroduced by the first.
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& u : out) {
        v -= u.dot(v) * u;
      }
    }
    const double n = v.norm();
    if (n < 1e-10) {
      std::ostringstream msg;
      msg << "gram_schmidt_anchored: vector " << i
          << " is linearly dependent on its predecessors (residual norm " << n
          << ")";
      throw std::invalid_argument(msg.str());
    }
    out.push_back(v / n);
  }
  return out;
}

double fidelity(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  return std::norm(a.dot(b));
}

}  // namespace qfb
