#include "qfb/measurement.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qfb/linalg.hpp"

namespace qfb {

double KrausFamily::completeness_residual() const {
  if (ops.empty()) return 0.0;
  Matrix sum = Matrix::Zero(ops.front().rows(), ops.front().cols());
  for (const Matrix& M : ops) {
    sum += M.adjoint() * M;
  }
  return (sum - Matrix::Identity(sum.rows(), sum.cols())).norm();
}

KrausFamily kraus_qubit(double p0) {
  if (!(p0 > 0.0 && p0 < 0.5)) {
    std::ostringstream msg;
    msg << "kraus_qubit: p0 must lie in (0, 0.5), got " << p0;
    throw std::invalid_argument(msg.str());
  }
  return kraus_nlevel({p0, 1.0 - p0});
}

KrausFamily kraus_nlevel(const std::vector<double>& p) {
  const int N = static_cast<int>(p.size());
  if (N < 2) {
    throw std::invalid_argument("kraus_nlevel: need at least 2 outcomes");
  }
  for (double pd : p) {
    if (!(pd > 0.0 && pd < 1.0)) {
      std::ostringstream msg;
      msg << "kraus_nlevel: every weight must lie in (0, 1), got " << pd;
      throw std::invalid_argument(msg.str());
    }
  }
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  if (std::abs(sum - 1.0) > tol_normalization) {
    std::ostringstream msg;
    msg << "kraus_nlevel: weights must sum to 1, got " << sum;
    throw std::invalid_argument(msg.str());
  }
  KrausFamily family;
  family.ops.reserve(N);
  for (int n = 0; n < N; ++n) {
    Matrix M = Matrix::Zero(N, N);
    for (int d = 0; d < N; ++d) {
      M(d, d) = std::sqrt(p[((d - n) % N + N) % N]);
    }
    family.ops.push_back(std::move(M));
  }
  return family;
}

std::vector<double> outcome_probabilities(const KrausFamily& family,
                                          const Vector& psi) {
  if (family.dim() != psi.size()) {
    throw std::invalid_argument("outcome_probabilities: dimension mismatch");
  }
  std::vector<double> P(family.outcomes());
  for (int n = 0; n < family.outcomes(); ++n) {
    P[n] = (family.ops[n] * psi).squaredNorm();
  }
  return P;
}

namespace {

MeasurementOutcome apply_outcome(const KrausFamily& family, const Vector& psi,
                                 int n, double P) {
  if (P < 1e-15) {
    std::ostringstream msg;
    msg << "measurement: outcome " << n << " has probability " << P
        << " (numerically impossible branch)";
    throw std::invalid_argument(msg.str());
  }
  return MeasurementOutcome{n, P, family.ops[n] * psi / std::sqrt(P)};
}

}  // namespace

MeasurementOutcome measure(const KrausFamily& family, const Vector& psi,
                           const RngStream& stream, std::uint64_t counter) {
  if (!is_normalized(psi)) {
    throw std::invalid_argument("measure: state not normalized");
  }
  const std::vector<double> P = outcome_probabilities(family, psi);
  const double u = stream.uniform(counter);
  double cumulative = 0.0;
  int chosen = -1;
  for (int n = 0; n < family.outcomes(); ++n) {
    if (P[n] < 1e-15) continue;  // zero-mass branches are never sampled
    cumulative += P[n];
    chosen = n;
    if (u < cumulative) break;
  }
  if (chosen < 0) {
    throw std::invalid_argument("measure: no outcome has positive probability");
  }
  // Roundoff in the cumulative sum can leave u just past the last edge; the
  // final positive-mass outcome absorbs it.
  return apply_outcome(family, psi, chosen, P[chosen]);
}

MeasurementOutcome deterministic_branch(const KrausFamily& family,
                                        const Vector& psi, int n) {
  if (!is_normalized(psi)) {
    throw std::invalid_argument("deterministic_branch: state not normalized");
  }
  if (n < 0 || n >= family.outcomes()) {
    throw std::invalid_argument("deterministic_branch: outcome out of range");
  }
  return apply_outcome(family, psi, n, (family.ops[n] * psi).squaredNorm());
}

}  // namespace qfb
