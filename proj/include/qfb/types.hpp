#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qfb {

using cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Repo-wide tolerances: double precision at dimension <= 16 leaves ample margin.
inline constexpr double tol_hermitian = 1e-12;
inline constexpr double tol_normalization = 1e-12;
inline constexpr double tol_unitary = 1e-10;
inline constexpr double tol_roundtrip = 1e-9;

}  // namespace qfb
