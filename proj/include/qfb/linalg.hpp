#pragma once

#include <vector>

#include "qfb/types.hpp"

namespace qfb {

// Frobenius-norm deviation from Hermiticity / unitarity / unit norm.
double hermiticity_residual(const Matrix& A);
double unitarity_residual(const Matrix& U);

bool is_hermitian(const Matrix& A, double tol = tol_hermitian);
bool is_unitary(const Matrix& U, double tol = tol_unitary);
bool is_normalized(const Vector& psi, double tol = tol_normalization);

// exp(-i H t) for Hermitian H, via eigendecomposition (exact at these sizes).
// Rejects inputs whose Hermiticity residual exceeds tol_hermitian.
Matrix expm(const Matrix& H, double t);

// Principal Hermitian generator of a unitary: returns H with exp(-i H) = U
// and the spectrum of H in (-pi, pi].  If at_branch_cut is non-null it is set
// when an eigenphase sits at the cut (generator not unique there).
Matrix logm_unitary(const Matrix& U, bool* at_branch_cut = nullptr);

// Orthonormalizes in input order.  The first vector must arrive normalized and
// is returned unchanged, so it can anchor a basis.  Throws on rank deficiency,
// naming the offending index.
std::vector<Vector> gram_schmidt_anchored(const std::vector<Vector>& vectors);

// |<a|b>|^2 for normalized vectors of equal dimension.
double fidelity(const Vector& a, const Vector& b);

}  // namespace qfb
