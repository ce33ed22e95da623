#pragma once

#include <vector>

#include "qfb/types.hpp"

namespace qfb {

// Rank-1 projector eigenbasis anchored on a state: the anchor is the
// eigenvalue-1 eigenvector of |psi><psi|, the completion spans its kernel.
struct EigenbasisSet {
  Vector anchor;
  // Anchor followed by the explicit completion pattern: vector j has
  // -conj(c_j) at the pivot index and conj(c_pivot) at j.  The pivot is
  // index 0 unless |c_0| < 1e-8, in which case it is argmax |c_j|.
  std::vector<Vector> raw;
  // gram_schmidt_anchored(raw): orthonormal, first element equals anchor.
  std::vector<Vector> orthonormal;
};

EigenbasisSet build_basis(const Vector& psi);

// Correction unitary for one (cycle, outcome): maps the post-measurement
// branch of the reference state back onto the reference state.
struct FeedbackUnitary {
  Matrix matrix;
  int step = 0;
  int outcome = -1;
};

// U = sum_m |phi_m><phi~_m| over the anchored orthonormal bases of psi_exact
// and psi_exact_post.  U is unitary and U psi_exact_post = psi_exact exactly
// (the anchors map onto each other), which also fixes the global phase:
// <psi_exact| U |psi_exact_post> = 1.
FeedbackUnitary build_feedback(const Vector& psi_exact,
                               const Vector& psi_exact_post, int step = 0,
                               int outcome = -1);

// M' = U M.  Unitary composition preserves M^dag M, so {U_n M_n} is again a
// complete Kraus family.
Matrix compose_effective_kraus(const FeedbackUnitary& U, const Matrix& M);

struct FeedbackHamiltonian {
  Matrix matrix;   // H with exp(-i H t_F) = U, principal branch
  double t_F = 0;
  // Qubit field components of the traceless part, laid out as
  //   [[Bz, Bx + i By], [Bx - i By, -Bz]].
  // NaN when the dimension is not 2.
  double Bx = 0, By = 0, Bz = 0;
};

// H = principal-log(U) / t_F.  For qubits the traceless part is decomposed
// into the field components above (the trace part is a global phase and
// carries no field).
FeedbackHamiltonian extract_feedback_hamiltonian(const FeedbackUnitary& U,
                                                 double t_F);

// |<psi_exact| U |psi_exact_post>|; equals 1 within 1e-10 for a valid
// feedback unitary.
double verify_restore(const FeedbackUnitary& U, const Vector& psi_exact,
                      const Vector& psi_exact_post);

}  // namespace qfb
