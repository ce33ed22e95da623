#pragma once

#include <vector>

#include "qfb/rng.hpp"
#include "qfb/types.hpp"

namespace qfb {

// Unsharp-measurement operator family {M_n} with sum_n M_n^dag M_n = 1.
struct KrausFamily {
  std::vector<Matrix> ops;

  int dim() const { return ops.empty() ? 0 : static_cast<int>(ops.front().rows()); }
  int outcomes() const { return static_cast<int>(ops.size()); }
  // ||sum_n M_n^dag M_n - 1||_F
  double completeness_residual() const;
};

// Two-outcome qubit family in the (|+>, |->) sigma_z eigenbasis:
//   M_0 = diag(sqrt(p0), sqrt(1-p0)),  M_1 = diag(sqrt(1-p0), sqrt(p0)).
// Outcome 0 carries the large weight on |->, outcome 1 on |+>; strength
// dp = 1 - 2 p0.  Requires 0 < p0 < 0.5.
KrausFamily kraus_qubit(double p0);

// N-outcome, N-level diagonal family built from a probability vector p
// (sum p_d = 1, each p_d in (0,1)): operator n places sqrt(p[(d - n) mod N])
// on basis state d, so outcome n carries p[0] on state n and the cyclic
// shifts make every diagonal completeness sum exactly 1.
KrausFamily kraus_nlevel(const std::vector<double>& p);

struct MeasurementOutcome {
  int index;
  double probability;
  Vector post_state;
};

// P_n = ||M_n psi||^2 for every outcome.
std::vector<double> outcome_probabilities(const KrausFamily& family,
                                          const Vector& psi);

// Samples outcome n with probability ||M_n psi||^2 using stream.uniform(counter)
// and returns the normalized post-state M_n psi / sqrt(P_n).
MeasurementOutcome measure(const KrausFamily& family, const Vector& psi,
                           const RngStream& stream, std::uint64_t counter);

// Same contract as measure but with the outcome forced to n (no sampling);
// used to build the reference branch a feedback unitary must restore.
// Throws if P_n < 1e-15 (numerically impossible branch).
MeasurementOutcome deterministic_branch(const KrausFamily& family,
                                        const Vector& psi, int n);

}  // namespace qfb
