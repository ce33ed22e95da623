#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qfb/linalg.hpp"
#include "qfb/measurement.hpp"
#include "qfb/rng.hpp"
#include "qfb/types.hpp"

using namespace qfb;

namespace {

Vector random_state(int n, const RngStream& s) {
  Vector v(n);
  for (int i = 0; i < n; ++i)
    v(i) = cx(s.normal(2 * i), s.normal(2 * i + 1));
  v.normalize();
  return v;
}

std::vector<double> random_probabilities(int n, const RngStream& s) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    p[i] = 0.05 + s.uniform(static_cast<std::uint64_t>(i));
    sum += p[i];
  }
  for (double& x : p) x /= sum;
  return p;
}

}  // namespace

TEST_CASE("two-outcome family is complete across the strength range") {
  for (const double p0 : {0.01, 0.05, 0.2, 0.35, 0.49, 0.499}) {
    const KrausFamily f = kraus_qubit(p0);
    CHECK(f.completeness_residual() <= 1e-14);
    CHECK(std::abs(f.ops[0](0, 0).real() - std::sqrt(p0)) <= 1e-15);
    CHECK(std::abs(f.ops[1](0, 0).real() - std::sqrt(1.0 - p0)) <= 1e-15);
  }
}

TEST_CASE("two-outcome family rejects out-of-range strengths") {
  CHECK_THROWS_AS(kraus_qubit(0.0), std::invalid_argument);
  CHECK_THROWS_AS(kraus_qubit(0.5), std::invalid_argument);
  CHECK_THROWS_AS(kraus_qubit(0.7), std::invalid_argument);
  CHECK_THROWS_AS(kraus_qubit(-0.1), std::invalid_argument);
}

TEST_CASE("cyclic diagonal family is complete for random distributions") {
  for (int n = 2; n <= 9; ++n) {
    const KrausFamily f =
        kraus_nlevel(random_probabilities(n, RngStream(100 + n)));
    CHECK(f.outcomes() == n);
    CHECK(f.completeness_residual() <= 1e-13);
  }
  // Distributions must sum to one and stay inside (0,1).
  CHECK_THROWS_AS(kraus_nlevel({0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(kraus_nlevel({1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(kraus_nlevel({0.7}), std::invalid_argument);
}

TEST_CASE("cyclic diagonal family shifts the distribution across outcomes") {
  const std::vector<double> p = {0.1, 0.2, 0.3, 0.4};
  const KrausFamily f = kraus_nlevel(p);
  for (int n = 0; n < 4; ++n)
    for (int d = 0; d < 4; ++d)
      CHECK(std::abs(f.ops[n](d, d).real() - std::sqrt(p[(d - n + 4) % 4])) <=
            1e-15);
}

TEST_CASE("outcome probabilities sum to one") {
  const KrausFamily f2 = kraus_qubit(0.2);
  const KrausFamily f9 = kraus_nlevel(random_probabilities(9, RngStream(9)));
  for (int trial = 0; trial < 100; ++trial) {
    for (const KrausFamily* f : {&f2, &f9}) {
      const Vector psi = random_state(f->dim(), RngStream(500 + trial).child(f->dim()));
      const std::vector<double> probs = outcome_probabilities(*f, psi);
      double sum = 0.0;
      for (double p : probs) sum += p;
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("sampling frequencies follow the outcome probabilities") {
  const KrausFamily f = kraus_qubit(0.3);
  Vector e0(2);
  e0 << 1.0, 0.0;  // P(outcome 0) = p0 = 0.3 on a basis state
  const RngStream s(777);
  const int n = 20000;
  int zeros = 0;
  for (int c = 0; c < n; ++c)
    zeros += measure(f, e0, s, static_cast<std::uint64_t>(c)).index == 0;
  const double freq = static_cast<double>(zeros) / n;
  CHECK(std::abs(freq - 0.3) < 4.0 * std::sqrt(0.3 * 0.7 / n));
}

TEST_CASE("sampling is deterministic in the stream and counter") {
  const KrausFamily f = kraus_qubit(0.25);
  const Vector psi = random_state(2, RngStream(42));
  const RngStream s(4242);
  for (std::uint64_t c = 0; c < 20; ++c) {
    const MeasurementOutcome a = measure(f, psi, s, c);
    const MeasurementOutcome b = measure(f, psi, s, c);
    CHECK(a.index == b.index);
    CHECK((a.post_state - b.post_state).norm() == 0.0);
  }
}

TEST_CASE("post-states are the normalized operator images") {
  const KrausFamily f = kraus_nlevel(random_probabilities(5, RngStream(55)));
  const Vector psi = random_state(5, RngStream(56));
  const std::vector<double> probs = outcome_probabilities(f, psi);
  for (int n = 0; n < f.outcomes(); ++n) {
    const MeasurementOutcome out = deterministic_branch(f, psi, n);
    CHECK(out.index == n);
    CHECK(out.probability == doctest::Approx(probs[n]).epsilon(1e-12));
    const Vector expect = Vector((f.ops[n] * psi).normalized());
    CHECK((out.post_state - expect).norm() <= 1e-13);
    CHECK(is_normalized(out.post_state));
  }
}

TEST_CASE("weaker measurements disturb the state less") {
  const Vector psi = random_state(2, RngStream(57));
  const MeasurementOutcome weak = deterministic_branch(kraus_qubit(0.45), psi, 0);
  const MeasurementOutcome sharp = deterministic_branch(kraus_qubit(0.05), psi, 0);
  CHECK(fidelity(weak.post_state, psi) > fidelity(sharp.post_state, psi));
}

TEST_CASE("zero-probability branches are rejected and never sampled") {
  // Hand-built complete family whose outcome 0 annihilates the first basis state.
  KrausFamily f;
  Matrix m0 = Matrix::Zero(2, 2), m1 = Matrix::Zero(2, 2);
  m0(1, 1) = 1.0;
  m1(0, 0) = 1.0;
  f.ops = {m0, m1};
  CHECK(f.completeness_residual() <= 1e-15);
  Vector e0(2);
  e0 << 1.0, 0.0;
  CHECK_THROWS_AS(deterministic_branch(f, e0, 0), std::invalid_argument);
  const RngStream s(58);
  for (std::uint64_t c = 0; c < 1000; ++c) CHECK(measure(f, e0, s, c).index == 1);
}
