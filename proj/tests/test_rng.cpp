#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "qfb/rng.hpp"

using qfb::RngStream;

TEST_CASE("same seed reproduces every draw") {
  const RngStream a(12345), b(12345);
  for (std::uint64_t c = 0; c < 64; ++c) {
    CHECK(a.bits(c) == b.bits(c));
    CHECK(a.uniform(c) == b.uniform(c));
    CHECK(a.normal(c) == b.normal(c));
  }
}

TEST_CASE("draws are pure functions of the counter") {
  const RngStream s(9);
  const double first = s.uniform(17);
  (void)s.uniform(3);  // unrelated draws must not disturb the mapping
  (void)s.normal(17);
  CHECK(s.uniform(17) == first);
  CHECK(s.normal(40) == s.normal(40));
}

TEST_CASE("seeds and child indices produce distinct streams") {
  const RngStream a(1), b(2);
  int collisions = 0;
  for (std::uint64_t c = 0; c < 32; ++c) collisions += a.bits(c) == b.bits(c);
  CHECK(collisions == 0);

  const RngStream parent(77);
  CHECK(parent.child(0).key() != parent.child(1).key());
  CHECK(parent.child(0).key() != parent.key());
  // Nested splits live in their own key space.
  CHECK(parent.child(0).child(1).key() != parent.child(1).key());
  CHECK(parent.child(1).child(0).key() != parent.child(0).child(1).key());
}

TEST_CASE("uniform lies in [0,1) and fills bins evenly") {
  const RngStream s(2026);
  const int n = 20000, bins = 8;
  std::vector<int> count(bins, 0);
  bool in_range = true;
  for (int c = 0; c < n; ++c) {
    const double u = s.uniform(static_cast<std::uint64_t>(c));
    in_range = in_range && u >= 0.0 && u < 1.0;
    ++count[static_cast<int>(u * bins)];
  }
  CHECK(in_range);
  // Binomial(n, 1/8) has sigma ~ 47; allow 4 sigma around the mean.
  for (int b = 0; b < bins; ++b) CHECK(std::abs(count[b] - n / bins) < 200);
}

TEST_CASE("normal matches the first two moments") {
  const RngStream s(31337);
  const int n = 40000;
  double sum = 0.0, sq = 0.0;
  for (int c = 0; c < n; ++c) {
    const double x = s.normal(static_cast<std::uint64_t>(c));
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(var - 1.0) < 5.0 * std::sqrt(2.0 / n));
}

TEST_CASE("sibling streams are statistically independent") {
  const RngStream parent(4096);
  const RngStream a = parent.child(0), b = parent.child(1);
  const int n = 20000;
  double cross = 0.0;
  for (int c = 0; c < n; ++c) {
    cross += (a.uniform(static_cast<std::uint64_t>(c)) - 0.5) *
             (b.uniform(static_cast<std::uint64_t>(c)) - 0.5);
  }
  // Correlation of independent U(0,1) pairs: sigma = 1/12 / sqrt(n).
  CHECK(std::abs(cross / n) < 4.0 / 12.0 / std::sqrt(static_cast<double>(n)));
}
