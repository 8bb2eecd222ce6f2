#include <doctest.h>

#include <cmath>

#include "fasthaar/error.hpp"
#include "fasthaar/metrics.hpp"
#include "fasthaar/random.hpp"
#include "oracles.hpp"

using namespace fasthaar;

TEST_CASE("identical signals sit on the floor") {
  const Signal x(oracle::gaussian(33, 2));
  const auto r = pointwise_error_db(x, x);
  for (double db : r.pointwise_db) CHECK(db == kErrorFloorDb);
  CHECK(r.max_db == kErrorFloorDb);
  CHECK(r.floor_db == -300.0);
}

TEST_CASE("pointwise dB of a 1e-5 relative error") {
  const auto r = pointwise_error_db(Signal{1 + 1e-5, 0}, Signal{1, 0});
  REQUIRE(r.pointwise_db.size() == 2);
  CHECK(r.pointwise_db[0] == doctest::Approx(-100.0).epsilon(1e-8));
  CHECK(r.pointwise_db[1] == kErrorFloorDb);
  CHECK(r.max_db == r.pointwise_db[0]);
  CHECK(r.reference_peak == 1.0);
}

TEST_CASE("all-zero oracle uses unit peak") {
  const auto r = pointwise_error_db(Signal{0.1, 0}, Signal{0, 0});
  CHECK(r.reference_peak == 1.0);
  CHECK(r.pointwise_db[0] == doctest::Approx(-20.0));
}

TEST_CASE("pointwise dB is monotone in the difference") {
  const Signal oracle_sig{2, -2, 1, 0.5, 0, 0};
  const Signal cand{2 + 1e-9, -2 + 1e-6, 1 - 1e-3, 0.5 + 0.1, 1e-200, 1e-320};
  const auto r = pointwise_error_db(cand, oracle_sig);
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    CHECK(r.pointwise_db[i] < r.pointwise_db[i + 1]);
  }
  for (double db : r.pointwise_db) CHECK(db >= kErrorFloorDb);
  CHECK(r.pointwise_db[5] == kErrorFloorDb);  // below the floor, clamped
}

TEST_CASE("length mismatch") {
  CHECK_THROWS_AS(pointwise_error_db(Signal{1}, Signal{1, 2}), Error);
}

TEST_CASE("compare_transforms") {
  const auto constant = compare_transforms(Signal(std::vector<double>(64, 3.5)));
  for (double db : constant.approx.pointwise_db) CHECK(db == kErrorFloorDb);
  for (double db : constant.detail.pointwise_db) CHECK(db == kErrorFloorDb);

  const auto r = compare_transforms(Signal(random_samples(4096, 42)));
  CHECK(r.approx.max_db <= -90.0);
  CHECK(r.detail.max_db <= -160.0);
}

TEST_CASE("complexity report") {
  auto c = complexity_report(8, 1);
  CHECK(c.baseline.mul_count == 32);
  CHECK(c.baseline.add_count == 16);
  CHECK(c.fast.mul_count == 8);
  CHECK(c.fast.add_count == 8);
  CHECK(c.baseline.total == 48);
  CHECK(c.mul_ratio == 0.25);
  CHECK(c.total_ratio == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_FALSE(c.wall_clock_fast.has_value());

  c = complexity_report(64, 3);
  CHECK(c.fast.mul_count == 112);
  CHECK(c.baseline.mul_count == 448);
  CHECK(c.mul_ratio == 0.25);

  // Counts are independent of the signal values.
  const auto other = complexity_report(64, 3, {}, 7);
  CHECK(other.fast.total == c.fast.total);
  CHECK(other.baseline.total == c.baseline.total);

  c = complexity_report(256, 2, {true, 3});
  CHECK(c.wall_clock_fast.has_value());
  CHECK(*c.wall_clock_baseline >= 0.0);

  CHECK_THROWS_AS(complexity_report(12, 3), Error);
  CHECK_THROWS_AS(complexity_report(8, 0), Error);
}

TEST_CASE("xoshiro256** reference stream") {
  // First outputs for seed 0, cross-checked against an independent Python
  // implementation of SplitMix64 + xoshiro256**.
  Xoshiro256 rng(0);
  CHECK(rng.next() == 0x99EC5F36CB75F2B4ULL);
  CHECK(rng.next() == 0xBF6E1F784956452AULL);
  CHECK(rng.next() == 0x1A5F849D4933E6E0ULL);
}
