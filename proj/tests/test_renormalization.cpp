#include <cmath>
#include <numeric>

#include "doctest.h"
#include "skewtheta/renormalization.hpp"
#include "skewtheta/rng.hpp"

using namespace skewtheta;

namespace {
const double kPiMinus3 = kPi - 3.0;
}

TEST_CASE("c_of basics") {
  CHECK(c_of(1.0 / 3.0, 3) == 1);
  CHECK(c_of(kPiMinus3, 2260) == 113);
  CHECK(c_of(kPiMinus3, 10) == 7);
}

TEST_CASE("c_of minimality on random inputs") {
  for (int i = 0; i < 200; ++i) {
    SampleStream rng(41, i);
    const double u = rng.next_double();
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng.next_double() * 999);
    const std::int64_t c = c_of(u, n);
    CHECK(c >= 1);
    CHECK(c <= n);
    CHECK(dist_to_nearest_int(c * u) <= 1.0 / static_cast<double>(n));
    for (std::int64_t smaller = 1; smaller < c; ++smaller)
      CHECK(dist_to_nearest_int(smaller * u) > 1.0 / static_cast<double>(n));
  }
}

TEST_CASE("renorm_data reproduces the paper-scale records") {
  const RenormData r1 = renorm_data(kPiMinus3, 2260);
  CHECK(r1.c == 113);
  CHECK(r1.d == -16);
  CHECK(r1.a == 7);
  CHECK(r1.b == -1);
  CHECK(r1.excursion == doctest::Approx(1.363).epsilon(1e-3));
  CHECK(r1.shrink == doctest::Approx(0.05));
  CHECK(r1.omega == doctest::Approx(7.0 / 113.0));
  CHECK(r1.varphi == doctest::Approx(0.0));
  CHECK(r1.a * r1.d - r1.b * r1.c == 1);

  const RenormData r2 = renorm_data(kPiMinus3, 2300);
  CHECK(r2.c == 113);
  CHECK(r2.d == -16);
  CHECK(r2.a == 7);
  CHECK(r2.excursion == doctest::Approx(1.411).epsilon(1e-3));
  CHECK(r2.varphi == doctest::Approx(0.354).epsilon(1e-2));
}

TEST_CASE("renorm_data integer relations on random inputs") {
  for (int i = 0; i < 300; ++i) {
    SampleStream rng(42, i);
    const double u = rng.next_double();
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng.next_double() * 9999);
    const RenormData r = renorm_data(u, n);
    const double cu_d = static_cast<double>(r.c) * u + static_cast<double>(r.d);
    CHECK(cu_d >= -0.5);
    CHECK(cu_d < 0.5);
    CHECK(std::gcd(r.c, std::llabs(r.d)) == 1);
    if (r.c > 1) CHECK(((r.a * r.d) % r.c + r.c) % r.c == 1);
    CHECK(r.a >= 0);
    CHECK(r.a < std::max<std::int64_t>(r.c, 1));
    CHECK(r.a * r.d - r.b * r.c == 1);
    CHECK(r.omega >= 0.0);
    CHECK(r.omega < 1.0);
    CHECK(r.varphi >= 0.0);
    CHECK(r.varphi < 1.0);
  }
}

TEST_CASE("renorm_frame relation residuals") {
  const RenormFrame rf = renorm_frame(kPiMinus3, 2260);
  CHECK(std::fabs(rf.residuals.s1_cos) <= 1e-8);
  CHECK(std::fabs(rf.residuals.s1_sin) <= 1e-8);
  CHECK(std::fabs(rf.residuals.s2) <= 1e-8);
  CHECK(rf.residuals.sin_phi ==
        doctest::Approx(rf.residuals.sin_phi_closed_form).epsilon(1e-8));
  CHECK(rf.residuals.sin_phi == doctest::Approx(0.5917).epsilon(1e-3));
  CHECK(rf.frame.v > 100.0);

  for (int i = 0; i < 100; ++i) {
    SampleStream rng(43, i);
    const double u = rng.next_double();
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng.next_double() * 9999);
    const RenormFrame r = renorm_frame(u, n);
    CHECK(std::fabs(r.residuals.s1_cos) <= 1e-8);
    CHECK(std::fabs(r.residuals.s1_sin) <= 1e-8);
    CHECK(std::fabs(r.residuals.s2) <= 1e-8);
    CHECK(std::fabs(r.residuals.sin_phi - r.residuals.sin_phi_closed_form) <=
          1e-8);
  }
}

TEST_CASE("subsequence_scan finds the figure parameters") {
  const auto hits = subsequence_scan(kPiMinus3, 2000, 2400, 2.0, 0.06);
  bool has_2260 = false, has_2300 = false;
  for (const auto& r : hits) {
    if (r.n == 2260) has_2260 = true;
    if (r.n == 2300) has_2300 = true;
  }
  CHECK(has_2260);
  CHECK(has_2300);
}

TEST_CASE("subsequence_scan rational u degenerates gracefully") {
  const auto hits = subsequence_scan(0.5, 10, 200, 1.0, 1.0);
  for (const auto& r : hits) {
    if (r.n >= 3) CHECK(r.c == 2);
    CHECK(r.excursion == doctest::Approx(0.0));
  }
  CHECK(!hits.empty());
}

TEST_CASE("bounded-type u yields no shrinking subsequence") {
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  const auto hits = subsequence_scan(golden, 100, 10000, 100.0, 0.02);
  CHECK(hits.empty());

  // shrink stays bounded below along the whole range
  double min_shrink = 1.0;
  for (std::int64_t n = 100; n <= 10000; n += 37)
    min_shrink = std::min(min_shrink, renorm_data(golden, n).shrink);
  CHECK(min_shrink > 0.02);
}
