#include <cmath>

#include "doctest.h"
#include "skewtheta/modular_geometry.hpp"
#include "skewtheta/rng.hpp"

using namespace skewtheta;

namespace {

FramePoint random_frame(SampleStream& rng) {
  FramePoint f;
  f.u = 4.0 * rng.next_double() - 2.0;
  f.v = 0.2 + 3.0 * rng.next_double();
  f.phi = kTwoPi * rng.next_double();
  return f;
}

Mat2 random_unimodular(SampleStream& rng) {
  // word in the generators S, T keeps entries moderate
  Mat2 s, t;
  s << 0, -1, 1, 0;
  t << 1, 1, 0, 1;
  Mat2 g = Mat2::Identity();
  for (int i = 0; i < 6; ++i) {
    const double r = rng.next_double();
    if (r < 0.4)
      g = g * s;
    else if (r < 0.7)
      g = g * t;
    else
      g = g * t.inverse();
  }
  return g;
}

}  // namespace

TEST_CASE("frame_to_matrix basics") {
  CHECK(frame_to_matrix({0.0, 1.0, 0.0}).isApprox(Mat2::Identity(), 1e-14));

  const double u0 = 0.37, t = 1.9;
  const Mat2 expected = shear(u0) * geodesic_matrix(t);
  CHECK(frame_to_matrix({u0, std::exp(-t), 0.0}).isApprox(expected, 1e-12));
}

TEST_CASE("matrix_to_frame basics") {
  FramePoint f = matrix_to_frame(Mat2::Identity());
  CHECK(f.u == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f.v == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.phi == doctest::Approx(0.0).epsilon(1e-12));

  Mat2 s;
  s << 0, -1, 1, 0;
  f = matrix_to_frame(s);
  CHECK(f.u == doctest::Approx(0.0));
  CHECK(f.v == doctest::Approx(1.0));
  CHECK(f.phi == doctest::Approx(kPi / 2));

  Mat2 bad;
  bad << 2, 0, 0, 1;
  CHECK_THROWS_AS(matrix_to_frame(bad), std::invalid_argument);
}

TEST_CASE("frame/matrix round trip on random frames") {
  for (int i = 0; i < 100; ++i) {
    SampleStream rng(11, i);
    const FramePoint f = random_frame(rng);
    const Mat2 m = frame_to_matrix(f);
    CHECK(std::fabs(m.determinant() - 1.0) < 1e-12);
    const FramePoint g = matrix_to_frame(m);
    CHECK(g.u == doctest::Approx(f.u).epsilon(1e-10));
    CHECK(g.v == doctest::Approx(f.v).epsilon(1e-10));
    CHECK(std::fabs(g.phi - f.phi) < 1e-10);
    CHECK(frame_to_matrix(g).isApprox(m, 1e-10));
  }
}

TEST_CASE("mobius_act basics") {
  FramePoint i0{0.0, 1.0, 0.0};
  FramePoint moved = mobius_act(shear(0.7), i0);
  CHECK(moved.u == doctest::Approx(0.7));
  CHECK(moved.v == doctest::Approx(1.0));
  CHECK(moved.phi == doctest::Approx(0.0));

  Mat2 s;
  s << 0, -1, 1, 0;
  moved = mobius_act(s, i0);
  CHECK(moved.u == doctest::Approx(0.0));
  CHECK(moved.v == doctest::Approx(1.0));
  CHECK(moved.phi == doctest::Approx(kPi / 2));
}

TEST_CASE("mobius_act is a left group action") {
  for (int i = 0; i < 100; ++i) {
    SampleStream rng(12, i);
    const Mat2 g1 = random_unimodular(rng);
    const Mat2 g2 = random_unimodular(rng);
    const FramePoint f = random_frame(rng);
    const FramePoint lhs = mobius_act(Mat2(g1 * g2), f);
    const FramePoint rhs = mobius_act(g1, mobius_act(g2, f));
    CHECK(lhs.u == doctest::Approx(rhs.u).epsilon(1e-10));
    CHECK(lhs.v == doctest::Approx(rhs.v).epsilon(1e-10));
    double dphi = std::fabs(lhs.phi - rhs.phi);
    dphi = std::min(dphi, kTwoPi - dphi);
    CHECK(dphi < 1e-10);
  }
}

TEST_CASE("jacobi_act identity and lattice shifts") {
  const ThetaArg arg{{0.3, 0.8, 1.1}, 0.25, 0.6};
  const JacobiElement id = jacobi_element(Mat2::Identity());
  ThetaArg out = jacobi_act(id, arg);
  CHECK(out.x == doctest::Approx(arg.x));
  CHECK(out.y == doctest::Approx(arg.y));
  CHECK(out.frame.u == doctest::Approx(arg.frame.u));

  const JacobiElement shift = jacobi_element(Mat2::Identity(), Vec2(1.0, 0.0));
  out = jacobi_act(shift, arg);
  CHECK(out.x == doctest::Approx(arg.x));
  CHECK(out.y == doctest::Approx(arg.y));
}

TEST_CASE("jacobi_act keeps xi in [0,1)") {
  Mat2 t;
  t << 1, 1, 0, 1;
  const JacobiElement gen = jacobi_element(t);
  for (int i = 0; i < 50; ++i) {
    SampleStream rng(13, i);
    ThetaArg arg{random_frame(rng), rng.next_double(), rng.next_double()};
    const ThetaArg out = jacobi_act(gen, arg);
    CHECK(out.x >= 0.0);
    CHECK(out.x < 1.0);
    CHECK(out.y >= 0.0);
    CHECK(out.y < 1.0);
    CHECK(out.frame.v > 0.0);
  }
}

TEST_CASE("reduce_fundamental basics") {
  auto [g, f] = reduce_fundamental({0.0, 1.0, 0.0});
  CHECK(g.isApprox(Mat2::Identity(), 1e-12));
  CHECK(f.u == doctest::Approx(0.0));
  CHECK(f.v == doctest::Approx(1.0));

  std::tie(g, f) = reduce_fundamental({2.0, 1.0, 0.0});
  CHECK(f.u == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f.v == doctest::Approx(1.0));

  std::tie(g, f) = reduce_fundamental({0.0, 0.25, 0.0});
  CHECK(f.u == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f.v == doctest::Approx(4.0));
}

TEST_CASE("reduce_fundamental lands in the fundamental domain") {
  for (int i = 0; i < 200; ++i) {
    SampleStream rng(14, i);
    FramePoint f;
    f.u = 10.0 * rng.next_double() - 5.0;
    f.v = 0.01 + 2.0 * rng.next_double();
    f.phi = kTwoPi * rng.next_double();
    auto [g, red] = reduce_fundamental(f);
    CHECK(std::fabs(red.u) <= 0.5 + 1e-12);
    CHECK(red.u * red.u + red.v * red.v >= 1.0 - 1e-12);
    const FramePoint check = mobius_act(g, f);
    CHECK(check.u == doctest::Approx(red.u).epsilon(1e-9));
    CHECK(check.v == doctest::Approx(red.v).epsilon(1e-9));
  }
}

TEST_CASE("geodesic_horocycle_point") {
  FramePoint f = geodesic_horocycle_point(0.0, 0.0);
  CHECK(f.u == 0.0);
  CHECK(f.v == 1.0);
  CHECK(f.phi == 0.0);

  const double n = 10.0;
  f = geodesic_horocycle_point(0.3, 2.0 * std::log(n));
  CHECK(f.v == doctest::Approx(1e-2));

  // matches n(u) Phi^t as a matrix statement
  const double u0 = 0.77, t = 1.3;
  const Mat2 m = shear(u0) * geodesic_matrix(t);
  const FramePoint g = matrix_to_frame(m);
  f = geodesic_horocycle_point(u0, t);
  CHECK(g.u == doctest::Approx(f.u).epsilon(1e-12));
  CHECK(g.v == doctest::Approx(f.v).epsilon(1e-12));
}
