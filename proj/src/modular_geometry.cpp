#include "skewtheta/modular_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace skewtheta {

double reduce_phi(double phi) {
  double r = phi - kTwoPi * std::floor(phi / kTwoPi);
  if (r >= kTwoPi) r -= kTwoPi;
  if (r < 0.0) r += kTwoPi;
  return r;
}

JacobiElement jacobi_element(const Mat2& gamma, const Vec2& integer_shift) {
  const double a = gamma(0, 0), b = gamma(0, 1), c = gamma(1, 0), d = gamma(1, 1);
  return {gamma, Vec2(0.5 * a * b, 0.5 * c * d) + integer_shift};
}

Mat2 shear(double u) {
  Mat2 m;
  m << 1.0, u, 0.0, 1.0;
  return m;
}

Mat2 geodesic_matrix(double t) {
  Mat2 m;
  m << std::exp(-0.5 * t), 0.0, 0.0, std::exp(0.5 * t);
  return m;
}

Mat2 frame_to_matrix(const FramePoint& f) {
  const double sv = std::sqrt(f.v);
  Mat2 diag;
  diag << sv, 0.0, 0.0, 1.0 / sv;
  Mat2 rot;
  rot << std::cos(f.phi), -std::sin(f.phi), std::sin(f.phi), std::cos(f.phi);
  return shear(f.u) * diag * rot;
}

FramePoint matrix_to_frame(const Mat2& m) {
  if (std::fabs(m.determinant() - 1.0) > 1e-9)
    throw std::invalid_argument("not in SL(2,R)");
  const double c = m(1, 0), d = m(1, 1);
  const double denom = c * c + d * d;
  FramePoint f;
  f.v = 1.0 / denom;
  f.u = (m(0, 0) * c + m(0, 1) * d) / denom;
  f.phi = reduce_phi(std::atan2(c, d));
  return f;
}

FramePoint mobius_act(const Mat2& g, const FramePoint& f) {
  const double a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  const Complex tau(f.u, f.v);
  const Complex den = c * tau + d;
  if (std::abs(den) < 1e-300)
    throw std::domain_error("degenerate Moebius denominator");
  const Complex tau2 = (a * tau + b) / den;
  FramePoint out;
  out.u = tau2.real();
  out.v = tau2.imag();
  out.phi = reduce_phi(f.phi + std::arg(den));
  return out;
}

ThetaArg jacobi_act(const JacobiElement& h, const ThetaArg& arg) {
  ThetaArg out;
  out.frame = mobius_act(h.gamma, arg.frame);
  const Vec2 xi(arg.x, arg.y);
  const Vec2 moved = h.zeta + h.gamma * xi;
  out.x = frac(moved(0));
  out.y = frac(moved(1));
  return out;
}

std::pair<Mat2, FramePoint> reduce_fundamental(const FramePoint& f) {
  static const double tol = 1e-12;
  Mat2 s;
  s << 0.0, -1.0, 1.0, 0.0;
  Mat2 gamma = Mat2::Identity();
  FramePoint cur = f;
  for (long step = 0; step < 1000000; ++step) {
    const double n = std::nearbyint(cur.u);
    if (n != 0.0) {
      const Mat2 t = shear(-n);
      cur = mobius_act(t, cur);
      gamma = t * gamma;
    }
    const double norm2 = cur.u * cur.u + cur.v * cur.v;
    if (norm2 < 1.0 - tol) {
      cur = mobius_act(s, cur);
      gamma = s * gamma;
      continue;
    }
    // tie resolution toward u >= 0
    if (cur.u < -0.5 + tol) {
      const Mat2 t = shear(1.0);
      cur = mobius_act(t, cur);
      gamma = t * gamma;
    }
    if (norm2 <= 1.0 + tol && cur.u < -tol) {
      cur = mobius_act(s, cur);
      gamma = s * gamma;
    }
    return {gamma, cur};
  }
  throw std::runtime_error("reduction did not terminate");
}

FramePoint geodesic_horocycle_point(double u, double t) {
  return {u, std::exp(-t), 0.0};
}

}  // namespace skewtheta
