#ifndef SKEWTHETA_MODULAR_GEOMETRY_HPP
#define SKEWTHETA_MODULAR_GEOMETRY_HPP

#include <Eigen/Dense>
#include <utility>

#include "skewtheta/numeric.hpp"

namespace skewtheta {

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;

// Iwasawa coordinates (tau = u + iv, phi) of an element of SL(2,R),
// with v > 0 and phi in [0, 2*pi).
struct FramePoint {
  double u = 0.0;
  double v = 1.0;
  double phi = 0.0;
};

// A frame point together with a torus point xi = (x,y), x,y in [0,1).
struct ThetaArg {
  FramePoint frame;
  double x = 0.0;
  double y = 0.0;
};

// Element (gamma; zeta) of the discrete subgroup of SL(2,R) x R^2:
// gamma integer with det 1, zeta = (ab/2, cd/2) + m for integer m.
struct JacobiElement {
  Mat2 gamma;
  Vec2 zeta;
};

// Canonical lift with zeta = (ab/2, cd/2).
JacobiElement jacobi_element(const Mat2& gamma, const Vec2& integer_shift = Vec2::Zero());

double reduce_phi(double phi);  // into [0, 2*pi)

Mat2 shear(double u);           // n(u)
Mat2 geodesic_matrix(double t); // Phi^t = diag(e^{-t/2}, e^{t/2})

Mat2 frame_to_matrix(const FramePoint& f);
FramePoint matrix_to_frame(const Mat2& m);

FramePoint mobius_act(const Mat2& g, const FramePoint& f);
ThetaArg jacobi_act(const JacobiElement& h, const ThetaArg& arg);

// Reduces tau into the standard fundamental domain |u| <= 1/2, |tau| >= 1,
// carrying phi along.  Returns (gamma, gamma . f).
std::pair<Mat2, FramePoint> reduce_fundamental(const FramePoint& f);

// (u + i e^{-t}, 0), the geodesic-flow image of the horocycle point n(u).
FramePoint geodesic_horocycle_point(double u, double t);

}  // namespace skewtheta

#endif
