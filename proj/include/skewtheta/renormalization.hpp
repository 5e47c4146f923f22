#ifndef SKEWTHETA_RENORMALIZATION_HPP
#define SKEWTHETA_RENORMALIZATION_HPP

#include <cstdint>
#include <vector>

#include "skewtheta/modular_geometry.hpp"

namespace skewtheta {

// Diophantine renormalization record at (u, N).
struct RenormData {
  std::int64_t n = 0;      // N
  double u = 0.0;
  std::int64_t c = 1;      // least c >= 1 with ||c u|| <= 1/N
  std::int64_t d = 0;      // unique integer with -1/2 <= c u + d < 1/2
  std::int64_t a = 0;      // d^{-1} mod c, least nonnegative residue
  std::int64_t b = 0;      // (a d - 1)/c
  double omega = 0.0;      // {a/c}
  double varphi = 0.0;     // {N/c}
  double excursion = 0.0;  // N^2 ||c u|| / c
  double shrink = 0.0;     // c / N

  Mat2 gamma() const {
    Mat2 g;
    g << static_cast<double>(a), static_cast<double>(b),
         static_cast<double>(c), static_cast<double>(d);
    return g;
  }
};

// Residuals of the renormalized-frame relations.
struct FrameResiduals {
  double s1_cos = 0.0;   // v^{-1/2} cos phi - N (c u + d)
  double s1_sin = 0.0;   // v^{-1/2} sin phi - c/N
  double s2 = 0.0;       // u' + v' cot phi - a/c
  double sin_phi = 0.0;  // sin phi of the renormalized frame
  double sin_phi_closed_form = 0.0;  // (1 + N^4 (c u + d)^2 / c^2)^{-1/2}
};

std::int64_t c_of(double u, std::int64_t n);

RenormData renorm_data(double u, std::int64_t n);

// gamma . (u + i N^{-2}, 0) together with the relation residuals.
struct RenormFrame {
  FramePoint frame;
  FrameResiduals residuals;
};
RenormFrame renorm_frame(double u, std::int64_t n);

// All N in [n_lo, n_hi] whose record satisfies shrink <= shrink_max and
// excursion <= excursion_max (equivalently sin phi bounded below).
std::vector<RenormData> subsequence_scan(double u, std::int64_t n_lo,
                                         std::int64_t n_hi,
                                         double excursion_max,
                                         double shrink_max);

}  // namespace skewtheta

#endif
