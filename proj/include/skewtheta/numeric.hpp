#ifndef SKEWTHETA_NUMERIC_HPP
#define SKEWTHETA_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace skewtheta {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

using Complex = std::complex<double>;

// Double-double value: hi + lo with |lo| <= ulp(hi)/2.  Used for phase
// accumulation where arguments of e(.) grow like N^2 and plain doubles
// would lose the fractional part.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  DD r = two_sum(s.hi, lo);
  return r;
}

inline DD dd_add(DD a, double b) { return dd_add(a, DD{b, 0.0}); }

inline DD dd_scale(DD a, double d) {
  DD p = two_prod(a.hi, d);
  p.lo += a.lo * d;
  DD r = two_sum(p.hi, p.lo);
  return r;
}

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  DD r = two_sum(p.hi, p.lo);
  return r;
}

// Fractional part of a double-double, in [0,1).
inline double dd_frac(DD x) {
  double f = x.hi - std::floor(x.hi);
  double r = f + x.lo;
  r -= std::floor(r);
  if (r >= 1.0) r -= 1.0;
  if (r < 0.0) r += 1.0;
  return r;
}

// Fractional part mapping into [0,1), also for negative arguments.
inline double frac(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r -= 1.0;
  if (r < 0.0) r += 1.0;
  return r;
}

// e(x) = exp(2 pi i x), evaluated from the mod-1 reduced argument.
inline Complex unit_phase(double x) {
  double a = kTwoPi * frac(x);
  return {std::cos(a), std::sin(a)};
}

inline Complex unit_phase(DD x) {
  double a = kTwoPi * dd_frac(x);
  return {std::cos(a), std::sin(a)};
}

// Distance to the nearest integer, ties at +-1/2 map to 1/2.
inline double dist_to_nearest_int(double x) {
  double r = x - std::nearbyint(x);  // round half to even
  return std::fabs(r);
}

// 8-point Gauss-Legendre nodes/weights on [-1,1].
inline constexpr double kGL8Nodes[8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
inline constexpr double kGL8Weights[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

// Composite Gauss-Legendre quadrature of a complex integrand over [a,b]
// with the given number of equal panels.
template <typename F>
Complex gauss_legendre(F&& f, double a, double b, int panels) {
  if (panels < 1) panels = 1;
  const double h = (b - a) / panels;
  Complex acc{0.0, 0.0};
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    Complex s{0.0, 0.0};
    for (int i = 0; i < 8; ++i) s += kGL8Weights[i] * f(mid + 0.5 * h * kGL8Nodes[i]);
    acc += 0.5 * h * s;
  }
  return acc;
}

namespace detail {
inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-10, int max_depth = 48) {
  if (!(b > a)) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace skewtheta

#endif
