#ifndef SKEWTHETA_THETA_ENGINE_HPP
#define SKEWTHETA_THETA_ENGINE_HPP

#include <cstdint>

#include "skewtheta/modular_geometry.hpp"
#include "skewtheta/numeric.hpp"

namespace skewtheta {

// The two shipped windows; both have unit L^2 norm.
enum class WindowFunction {
  kIndicator01,  // characteristic function of (0,1]
  kGaussian,     // w -> 2^{1/4} exp(-pi w^2)
};

double window_value(WindowFunction f, double w);

struct TruncationPolicy {
  std::int64_t n_max = 1000;      // symmetric index cutoff for the n-sum
  int quadrature_panels = 0;      // 0 = automatic panel density
};

// f_phi(w): f(w) at phi = 0 mod 2pi, f(-w) at phi = pi mod 2pi, otherwise
// the oscillatory integral evaluated by composite Gauss-Legendre quadrature
// over the window support.  panel_scale multiplies the automatic panel
// density (refinement studies).
Complex window_transform(WindowFunction f, double phi, double w,
                         int panel_scale = 1);

// Leading-order window chi_phi^{(0)}(w); pole at w = 0.
Complex chi0_window(double phi, double w);

// Closed form for the Gaussian window at any phi (unimodular factor times
// the Gaussian itself); agrees with window_transform on the quadrature path.
Complex gaussian_transform(double phi, double w);

// Theta series.  Gaussian: any phi, terms |(n-y) v^{1/2}| <= 9.
// Indicator: exact finite sum, phi must be 0 or pi mod 2pi.
Complex theta(WindowFunction f, const ThetaArg& arg,
              const TruncationPolicy& trunc = {});

// Theta_chi(u + i N^{-2}, 0; (x,y)) as the exact finite sum
// N^{-1/2} sum_{y < n <= y+N} e((n-y)^2 u/2 + n x).
Complex theta_chi_exact(double u, std::int64_t n_terms, double x, double y);
// Double-double phase inputs, for callers that must not round l*alpha.
Complex theta_chi_exact(DD u, std::int64_t n_terms, DD x, double y);

// v^{1/4} sum chi0((n-y)v^{1/2}) e((n-y)^2 u/2 + n x) over |n| <= n_max,
// valid for |sin phi| >= 0.05.
Complex approx_theta_chi0(double u, double v, double phi, double x, double y,
                          const TruncationPolicy& trunc = {});

enum class FunctionalKind { kConst1, kAbsSquare, kTailIndicator, kCdfIndicator };

struct Functional {
  FunctionalKind kind = FunctionalKind::kConst1;
  double param = 0.0;  // R for tail, r for cdf
};

struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

// Monte Carlo average of F(e(t)|Theta_f(frame; xi)|) over (t,xi) uniform
// in T^3; deterministic per (seed, samples).
MonteCarloEstimate nu_estimate(WindowFunction f, const FramePoint& frame,
                               const Functional& functional,
                               std::int64_t samples, std::uint64_t seed);

}  // namespace skewtheta

#endif
