#include "skewtheta/theta_engine.hpp"

#include <cmath>
#include <stdexcept>

#include "skewtheta/rng.hpp"

namespace skewtheta {

namespace {

constexpr double kGaussianNorm = 1.189207115002721;  // 2^{1/4}
constexpr double kGaussianSupport = 8.0;
constexpr double kGaussianTermCutoff = 9.0;  // |(n-y) v^{1/2}| bound, tail < 1e-12
constexpr double kAxisTol = 1e-8;

// Distance of phi to the nearest multiple of pi, and which multiple.
double phi_mod_2pi(double phi) { return reduce_phi(phi); }

bool near_zero_mod_2pi(double phi) {
  double r = phi_mod_2pi(phi);
  return r < kAxisTol || kTwoPi - r < kAxisTol;
}

bool near_pi_mod_2pi(double phi) {
  return std::fabs(phi_mod_2pi(phi) - kPi) < kAxisTol;
}

}  // namespace

double window_value(WindowFunction f, double w) {
  switch (f) {
    case WindowFunction::kIndicator01:
      return (w > 0.0 && w <= 1.0) ? 1.0 : 0.0;
    case WindowFunction::kGaussian:
      return kGaussianNorm * std::exp(-kPi * w * w);
  }
  return 0.0;
}

Complex window_transform(WindowFunction f, double phi, double w,
                         int panel_scale) {
  if (near_zero_mod_2pi(phi)) return {window_value(f, w), 0.0};
  if (near_pi_mod_2pi(phi)) return {window_value(f, -w), 0.0};

  const double s = std::sin(phi);
  const double c = std::cos(phi);
  if (std::fabs(s) < kAxisTol)
    throw std::domain_error("phi too close to axis for quadrature");

  const double a = (f == WindowFunction::kIndicator01) ? 0.0 : -kGaussianSupport;
  const double b = (f == WindowFunction::kIndicator01) ? 1.0 : kGaussianSupport;
  const double per_unit =
      std::ceil(std::fabs(w) / std::fabs(s)) + std::ceil(std::fabs(c / s)) + 16.0;
  const int panels =
      static_cast<int>(per_unit * (b - a)) * (panel_scale < 1 ? 1 : panel_scale);

  const double inv_s = 1.0 / s;
  auto integrand = [&](double wp) -> Complex {
    const double phase = (0.5 * (w * w + wp * wp) * c - w * wp) * inv_s;
    Complex val = unit_phase(phase);
    if (f == WindowFunction::kGaussian) val *= window_value(f, wp);
    return val;
  };
  return gauss_legendre(integrand, a, b, panels) / std::sqrt(std::fabs(s));
}

Complex chi0_window(double phi, double w) {
  const double r = phi_mod_2pi(phi);
  const double s = std::sin(r);
  if (std::fabs(s) < kAxisTol)
    throw std::domain_error("phi too close to axis for leading-order window");
  if (w == 0.0) throw std::domain_error("pole of leading-order window");
  const double eps = (r < kPi) ? 1.0 : -1.0;
  const double cot = std::cos(r) / s;
  const Complex num = 1.0 - unit_phase(0.5 * cot - w / s);
  return eps * std::sqrt(std::fabs(s)) * unit_phase(0.5 * w * w * cot) * num /
         (kTwoPi * Complex(0.0, 1.0) * w);
}

Complex gaussian_transform(double phi, double w) {
  if (near_zero_mod_2pi(phi) || near_pi_mod_2pi(phi))
    return {window_value(WindowFunction::kGaussian, w), 0.0};
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  // |sin phi|^{-1/2} (1 - i cot phi)^{-1/2}, principal branch
  const Complex kappa =
      1.0 / std::sqrt(Complex(std::fabs(s), -c * std::fabs(s) / s));
  return kappa * window_value(WindowFunction::kGaussian, w);
}

Complex theta(WindowFunction f, const ThetaArg& arg,
              const TruncationPolicy& trunc) {
  const FramePoint& fr = arg.frame;
  const double sv = std::sqrt(fr.v);

  if (f == WindowFunction::kIndicator01) {
    const bool at_zero = near_zero_mod_2pi(fr.phi);
    const bool at_pi = near_pi_mod_2pi(fr.phi);
    if (!at_zero && !at_pi)
      throw std::domain_error("transform not available");
    // chi((n-y)v^{1/2}) = 1 iff 0 < +-(n-y) <= v^{-1/2}
    const double span = 1.0 / sv;
    double lo, hi;
    if (at_zero) {
      lo = arg.y;
      hi = arg.y + span;
    } else {
      lo = arg.y - span;
      hi = arg.y;
    }
    Complex sum{0.0, 0.0};
    const std::int64_t n0 = static_cast<std::int64_t>(std::floor(lo)) - 1;
    const std::int64_t n1 = static_cast<std::int64_t>(std::ceil(hi)) + 1;
    for (std::int64_t n = n0; n <= n1; ++n) {
      const double w = (n - arg.y) * sv;
      const double in = at_zero ? w : -w;
      if (!(in > 0.0 && in <= 1.0)) continue;
      DD phase = dd_scale(two_prod(n - arg.y, n - arg.y), 0.5 * fr.u);
      phase = dd_add(phase, two_prod(static_cast<double>(n), arg.x));
      sum += unit_phase(phase);
    }
    return std::pow(fr.v, 0.25) * sum;
  }

  // Gaussian window: closed-form transform, terms with |(n-y)v^{1/2}| <= 9.
  const double reach = kGaussianTermCutoff / sv;
  std::int64_t n0 = static_cast<std::int64_t>(std::ceil(arg.y - reach));
  std::int64_t n1 = static_cast<std::int64_t>(std::floor(arg.y + reach));
  if (trunc.n_max > 0) {
    if (n0 < -trunc.n_max) n0 = -trunc.n_max;
    if (n1 > trunc.n_max) n1 = trunc.n_max;
  }
  Complex sum{0.0, 0.0};
  for (std::int64_t n = n0; n <= n1; ++n) {
    const double w = (n - arg.y) * sv;
    DD phase = dd_scale(two_prod(n - arg.y, n - arg.y), 0.5 * fr.u);
    phase = dd_add(phase, two_prod(static_cast<double>(n), arg.x));
    sum += gaussian_transform(fr.phi, w) * unit_phase(phase);
  }
  return std::pow(fr.v, 0.25) * sum;
}

Complex theta_chi_exact(DD u, std::int64_t n_terms, DD x, double y) {
  if (n_terms < 1) throw std::invalid_argument("need at least one term");
  Complex sum{0.0, 0.0};
  // n ranges over y < n <= y + N
  const std::int64_t n0 = static_cast<std::int64_t>(std::floor(y)) + 1;
  for (std::int64_t n = n0; n < n0 + n_terms; ++n) {
    const double d = static_cast<double>(n) - y;
    DD phase = dd_mul(dd_scale(two_prod(d, d), 0.5), u);
    phase = dd_add(phase, dd_scale(x, static_cast<double>(n)));
    sum += unit_phase(phase);
  }
  return sum / std::sqrt(static_cast<double>(n_terms));
}

Complex theta_chi_exact(double u, std::int64_t n_terms, double x, double y) {
  return theta_chi_exact(DD{u, 0.0}, n_terms, DD{x, 0.0}, y);
}

Complex approx_theta_chi0(double u, double v, double phi, double x, double y,
                          const TruncationPolicy& trunc) {
  if (std::fabs(std::sin(phi)) < 0.05)
    throw std::domain_error("phi outside validity band");
  if (v <= 0.0) throw std::invalid_argument("v must be positive");
  const double sv = std::sqrt(v);
  Complex sum{0.0, 0.0};
  for (std::int64_t n = -trunc.n_max; n <= trunc.n_max; ++n) {
    const double d = static_cast<double>(n) - y;
    if (std::fabs(d) < 1e-12) continue;
    DD phase = dd_scale(two_prod(d, d), 0.5 * u);
    phase = dd_add(phase, two_prod(static_cast<double>(n), x));
    sum += chi0_window(phi, d * sv) * unit_phase(phase);
  }
  return std::pow(v, 0.25) * sum;
}

MonteCarloEstimate nu_estimate(WindowFunction f, const FramePoint& frame,
                               const Functional& functional,
                               std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  double sum = 0.0, sum_sq = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    SampleStream rng(seed, static_cast<std::uint64_t>(i));
    (void)rng.next_double();  // t; all shipped functionals are radial
    const double x = rng.next_double();
    const double y = rng.next_double();
    const double m = std::abs(theta(f, {frame, x, y}));
    double val = 0.0;
    switch (functional.kind) {
      case FunctionalKind::kConst1:
        val = 1.0;
        break;
      case FunctionalKind::kAbsSquare:
        val = m * m;
        break;
      case FunctionalKind::kTailIndicator:
        val = (m > functional.param) ? 1.0 : 0.0;
        break;
      case FunctionalKind::kCdfIndicator:
        val = (m <= functional.param) ? 1.0 : 0.0;
        break;
    }
    sum += val;
    sum_sq += val * val;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = (sum_sq / n - mean * mean) * n / (n - 1.0 > 0 ? n - 1.0 : 1.0);
  return {mean, std::sqrt((var > 0.0 ? var : 0.0) / n)};
}

}  // namespace skewtheta
