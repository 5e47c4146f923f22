#include "skewtheta/limit_laws.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "skewtheta/renormalization.hpp"
#include "skewtheta/rng.hpp"

namespace skewtheta {

namespace {

constexpr double kPoleTol = 1e-12;

double draw_away_from_integers(SampleStream& rng) {
  for (;;) {
    const double x = rng.next_double();
    if (dist_to_nearest_int(x) >= kPoleTol) return x;
  }
}

Complex y_series(const LimitParams& params, double t_prime, double x,
                 double y) {
  Complex sum{0.0, 0.0};
  for (std::int64_t n = -params.n_max; n <= params.n_max; ++n) {
    const double nd = static_cast<double>(n);
    const double d = nd - y;
    DD osc = dd_scale(two_prod(d, d), 0.5 * params.omega);
    osc = dd_add(osc, two_prod(nd, x));
    const DD mod_arg = dd_add(two_prod(-nd, params.varphi), t_prime);
    sum += (1.0 + unit_phase(mod_arg)) / d * unit_phase(osc);
  }
  return sum;
}

}  // namespace

double y_value(const LimitParams& params, double /*t*/, double t_prime,
               double x, double y) {
  if (dist_to_nearest_int(y) < kPoleTol)
    throw std::domain_error("pole in series");
  return std::abs(y_series(params, t_prime, x, y)) / kTwoPi;
}

EmpiricalDistribution y_sample(const LimitParams& params, std::int64_t count,
                               std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("need at least one sample");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    SampleStream rng(seed, static_cast<std::uint64_t>(i));
    (void)rng.next_double();  // t: does not affect the modulus
    const double t_prime = rng.next_double();
    const double x = rng.next_double();
    const double y = draw_away_from_integers(rng);
    out[static_cast<std::size_t>(i)] =
        std::abs(y_series(params, t_prime, x, y)) / kTwoPi;
  }
  return {std::move(out), seed, "y_sample"};
}

EmpiricalDistribution y00_sample(std::int64_t count, std::uint64_t seed,
                                 std::int64_t n_max, double condition_x) {
  if (count < 1) throw std::invalid_argument("need at least one sample");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    SampleStream rng(seed, static_cast<std::uint64_t>(i));
    (void)rng.next_double();  // t
    const double t_prime = rng.next_double();
    const double x = (condition_x >= 0.0) ? condition_x : rng.next_double();
    const double y = draw_away_from_integers(rng);
    Complex sum{0.0, 0.0};
    for (std::int64_t n = -n_max; n <= n_max; ++n) {
      const double nd = static_cast<double>(n);
      sum += unit_phase(two_prod(nd, x)) / (nd - y);
    }
    out[static_cast<std::size_t>(i)] =
        std::abs(1.0 + unit_phase(t_prime)) * std::abs(sum) / kTwoPi;
  }
  return {std::move(out), seed, "y00_sample"};
}

EmpiricalDistribution alpha0_sample(std::int64_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("need at least one sample");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    SampleStream rng(seed, static_cast<std::uint64_t>(i));
    (void)rng.next_double();  // t
    const double x = draw_away_from_integers(rng);
    const double y = rng.next_double();
    out[static_cast<std::size_t>(i)] =
        std::abs(1.0 - unit_phase(y)) / std::abs(1.0 - unit_phase(x));
  }
  return {std::move(out), seed, "alpha0_sample"};
}

double radial_density(double r) {
  if (r <= 0.0) throw std::domain_error("density defined for r > 0");
  if (r == 1.0) return std::numeric_limits<double>::infinity();
  const double arg = (r < 1.0) ? r : 1.0 / r;
  return 4.0 * std::atanh(arg) / (kPi * kPi * r);
}

namespace {

// Integral of the radial density over [0, x], x <= 1.  The logarithmic
// singularity at 1 is integrable; the cap at 1 - 1e-12 contributes < 1e-10.
double radial_mass_below(double x) {
  const double hi = std::min(x, 1.0 - 1e-12);
  if (hi <= 0.0) return 0.0;
  return adaptive_simpson([](double r) { return radial_density(r); }, 1e-300,
                          hi, 1e-10, 52);
}

}  // namespace

double radial_cdf(double r) {
  if (r <= 0.0) return 0.0;
  static const double half = radial_mass_below(1.0);
  if (r < 1.0) return radial_mass_below(r);
  if (std::isinf(r)) return 2.0 * half;
  // mass above r equals mass below 1/r (the density is r -> 1/r symmetric)
  return 2.0 * half - radial_mass_below(1.0 / r);
}

EmpiricalDistribution xtilde_sample(std::int64_t n_steps, double alpha,
                                    const Harmonic& h, std::int64_t count,
                                    std::uint64_t seed) {
  if (h.l == 0) throw std::invalid_argument("geometric case: use closed form");
  const double u = static_cast<double>(h.l) * alpha;
  const auto c = c_of(u, n_steps);
  std::vector<double> out = birkhoff_moduli(n_steps, alpha, h, count, seed);
  const double norm = 1.0 / std::sqrt(static_cast<double>(c));
  for (double& v : out) v *= norm;
  return {std::move(out), seed, "xtilde_sample"};
}

}  // namespace skewtheta
