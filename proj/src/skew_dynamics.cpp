#include "skewtheta/skew_dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "skewtheta/rng.hpp"
#include "skewtheta/theta_engine.hpp"

namespace skewtheta {

namespace {

constexpr std::int64_t kMaxSteps = 1000000;

// Phase k p_n + l q_n of the n-th orbit point, mod 1, in double-double.
// p_n = p + n alpha, q_n = q + n p + n(n-1)/2 alpha.
double orbit_phase(const TorusPoint& pt, double alpha, const Harmonic& h,
                   std::int64_t n) {
  const double nd = static_cast<double>(n);
  const double tri = static_cast<double>(n * (n - 1) / 2);
  const double k = static_cast<double>(h.k);
  const double l = static_cast<double>(h.l);
  DD phase = two_prod(k, pt.p);
  phase = dd_add(phase, two_prod(l, pt.q));
  phase = dd_add(phase, dd_scale(two_prod(nd, alpha), k));
  phase = dd_add(phase, dd_scale(two_prod(nd, pt.p), l));
  phase = dd_add(phase, dd_scale(two_prod(tri, alpha), l));
  return dd_frac(phase);
}

}  // namespace

TorusPoint skew_iterate(const TorusPoint& pt, double alpha, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative iterate");
  if (n > kMaxSteps) throw std::invalid_argument("iterate count exceeds cap");
  const double nd = static_cast<double>(n);
  const double tri = static_cast<double>(n * (n - 1) / 2);
  TorusPoint out;
  out.p = dd_frac(dd_add(two_prod(nd, alpha), pt.p));
  DD q = dd_add(two_prod(nd, pt.p), pt.q);
  q = dd_add(q, two_prod(tri, alpha));
  out.q = dd_frac(q);
  return out;
}

Complex birkhoff_sum(std::int64_t n_steps, double alpha, const Harmonic& h,
                     const TorusPoint& pt) {
  if (n_steps < 1) throw std::invalid_argument("need at least one step");
  if (n_steps > kMaxSteps) throw std::invalid_argument("step count exceeds cap");
  Complex sum{0.0, 0.0};
  for (std::int64_t n = 1; n <= n_steps; ++n)
    sum += unit_phase(orbit_phase(pt, alpha, h, n));
  return sum;
}

std::vector<double> birkhoff_moduli(std::int64_t n_steps, double alpha,
                                    const Harmonic& h, std::int64_t count,
                                    std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("need at least one sample");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    SampleStream rng(seed, static_cast<std::uint64_t>(i));
    TorusPoint pt{rng.next_double(), rng.next_double()};
    out[static_cast<std::size_t>(i)] = std::abs(birkhoff_sum(n_steps, alpha, h, pt));
  }
  return out;
}

EmpiricalDistribution x_sample(std::int64_t n_steps, double alpha,
                               const Harmonic& h, std::int64_t count,
                               std::uint64_t seed) {
  if (h.l == 0) throw std::invalid_argument("geometric case: use closed form");
  std::vector<double> out = birkhoff_moduli(n_steps, alpha, h, count, seed);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n_steps));
  for (double& v : out) v *= norm;
  return {std::move(out), seed, "x_sample"};
}

Complex connection_rhs(std::int64_t n_steps, double alpha, const Harmonic& h,
                       const TorusPoint& pt) {
  if (h.l == 0) throw std::invalid_argument("geometric case: use closed form");
  const double k = static_cast<double>(h.k);
  const double l = static_cast<double>(h.l);
  const DD u = two_prod(l, alpha);
  DD x = two_prod(k - 0.5 * l, alpha);
  x = dd_add(x, two_prod(l, pt.p));
  const Complex th = theta_chi_exact(u, n_steps, x, 0.0);
  DD outer = two_prod(k, pt.p);
  outer = dd_add(outer, two_prod(l, pt.q));
  return th * unit_phase(outer);
}

}  // namespace skewtheta
