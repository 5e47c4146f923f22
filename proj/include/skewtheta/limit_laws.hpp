#ifndef SKEWTHETA_LIMIT_LAWS_HPP
#define SKEWTHETA_LIMIT_LAWS_HPP

#include <cstdint>

#include "skewtheta/dist_stats.hpp"
#include "skewtheta/skew_dynamics.hpp"

namespace skewtheta {

struct LimitParams {
  double omega = 0.0;   // mod 1
  double varphi = 0.0;  // mod 1
  std::int64_t n_max = 1000;
};

// |Y_{omega,varphi}| at a single point of T^4 (the e(t) phase does not
// affect the modulus).  Poles at integer y.
double y_value(const LimitParams& params, double t, double t_prime, double x,
               double y);

// Seeded i.i.d. draws of |Y_{omega,varphi}| over (t,t',x,y) uniform in T^4.
EmpiricalDistribution y_sample(const LimitParams& params, std::int64_t count,
                               std::uint64_t seed);

// Draws of |(1+e(t'))/(2 pi) sum_n e(nx)/(n-y)|; x may be frozen at a fixed
// non-integer value (condition_x >= 0) instead of sampled.
EmpiricalDistribution y00_sample(std::int64_t count, std::uint64_t seed,
                                 std::int64_t n_max = 1000,
                                 double condition_x = -1.0);

// Draws of |(1-e(y))/(1-e(x))| with (x,y) uniform.
EmpiricalDistribution alpha0_sample(std::int64_t count, std::uint64_t seed);

// Radial density 2/(pi^2 r) log|(1+r)/(1-r)| and its CDF (numeric
// integration; the r -> 1/r symmetry handles the tail).
double radial_density(double r);
double radial_cdf(double r);

// Draws of |S_{N,alpha}|/sqrt(c_N(l alpha)); shares the sampler with
// x_sample, so equal seeds give pointwise-rescaled values.
EmpiricalDistribution xtilde_sample(std::int64_t n_steps, double alpha,
                                    const Harmonic& h, std::int64_t count,
                                    std::uint64_t seed);

}  // namespace skewtheta

#endif
