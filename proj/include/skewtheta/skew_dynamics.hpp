#ifndef SKEWTHETA_SKEW_DYNAMICS_HPP
#define SKEWTHETA_SKEW_DYNAMICS_HPP

#include <cstdint>
#include <vector>

#include "skewtheta/dist_stats.hpp"
#include "skewtheta/numeric.hpp"

namespace skewtheta {

// Point (p,q) of the 2-torus, components in [0,1).
struct TorusPoint {
  double p = 0.0;
  double q = 0.0;
};

// Exponent pair (k,l) of the harmonic psi(p,q) = e(k p + l q).
struct Harmonic {
  long long k = 0;
  long long l = 1;
};

// n-th iterate of the skew translation (p,q) -> (p + alpha, q + p).
TorusPoint skew_iterate(const TorusPoint& pt, double alpha, std::int64_t n);

// S_N = sum_{n=1..N} e(k p_n + l q_n) from the closed-form iterate.
Complex birkhoff_sum(std::int64_t n_steps, double alpha, const Harmonic& h,
                     const TorusPoint& pt);

// |S_N| draws over (p,q) uniform in T^2; one modulus per sample index.
// The caller normalizes (sqrt(N) or sqrt(c_N)).
std::vector<double> birkhoff_moduli(std::int64_t n_steps, double alpha,
                                    const Harmonic& h, std::int64_t count,
                                    std::uint64_t seed);

// |S_N|/sqrt(N) draws; requires l != 0.
EmpiricalDistribution x_sample(std::int64_t n_steps, double alpha,
                               const Harmonic& h, std::int64_t count,
                               std::uint64_t seed);

// Theta-side of the connection identity; equals birkhoff_sum/sqrt(N) up to
// roundoff.  Requires l != 0.
Complex connection_rhs(std::int64_t n_steps, double alpha, const Harmonic& h,
                       const TorusPoint& pt);

}  // namespace skewtheta

#endif
