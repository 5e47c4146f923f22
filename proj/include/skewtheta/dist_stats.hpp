#ifndef SKEWTHETA_DIST_STATS_HPP
#define SKEWTHETA_DIST_STATS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace skewtheta {

// Sorted sample multiset of nonnegative reals with seed provenance.
struct EmpiricalDistribution {
  std::vector<double> samples;  // ascending
  std::uint64_t seed = 0;
  std::string meta;

  EmpiricalDistribution() = default;
  EmpiricalDistribution(std::vector<double> values, std::uint64_t seed_,
                        std::string meta_ = {});

  std::size_t count() const { return samples.size(); }
  double median() const;
};

struct Histogram {
  double bin_width = 0.1;
  double origin = 0.0;
  std::vector<std::int64_t> counts;
  bool normalized = false;
  std::vector<double> densities;  // filled when normalized
};

// sup |F_A - F_B| over the merged sample points (right-continuous ECDFs).
double ks_two_sample(const EmpiricalDistribution& a,
                     const EmpiricalDistribution& b);

// sup over sample points of max(|i/n - cdf(x_i)|, |(i-1)/n - cdf(x_i)|).
double ks_vs_cdf(const EmpiricalDistribution& a,
                 const std::function<double(double)>& cdf);

// Asymptotic two-sample critical value at 1%: 1.63 sqrt((n+m)/(n m)).
double ks_two_sample_critical_1pct(std::size_t n, std::size_t m);

Histogram histogram(const EmpiricalDistribution& a, double bin_width,
                    double origin, bool normalized = false);

double abs_square_mean(const EmpiricalDistribution& a);

}  // namespace skewtheta

#endif
