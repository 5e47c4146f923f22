#include "skewtheta/dist_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skewtheta {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> values,
                                             std::uint64_t seed_,
                                             std::string meta_)
    : samples(std::move(values)), seed(seed_), meta(std::move(meta_)) {
  std::sort(samples.begin(), samples.end());
}

double EmpiricalDistribution::median() const {
  if (samples.empty()) throw std::invalid_argument("empty distribution");
  const std::size_t n = samples.size();
  return (n % 2 == 1) ? samples[n / 2]
                      : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

double ks_two_sample(const EmpiricalDistribution& a,
                     const EmpiricalDistribution& b) {
  if (a.samples.empty() || b.samples.empty())
    throw std::invalid_argument("empty distribution");
  const auto& xa = a.samples;
  const auto& xb = b.samples;
  const double na = static_cast<double>(xa.size());
  const double nb = static_cast<double>(xb.size());
  std::size_t ia = 0, ib = 0;
  double d = 0.0;
  while (ia < xa.size() && ib < xb.size()) {
    const double x = std::min(xa[ia], xb[ib]);
    while (ia < xa.size() && xa[ia] <= x) ++ia;
    while (ib < xb.size() && xb[ib] <= x) ++ib;
    d = std::max(d, std::fabs(ia / na - ib / nb));
  }
  return std::min(d, 1.0);
}

double ks_vs_cdf(const EmpiricalDistribution& a,
                 const std::function<double(double)>& cdf) {
  if (a.samples.empty()) throw std::invalid_argument("empty distribution");
  const double n = static_cast<double>(a.samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    const double f = cdf(a.samples[i]);
    d = std::max(d, std::fabs((i + 1) / n - f));
    d = std::max(d, std::fabs(i / n - f));
  }
  return d;
}

double ks_two_sample_critical_1pct(std::size_t n, std::size_t m) {
  const double nn = static_cast<double>(n), mm = static_cast<double>(m);
  return 1.63 * std::sqrt((nn + mm) / (nn * mm));
}

Histogram histogram(const EmpiricalDistribution& a, double bin_width,
                    double origin, bool normalized) {
  if (bin_width <= 0.0) throw std::invalid_argument("bin width must be positive");
  Histogram h;
  h.bin_width = bin_width;
  h.origin = origin;
  h.normalized = normalized;
  for (double x : a.samples) {
    const double pos = (x - origin) / bin_width;
    if (pos < 0.0) throw std::invalid_argument("sample below histogram origin");
    const auto bin = static_cast<std::size_t>(pos);
    if (bin >= h.counts.size()) h.counts.resize(bin + 1, 0);
    ++h.counts[bin];
  }
  if (normalized) {
    const double n = static_cast<double>(a.samples.size());
    h.densities.reserve(h.counts.size());
    for (std::int64_t c : h.counts)
      h.densities.push_back(static_cast<double>(c) / (n * bin_width));
  }
  return h;
}

double abs_square_mean(const EmpiricalDistribution& a) {
  if (a.samples.empty()) throw std::invalid_argument("empty distribution");
  double s = 0.0;
  for (double x : a.samples) s += x * x;
  return s / static_cast<double>(a.samples.size());
}

}  // namespace skewtheta
