#include "skewtheta/renormalization.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace skewtheta {

namespace {

std::int64_t mod_positive(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Least nonnegative a with a d == 1 (mod c), c >= 2, gcd(c,d) = 1.
std::int64_t inverse_mod(std::int64_t d, std::int64_t c) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = c, new_r = mod_positive(d, c);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::runtime_error("inconsistent convergent");
  return mod_positive(t, c);
}

}  // namespace

std::int64_t c_of(double u, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  const double bound = 1.0 / static_cast<double>(n);
  for (std::int64_t c = 1; c <= n; ++c) {
    if (dist_to_nearest_int(static_cast<double>(c) * u) <= bound) return c;
  }
  throw std::runtime_error("Dirichlet scan exhausted: floating-point boundary");
}

RenormData renorm_data(double u, std::int64_t n) {
  RenormData r;
  r.n = n;
  r.u = u;
  r.c = c_of(u, n);
  const double cu = static_cast<double>(r.c) * u;
  r.d = -static_cast<std::int64_t>(std::floor(cu + 0.5));
  if (r.c == 1) {
    r.a = 0;
    r.b = -1;
  } else {
    if (std::gcd(r.c, std::llabs(r.d)) != 1)
      throw std::runtime_error("inconsistent convergent");
    r.a = inverse_mod(r.d, r.c);
    r.b = (r.a * r.d - 1) / r.c;
  }
  if (r.a * r.d - r.b * r.c != 1)
    throw std::runtime_error("inconsistent convergent");
  r.omega = frac(static_cast<double>(r.a) / static_cast<double>(r.c));
  r.varphi = frac(static_cast<double>(n) / static_cast<double>(r.c));
  const double norm_cu = dist_to_nearest_int(cu);
  const double nd = static_cast<double>(n);
  r.excursion = nd * nd * norm_cu / static_cast<double>(r.c);
  r.shrink = static_cast<double>(r.c) / nd;
  return r;
}

RenormFrame renorm_frame(double u, std::int64_t n) {
  const RenormData data = renorm_data(u, n);
  const double nd = static_cast<double>(n);
  const FramePoint base{u, 1.0 / (nd * nd), 0.0};
  const FramePoint fr = mobius_act(data.gamma(), base);

  FrameResiduals res;
  const double inv_sqrt_v = 1.0 / std::sqrt(fr.v);
  const double cu_d = static_cast<double>(data.c) * u + static_cast<double>(data.d);
  const double cd = static_cast<double>(data.c);
  res.sin_phi = std::sin(fr.phi);
  res.s1_cos = inv_sqrt_v * std::cos(fr.phi) - nd * cu_d;
  res.s1_sin = inv_sqrt_v * res.sin_phi - cd / nd;
  res.s2 = fr.u + fr.v * std::cos(fr.phi) / res.sin_phi -
           static_cast<double>(data.a) / cd;
  const double q = nd * nd * cu_d / cd;
  res.sin_phi_closed_form = 1.0 / std::sqrt(1.0 + q * q);
  return {fr, res};
}

std::vector<RenormData> subsequence_scan(double u, std::int64_t n_lo,
                                         std::int64_t n_hi,
                                         double excursion_max,
                                         double shrink_max) {
  if (n_hi < n_lo) throw std::invalid_argument("empty N range");
  std::vector<RenormData> out;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    RenormData r = renorm_data(u, n);
    if (r.shrink > shrink_max) continue;
    // sin phi >= (1 + excursion_max^2)^{-1/2}  <=>  excursion <= excursion_max
    if (r.excursion > excursion_max) continue;
    out.push_back(r);
  }
  return out;
}

}  // namespace skewtheta
