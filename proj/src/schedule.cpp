#include "taildiff/schedule.hpp"

#include <cmath>

namespace taildiff {

void NoiseSchedule::validate() const {
  require(sigma_min > 0 && sigma_min < sigma_max,
          "schedule: need 0 < sigma_min < sigma_max");
  require(t_min > 0 && t_min < 1, "schedule: need 0 < t_min < 1");
}

double NoiseSchedule::sigma(double t) const {
  const double rho = sigma_max / sigma_min;
  return sigma_min * std::sqrt(std::pow(rho, 2.0 * t) - 1.0);
}

double NoiseSchedule::g2(double t) const {
  const double rho = sigma_max / sigma_min;
  return sigma_min * sigma_min * std::log(rho) * std::pow(rho, 2.0 * t);
}

ScheduleEval NoiseSchedule::eval(double t) const {
  require(t >= 0.0 && t <= 1.0, "schedule: t outside [0,1]");
  return {s(t), sigma(t), g2(t)};
}

double NoiseSchedule::t_for_sigma(double sig) const {
  require(sig > 0.0 && sig <= sigma1() * (1.0 + 1e-12),
          "schedule: sigma level outside (0, sigma(1)]");
  const double rho = sigma_max / sigma_min;
  const double r = sig / sigma_min;
  return std::log1p(r * r) / (2.0 * std::log(rho));
}

Vec noise_kernel_sample(const Vec& x0, double t, const NoiseSchedule& sched,
                        Rng& rng) {
  require(t >= sched.t_min && t <= 1.0,
          "noise_kernel_sample: t outside [t_min, 1]");
  const auto se = sched.eval(t);
  return se.s * x0 + se.sigma * rng.normal_vec(x0.size());
}

}  // namespace taildiff
