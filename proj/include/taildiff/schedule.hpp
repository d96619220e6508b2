#pragma once

#include "taildiff/common.hpp"

namespace taildiff {

struct ScheduleEval {
  double s;
  double sigma;
  double g2;
};

// Variance-exploding schedule: s_t = 1 and
//   sigma(t) = sigma_min * sqrt(rho^{2t} - 1),  rho = sigma_max/sigma_min,
// so sigma(0) = 0 and sigma(1) ~ sigma_max. The squared diffusion rate is
//   g^2(t) = sigma sigma' = sigma_min^2 ln(rho) rho^{2t}.
// Scores are singular at t=0; all integrations stop at t_min.
struct NoiseSchedule {
  double sigma_min = 0.01;
  double sigma_max = 50.0;
  double t_min = 1e-3;

  void validate() const;
  double s(double) const { return 1.0; }
  double sigma(double t) const;
  double g2(double t) const;
  double sigma1() const { return sigma(1.0); }
  ScheduleEval eval(double t) const;  // throws UsageError for t outside [0,1]
  // Inverse of sigma(); the requested level must lie in (0, sigma(1)].
  double t_for_sigma(double sig) const;
};

// Noise kernel draw: x_t = s_t x0 + sigma_t eps, eps ~ N(0, I).
Vec noise_kernel_sample(const Vec& x0, double t, const NoiseSchedule& sched,
                        Rng& rng);

}  // namespace taildiff
