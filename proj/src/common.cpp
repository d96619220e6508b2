#include "taildiff/common.hpp"

#include <algorithm>
#include <cmath>

namespace taildiff {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : state_(seed) {
  // Warm up so that nearby seeds decorrelate.
  splitmix64(state_);
  splitmix64(state_);
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t mixed = index;
  return Rng(seed ^ splitmix64(mixed));
}

Rng Rng::labeled(std::uint64_t seed, const std::string& label) {
  return Rng::stream(seed, fnv1a(label));
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // Box-Muller; u1 shifted into (0,1] to keep the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  cached_ = r * std::sin(a);
  has_cached_ = true;
  return r * std::cos(a);
}

Vec Rng::normal_vec(Eigen::Index n) {
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = normal();
  return v;
}

Mat Rng::normal_mat(Eigen::Index rows, Eigen::Index cols) {
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = normal();
  return m;
}

double logsumexp(std::span<const double> v) {
  if (v.empty()) throw UsageError("logsumexp: empty input");
  const double mx = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(mx)) return mx;  // all -inf (or a NaN poisons the result)
  double s = 0.0;
  for (double x : v) s += std::exp(x - mx);
  return mx + std::log(s);
}

double norm_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double log_norm_cdf(double z) {
  if (z > -8.0) {
    return std::log(norm_cdf(z));
  }
  // Asymptotic expansion of Phi(z) = phi(z)/(-z) (1 - 1/z^2 + 3/z^4 - ...).
  const double z2 = z * z;
  const double series = 1.0 - 1.0 / z2 + 3.0 / (z2 * z2);
  return -0.5 * z2 - 0.5 * std::log(2.0 * M_PI) - std::log(-z) +
         std::log(series);
}

double dlog_norm_cdf_logistic(double z) {
  const double zc = std::clamp(z, -50.0, 50.0);
  return 1.6 / (1.0 + std::exp(1.6 * zc));
}

double dlog_norm_cdf_exact(double z) {
  const double zc = std::clamp(z, -50.0, 50.0);
  if (zc < -8.0) {
    // phi/Phi ~ -z for z << 0.
    const double z2 = zc * zc;
    return -zc / (1.0 - 1.0 / z2 + 3.0 / (z2 * z2));
  }
  return norm_pdf(zc) / norm_cdf(zc);
}

}  // namespace taildiff
