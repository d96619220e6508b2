#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace taildiff {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Bad arguments / misuse of an interface. CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure during integration, sampling or estimation (exit code 3).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Deterministic RNG. All draws go through explicitly seeded streams so runs
// are reproducible bit-for-bit; normal variates use Box-Muller rather than
// std::normal_distribution to keep the consumption pattern pinned.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Stream for item `index` of a run seeded with `seed`; order-independent.
  static Rng stream(std::uint64_t seed, std::uint64_t index);
  // Stream derived from a stable task label.
  static Rng labeled(std::uint64_t seed, const std::string& label);

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double normal();
  Vec normal_vec(Eigen::Index n);
  Mat normal_mat(Eigen::Index rows, Eigen::Index cols);

 private:
  std::uint64_t state_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

double logsumexp(std::span<const double> v);

// log Phi(z), exact; asymptotic series in the far-left tail.
double log_norm_cdf(double z);
double norm_cdf(double z);
double norm_pdf(double z);
// d/dz log Phi(z) under the logistic surrogate Phi(z) ~ logistic(1.6 z).
double dlog_norm_cdf_logistic(double z);
// d/dz log Phi(z), exact (pdf/cdf with tail-safe evaluation).
double dlog_norm_cdf_exact(double z);

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw UsageError(msg);
}

}  // namespace taildiff
