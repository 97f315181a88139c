#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <stdexcept>
#include <string>

namespace gcx {

// Chart dimension is small by design (d <= 3). Fixed-capacity Eigen types keep
// the solver inner loops allocation-free while the dimension stays runtime.
inline constexpr int kMaxDim = 3;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed config, dimension mismatch, out-of-range parameter.
struct ConfigError : Error {
  using Error::Error;
};

// Metric evaluation produced a non-finite, asymmetric or non-positive-definite matrix.
struct MetricError : Error {
  using Error::Error;
};

// An integrated path left the chart ball; `param` is the curve parameter at exit.
struct ChartExitError : Error {
  double param;
  ChartExitError(const std::string& msg, double param_) : Error(msg), param(param_) {}
};

// Shooting solver did not reach the boundary-value tolerance.
struct BvpFailure : Error {
  double residual;
  BvpFailure(const std::string& msg, double residual_) : Error(msg), residual(residual_) {}
};

// Newton inversion of the barycentric map did not converge (target not covered).
struct InversionFailure : Error {
  double residual;
  InversionFailure(const std::string& msg, double residual_) : Error(msg), residual(residual_) {}
};

// Simplex vertices are (numerically) affinely dependent.
struct DegenerateSimplexError : Error {
  double condition;
  DegenerateSimplexError(const std::string& msg, double condition_)
      : Error(msg), condition(condition_) {}
};

// A bound certificate was requested for targets that are not all covered.
struct CannotCertifyError : Error {
  using Error::Error;
};

inline Vec make_vec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

inline Vec zero_vec(int dim) { return Vec::Zero(dim); }

}  // namespace gcx
