#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pacat {

using cplx = std::complex<double>;

/// Number-basis amplitude vector, index n holds ⟨n|ψ⟩.
template <typename Scalar>
using FockVectorT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
using FockVector = FockVectorT<double>;

/// Row-major real matrix; rows index the momentum-like axis of phase-space grids.
template <typename Scalar>
using RowMatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowMatrix = RowMatrixT<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite or out-of-range argument to a numerical routine.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The two-component superposition has (numerically) zero norm, e.g. the odd
/// cat at vanishing amplitude.
class VanishingNormError : public Error {
 public:
  using Error::Error;
};

/// A truncated number basis does not hold the state to the requested tolerance.
class CutoffTooSmallError : public Error {
 public:
  using Error::Error;
};

/// A statistic is 0/0 at this parameter point (Q at the vacuum).
class UndefinedStatisticError : public Error {
 public:
  using Error::Error;
};

/// Reduces an angle to [0, 2π).
inline double reduce_angle(double angle, double period = kTwoPi) {
  double r = std::fmod(angle, period);
  if (r < 0) r += period;
  if (r >= period) r = 0;
  return r;
}

/// e^{iθ}, exact at integer multiples of π/2 so that 1 + e^{iπ} is identically zero.
inline cplx unit_phase(double theta) {
  const double quarter = theta / (0.5 * kPi);
  const double nearest = std::round(quarter);
  if (std::abs(quarter - nearest) < 1e-12) {
    switch (((static_cast<long long>(nearest) % 4) + 4) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, theta);
}

}  // namespace pacat
