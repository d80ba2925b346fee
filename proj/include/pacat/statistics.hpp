#pragma once

#include <vector>

#include "pacat/state.hpp"

namespace pacat {

/// P(n) evaluated in log space; zero for n < m and at parity-forbidden n.
double photon_probability(const CatParams& params, int n);

/// Photon-number distribution P(0..n_max).
class PhotonPMF {
 public:
  PhotonPMF(CatParams params, std::vector<double> probabilities);

  const CatParams& params() const { return params_; }
  const std::vector<double>& probabilities() const { return probabilities_; }
  int n_max() const { return static_cast<int>(probabilities_.size()) - 1; }

  /// Stored value for n ≤ n_max, evaluated on demand above.
  double operator()(int n) const;
  double total() const;

 private:
  CatParams params_;
  std::vector<double> probabilities_;
};

PhotonPMF photon_number_pmf(const CatParams& params, int n_max);

/// ⟨a^x a†^x⟩ = N_{m+x} / N_m.
double antinormal_moment(const CatParams& params, int x);

/// ⟨a†a⟩ = ⟨aa†⟩ − 1.
double mean_photon_number(const CatParams& params);

/// Q = ⟨a†²a²⟩ / ⟨a†a⟩² = (B − 4A + 2) / (A − 1)² with A = N_{m+1}/N_m,
/// B = N_{m+2}/N_m. Throws UndefinedStatisticError when ⟨a†a⟩ ≤ 1e−12.
double q_parameter(const CatParams& params);

/// The normalization-ratio expression
///   (N_{m+2} − 4N_{m+1} + 2N_m)/(N_{m+1} − N_m) − N_{m+1}/N_m
/// evaluated literally. It is not algebraically equal to q_parameter (it gives
/// −1 for the Poissonian φ = π/2, m = 0 family); kept as a diagnostic only.
double q_parameter_ratio_form(const CatParams& params);

}  // namespace pacat
