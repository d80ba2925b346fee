#include "pacat/statistics.hpp"

#include <cmath>
#include <numeric>

#include "pacat/special_functions.hpp"

namespace pacat {

namespace {

constexpr double kZeroMean = 1e-12;

}  // namespace

double photon_probability(const CatParams& params, int n) {
  if (n < 0) throw DomainError("photon_probability: negative photon number");
  const double log_norm = log_normalization(params);
  const int m = params.m();
  if (n < m) return 0.0;
  const int k = n - m;
  // 2 + 2(−1)^k cos φ
  const double interference =
      k % 2 == 0 ? 2.0 * params.one_plus_cos_rel_phase() : 2.0 * (1.0 - params.cos_rel_phase());
  if (interference == 0.0) return 0.0;
  const double x = params.alpha_sq();
  double log_power;
  if (x == 0.0) {
    if (k > 0) return 0.0;
    log_power = 0.0;
  } else {
    log_power = k * std::log(x);
  }
  return std::exp(-x + log_factorial(n) - 2.0 * log_factorial(k) + log_power + std::log(interference) -
                  log_norm);
}

PhotonPMF::PhotonPMF(CatParams params, std::vector<double> probabilities)
    : params_(params), probabilities_(std::move(probabilities)) {}

double PhotonPMF::operator()(int n) const {
  if (n >= 0 && n <= n_max()) return probabilities_[n];
  return photon_probability(params_, n);
}

double PhotonPMF::total() const {
  return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
}

PhotonPMF photon_number_pmf(const CatParams& params, int n_max) {
  if (n_max < 0) throw DomainError("photon_number_pmf: negative n_max");
  log_normalization(params);
  std::vector<double> probs(n_max + 1, 0.0);
  for (int n = params.m(); n <= n_max; ++n) probs[n] = photon_probability(params, n);
  return {params, std::move(probs)};
}

double antinormal_moment(const CatParams& params, int x) {
  if (x < 0) throw DomainError("antinormal_moment: negative order");
  const double base = log_normalization(params);
  if (x == 0) return 1.0;
  return std::exp(log_normalization(params.with_m(params.m() + x)) - base);
}

double mean_photon_number(const CatParams& params) { return antinormal_moment(params, 1) - 1.0; }

double q_parameter(const CatParams& params) {
  const double a = antinormal_moment(params, 1);
  const double b = antinormal_moment(params, 2);
  const double mean = a - 1.0;
  if (!(mean > kZeroMean)) throw UndefinedStatisticError("Q parameter undefined: mean photon number vanishes");
  return (b - 4.0 * a + 2.0) / (mean * mean);
}

double q_parameter_ratio_form(const CatParams& params) {
  const double n0 = normalization(params);
  const double n1 = normalization(params.with_m(params.m() + 1));
  const double n2 = normalization(params.with_m(params.m() + 2));
  if (std::abs(n1 - n0) <= kZeroMean * n0) {
    throw UndefinedStatisticError("ratio form undefined: N_{m+1} equals N_m");
  }
  return (n2 - 4.0 * n1 + 2.0 * n0) / (n1 - n0) - n1 / n0;
}

}  // namespace pacat
