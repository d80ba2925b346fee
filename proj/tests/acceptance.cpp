// Acceptance gate: one [PASS]/[FAIL] line per criterion. Exit status is
// non-zero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pacat/parallel.hpp"
#include "pacat/squeezing.hpp"
#include "pacat/statistics.hpp"
#include "pacat/wigner.hpp"
#include "support/fock_oracle.hpp"

using namespace pacat;

namespace {

const std::vector<double> kAlphas{0.25, 0.5, 1.0, 2.0, 3.0};
const std::vector<double> kPhases{0.0, 0.25 * kPi, 0.5 * kPi, 0.75 * kPi, kPi};
const std::vector<double> kVarphis{0.0, 0.7};
const std::vector<int> kMs{0, 1, 2, 3};

std::vector<CatParams> acceptance_grid() {
  std::vector<CatParams> grid;
  for (double r : kAlphas)
    for (double phi : kPhases)
      for (double varphi : kVarphis)
        for (int m : kMs) grid.emplace_back(r, varphi, phi, m);
  return grid;
}

std::string describe(const CatParams& p) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "|alpha|=%g phi=%.4g varphi=%g m=%d", p.alpha_mag(), p.rel_phase(), p.alpha_phase(), p.m());
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the worst violation of a check so the report names it.
class Ledger {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  /// Passes when |got − expected| ≤ abs_tol or ≤ rel_tol |expected|.
  void close(double got, double expected, double abs_tol, double rel_tol, const std::string& what) {
    const double err = std::abs(got - expected);
    const double rel = expected != 0.0 ? err / std::abs(expected) : (err == 0.0 ? 0.0 : INFINITY);
    const double score = rel_tol > 0.0 ? std::min(err / abs_tol, rel / rel_tol) : err / abs_tol;
    if (score > worst_score_) {
      worst_score_ = score;
      worst_ = what;
      worst_abs_ = err;
    }
    require(err <= abs_tol || rel <= rel_tol, what);
  }
  int failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.pass = failures_ == 0;
    std::ostringstream s;
    s << summary;
    if (!worst_.empty()) s << "; worst abs deviation " << worst_abs_ << " at " << worst_;
    if (failures_) s << "; " << failures_ << " violation(s), first: " << first_failure_;
    o.detail = s.str();
    return o;
  }

 private:
  int failures_ = 0;
  std::string first_failure_;
  double worst_score_ = -1.0;
  double worst_abs_ = 0.0;
  std::string worst_;
};

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

FockState oracle_state(const CatParams& p) { return build_fock_direct(p, choose_cutoff(p, 1e-16) + 6); }

Outcome criterion_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const auto points = oracle::halton_points(25, -3.0, 3.0);
  Ledger l;
  for (const CatParams& p : acceptance_grid()) {
    const FockState s = oracle_state(p);
    const std::string where = describe(p);
    for (int n = 0; n <= s.cutoff(); ++n)
      l.close(photon_probability(p, n), std::norm(s[n]), 1e-8, 1e-8, "P(" + std::to_string(n) + ") " + where);
    for (int x = 1; x <= 2; ++x)
      l.close(antinormal_moment(p, x), oracle::antinormal(s, x), 1e-8, 1e-8, "antinormal " + where);
    for (int k = 0; k < 16; ++k) {
      const double theta = k * kTwoPi / 16;
      const auto xm = oracle::quadrature_moments(s, 1, theta);
      const auto ym = oracle::quadrature_moments(s, 2, theta);
      l.close(quadrature_mean(p, theta), xm.mean, 1e-8, 1e-8, "<x> " + where);
      l.close(quadrature_second_moment(p, theta), xm.second, 1e-8, 1e-8, "<x^2> " + where);
      l.close(amplitude_squared_mean(p, theta), ym.mean, 1e-8, 1e-8, "<y> " + where);
      l.close(amplitude_squared_second_moment(p, theta), ym.second, 1e-8, 1e-8, "<y^2> " + where);
    }
    for (cplx z : points) l.close(wigner_closed_form(p, z), wigner_fock_oracle(s, z), 1e-8, 1e-8, "W " + where);
  }
  const double seconds = elapsed_seconds(start);
  l.require(seconds < 120.0, "runtime budget");
  return l.outcome("200 parameter points, runtime " + std::to_string(seconds) + " s (budget 120 s)");
}

Outcome criterion_displaced_construction() {
  Ledger l;
  double worst = 1.0;
  for (const CatParams& p : acceptance_grid()) {
    const int cutoff = choose_cutoff(p, 1e-16) + 6;
    const double f = fidelity(build_fock_displaced(p, cutoff), build_fock_direct(p, cutoff));
    worst = std::min(worst, f);
    l.require(f >= 1.0 - 1e-10, describe(p));
  }
  std::ostringstream s;
  s << "largest infidelity " << 1.0 - worst << " (tolerance 1e-10)";
  return l.outcome(s.str());
}

std::vector<int> zero_pattern(const CatParams& p, int lo, int hi) {
  std::vector<int> zeros;
  for (int n = lo; n <= hi; ++n)
    if (photon_probability(p, n) == 0.0) zeros.push_back(n);
  return zeros;
}

Outcome criterion_pmf_completeness_and_parity() {
  Ledger l;
  for (const CatParams& p : acceptance_grid()) {
    const PhotonPMF pmf = photon_number_pmf(p, choose_cutoff(p, 1e-12));
    // Extended-precision accumulation so the upper bound is not decided by summation order.
    long double total = 0.0L;
    for (double v : pmf.probabilities()) total += v;
    const double sum = static_cast<double>(total);
    l.require(sum >= 1.0 - 1e-10 && sum <= 1.0, "sum " + std::to_string(sum) + " " + describe(p));

    const double phi = p.rel_phase();
    if (phi == 0.0 || phi == kPi) {
      const int forbidden = phi == 0.0 ? 1 : 0;
      for (int n = p.m(); n <= pmf.n_max(); ++n)
        if ((n - p.m()) % 2 == forbidden) l.require(pmf(n) == 0.0, "parity zero " + describe(p));
      for (int n = 0; n < p.m(); ++n) l.require(pmf(n) == 0.0, "below m " + describe(p));
    }
  }
  // Zero patterns on n ≥ m + 2 for m, m + 1, m + 2.
  for (double r : kAlphas)
    for (double phi : {0.0, kPi})
      for (int m : {0, 1}) {
        const CatParams base(r, 0.0, phi, m);
        const int lo = m + 2, hi = 40;
        const auto z0 = zero_pattern(base, lo, hi);
        const auto z1 = zero_pattern(base.with_m(m + 1), lo, hi);
        const auto z2 = zero_pattern(base.with_m(m + 2), lo, hi);
        l.require(!z0.empty() && z0 == z2, "double addition restores parity " + describe(base));
        for (int n : z0) l.require(std::find(z1.begin(), z1.end(), n) == z1.end(), "single addition swaps " + describe(base));
        l.require(z0.size() + z1.size() == static_cast<std::size_t>(hi - lo + 1), "zero sets complementary " + describe(base));
      }
  return l.outcome("sums in [1-1e-10, 1], exact parity zeros, swap/restore under addition");
}

Outcome criterion_q_baselines() {
  Ledger l;
  for (int i = 1; i <= 40; ++i) {
    const CatParams p(0.1 * i, 0.0, 0.5 * kPi, 0);
    l.close(q_parameter(p), 1.0, 1e-10, 0.0, "Yurke-Stoler " + describe(p));
  }
  for (const CatParams& p : acceptance_grid())
    if (p.m() >= 1) l.require(q_parameter(p) < 1.0, "Q<1 " + describe(p));
  for (int m : {1, 2, 3})
    for (double phi : {0.0, 0.25 * kPi, 0.5 * kPi, 0.75 * kPi}) {
      const CatParams p(1e-4, 0.0, phi, m);
      l.close(q_parameter(p), (m - 1.0) / m, 1e-6, 0.0, "small alpha " + describe(p));
    }
  return l.outcome("Q=1 for the Yurke-Stoler family, Q<1 for m>=1, Q->(m-1)/m");
}

Outcome criterion_first_order_squeezing() {
  Ledger l;
  double lowest = INFINITY;
  for (const CatParams& p : acceptance_grid()) {
    if (p.m() < 1) continue;
    const auto v = min_quadrature_variance(p);
    lowest = std::min(lowest, v.optimal_value);
    l.require(v.optimal_value >= 0.25 - 1e-9, "min variance " + std::to_string(v.optimal_value) + " " + describe(p));
  }
  std::ostringstream s;
  s << "lowest m>=1 minimum " << lowest;
  for (double varphi : kVarphis) {
    const CatParams p(0.25, varphi, 0.0, 0);
    const auto v = min_quadrature_variance(p);
    const double angle = reduce_angle(v.optimal_theta + varphi, kPi);
    l.require(v.optimal_value < 0.25, "even cat not squeezed " + describe(p));
    l.close(angle, 0.5 * kPi, 1e-6, 0.0, "optimal angle " + describe(p));
    s << "; even cat varphi=" << varphi << " min " << v.optimal_value << " at theta+varphi=" << angle;
  }
  return l.outcome(s.str());
}

Outcome criterion_small_alpha_variance() {
  Ledger l;
  std::ostringstream s;
  s << "variance at |alpha|=1e-4";
  for (int m : {1, 2, 3}) {
    const CatParams p(1e-4, 0.0, 0.0, m);
    for (int k = 0; k < 16; ++k) {
      const double theta = k * kPi / 16;
      l.close(quadrature_variance(p, theta).variance, m + 0.75, 1e-3, 0.0, "m=" + std::to_string(m));
    }
    s << ", m=" << m << ": " << quadrature_variance(p, 0.0).variance << " (expected " << m + 0.75 << ")";
  }
  return l.outcome(s.str());
}

Outcome criterion_amplitude_squared() {
  Ledger l;
  for (const CatParams& p : acceptance_grid()) {
    if (p.m() != 0) continue;
    for (int k = 0; k < 16; ++k) {
      const double theta = k * kTwoPi / 16;
      l.close(amplitude_squared_squeezing(p, theta), 0.0, 1e-10, 0.0, "m=0 " + describe(p));
    }
  }
  std::ostringstream s;
  for (double phi : kPhases) {
    double best[3] = {0.0, 0.0, 0.0};
    for (int m : {1, 2}) {
      for (int i = 1; i <= 300; ++i) {
        const double r = 0.01 * i;
        best[m] = std::min(best[m], amplitude_squared_squeezing({r, 0.0, phi, m}, 0.0));
      }
      l.require(best[m] < -1e-3, "no Y < -1e-3 for m=" + std::to_string(m) + " phi=" + std::to_string(phi));
    }
    l.require(best[2] < best[1], "min Y(m=2) >= min Y(m=1) at phi=" + std::to_string(phi));
    s << " phi=" << phi / kPi << "pi: minY(m=1)=" << best[1] << " minY(m=2)=" << best[2] << ";";
  }
  return l.outcome("Y=0 for m=0;" + s.str());
}

Outcome criterion_wigner_origin_parity() {
  Ledger l;
  std::ostringstream s;
  for (double r : {0.25, 2.0}) {
    const double w0 = wigner_closed_form({r, 0.0, 0.5 * kPi, 0}, 0.0);
    const double w1 = wigner_closed_form({r, 0.0, 0.5 * kPi, 1}, 0.0);
    const double w2 = wigner_closed_form({r, 0.0, 0.5 * kPi, 2}, 0.0);
    l.require(w0 > 0.0 && w1 < 0.0 && w2 > 0.0, "alpha=" + std::to_string(r));
    s << "alpha=" << r << ": W(0)=" << w0 << ", " << w1 << ", " << w2 << "; ";
  }
  return l.outcome(s.str());
}

Outcome criterion_wigner_normalization() {
  Ledger l;
  double worst_integral = 0.0, largest = 0.0;
  for (const CatParams& p : acceptance_grid()) {
    const WignerGrid g = wigner_grid(p, GridSpec::default_for(p), default_worker_count());
    const double integral = grid_integral(g);
    worst_integral = std::max(worst_integral, std::abs(integral - 1.0));
    largest = std::max(largest, g.values.cwiseAbs().maxCoeff());
    l.close(integral, 1.0, 1e-3, 0.0, "integral " + describe(p));
    l.require(g.values.cwiseAbs().maxCoeff() <= kWignerBound + 1e-9, "bound " + describe(p));
  }
  const CatParams one(1e-4, 0.0, 0.0, 1);
  const NegativeVolume nv = negative_volume(wigner_grid(one, GridSpec::default_for(one), default_worker_count()));
  const double stated = (2.0 * std::exp(-0.5) - 1.0) / 2.0;
  l.require(nv.support_covered, "single-photon grid clips support");
  l.close(nv.value, stated, 1e-3, 0.0, "negative volume of |1>");
  std::ostringstream s;
  s << "max |integral-1| " << worst_integral << ", max |W| " << largest << " (bound " << kWignerBound
    << "), negative volume of |1> " << nv.value << " vs " << stated;
  return l.outcome(s.str());
}

Outcome criterion_ratio_form_discrepancy() {
  Ledger l;
  std::ostringstream s;
  for (double r : {0.5, 1.0, 2.0}) {
    const CatParams p(r, 0.0, 0.5 * kPi, 0);
    const double q = q_parameter(p);
    const double ratio = q_parameter_ratio_form(p);
    l.close(ratio, -1.0, 1e-10, 0.0, "ratio form " + describe(p));
    l.close(q, 1.0, 1e-10, 0.0, "moment form " + describe(p));
    l.require(std::abs(q - ratio) > 1.0, "no discrepancy " + describe(p));
    if (r == 1.0) s << "ratio form " << ratio << ", moment form " << q;
  }
#ifdef PACAT_SOURCE_DIR
  std::ifstream readme(std::string(PACAT_SOURCE_DIR) + "/README.md");
  const std::string text((std::istreambuf_iterator<char>(readme)), std::istreambuf_iterator<char>());
  l.require(text.find("q_parameter_ratio_form") != std::string::npos, "discrepancy not documented in README.md");
  s << "; documented in README.md";
#endif
  return l.outcome(s.str());
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Concatenation of every regular file below `dir`, names included, in sorted order.
std::string tree_contents(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::string all;
  for (const auto& f : files) all += std::filesystem::relative(f, dir).string() + '\n' + slurp(f);
  return all;
}

Outcome criterion_cli_determinism(const std::string& cli, const std::filesystem::path& workdir) {
  Ledger l;
  if (cli.empty()) {
    l.require(false, "no --cli given");
    return l.outcome("CLI determinism");
  }
  std::filesystem::remove_all(workdir);
  std::ostringstream s;
  double slowest = 0.0;
  for (int fig = 1; fig <= 6; ++fig) {
    const std::string preset = "fig" + std::to_string(fig);
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const auto dir = workdir / ("run" + std::to_string(run)) / preset;
      std::filesystem::create_directories(dir);
      const auto target = fig == 6 ? dir / "grids" : dir / (preset + ".csv");
      const std::string cmd = "PACAT_WORKERS=1 \"" + cli + "\" --preset " + preset + " --out \"" + target.string() + "\"";
      const auto start = std::chrono::steady_clock::now();
      const int status = std::system(cmd.c_str());
      const double seconds = elapsed_seconds(start);
      slowest = std::max(slowest, seconds);
      l.require(status == 0, preset + " exited with status " + std::to_string(status));
      l.require(seconds < 60.0, preset + " took " + std::to_string(seconds) + " s");
      outputs[run] = tree_contents(dir);
    }
    l.require(!outputs[0].empty(), preset + " produced no output");
    l.require(outputs[0] == outputs[1], preset + " outputs differ between runs");
  }
  s << "fig1..fig6 byte-identical across two runs, slowest run " << slowest << " s (budget 60 s)";
  return l.outcome(s.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  int only = 0;
  std::string cli;
  std::string workdir = (std::filesystem::temp_directory_path() / "pacat_acceptance").string();
  app.add_option("--only", only, "run a single criterion (1-11)");
  app.add_option("--cli", cli, "path to the pacat executable");
  app.add_option("--workdir", workdir, "scratch directory for CLI outputs");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", criterion_oracle_equivalence},
      {"displaced construction fidelity", criterion_displaced_construction},
      {"PMF completeness and parity", criterion_pmf_completeness_and_parity},
      {"Q baselines", criterion_q_baselines},
      {"first-order squeezing", criterion_first_order_squeezing},
      {"small-alpha variance m+3/4", criterion_small_alpha_variance},
      {"amplitude-squared squeezing", criterion_amplitude_squared},
      {"Wigner parity at origin", criterion_wigner_origin_parity},
      {"Wigner normalization, bound, negative volume", criterion_wigner_normalization},
      {"ratio-form Q discrepancy", criterion_ratio_form_discrepancy},
      {"CLI determinism", [&] { return criterion_cli_determinism(cli, workdir); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && only != id) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] C%d %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
