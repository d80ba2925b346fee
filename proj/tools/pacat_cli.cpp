// Command-line front end: parameter sweeps and figure presets as CSV/JSON.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pacat/parallel.hpp"
#include "pacat/sweep.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kBadArguments = 2,
  kDegenerate = 3,
  kCutoff = 4,
};

// "x0:x1:nx,p0:p1:np"
pacat::GridSpec parse_grid(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("grid must be x0:x1:nx,p0:p1:np");
  const auto xr = pacat::AxisRange::parse(text.substr(0, comma));
  const auto pr = pacat::AxisRange::parse(text.substr(comma + 1));
  return {xr.start, xr.stop, xr.count, pr.start, pr.stop, pr.count};
}

std::vector<double> times_pi(const std::vector<double>& v) {
  std::vector<double> out;
  for (double x : v) out.push_back(x * pacat::kPi);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photon-added cat states: photon statistics, squeezing and Wigner data"};

  std::string quantity;
  std::string preset;
  std::vector<double> alphas;
  std::string alpha_range;
  std::vector<double> phis;
  double varphi = 0.0;
  std::vector<int> ms;
  std::string theta_range;
  double theta = 0.0;
  std::string grid;
  double cutoff_tol = 1e-12;
  int n_max = -1;
  std::string method = "direct";
  std::string format = "csv";
  std::string out;
  bool minimize = false;

  app.add_option("--quantity", quantity, "pmf | q | quad_variance | amp2 | wigner | state");
  app.add_option("--preset", preset, "fig1 ... fig6");
  app.add_option("--alpha", alphas, "|alpha| (comma-separated list allowed)")->delimiter(',');
  app.add_option("--alpha-range", alpha_range, "a:b:n sweep over |alpha|");
  app.add_option("--phi", phis, "relative phase in units of pi (list allowed)")->delimiter(',');
  app.add_option("--varphi", varphi, "phase of alpha in units of pi");
  app.add_option("--m", ms, "added photons (list allowed)")->delimiter(',');
  app.add_option("--theta-range", theta_range, "a:b:n sweep over theta, units of pi");
  auto* theta_opt = app.add_option("--theta", theta, "fixed quadrature angle, units of pi");
  app.add_option("--grid", grid, "x0:x1:nx,p0:p1:np Wigner grid");
  auto* tol_opt = app.add_option("--cutoff-tol", cutoff_tol, "Fock-space tail tolerance");
  auto* nmax_opt = app.add_option("--n-max", n_max, "largest photon number / state cutoff");
  app.add_option("--method", method, "state construction: direct | displaced")
      ->check(CLI::IsMember({"direct", "displaced"}));
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out, "output file (directory for several grids); stdout if omitted");
  app.add_flag("--minimize", minimize, "tabulate the minimum over theta instead of a fixed angle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArguments;
  }

  try {
    pacat::SweepSpec spec;
    if (!preset.empty()) spec = pacat::preset_spec(preset);
    if (!quantity.empty()) spec.quantity = pacat::parse_quantity(quantity);
    else if (preset.empty()) throw std::invalid_argument("one of --quantity or --preset is required");

    if (!alphas.empty()) spec.alphas = alphas;
    if (!alpha_range.empty()) spec.alpha_range = pacat::AxisRange::parse(alpha_range);
    if (!phis.empty()) spec.phis = times_pi(phis);
    if (app.count("--varphi")) spec.varphi = varphi * pacat::kPi;
    if (!ms.empty()) spec.ms = ms;
    if (!theta_range.empty()) spec.theta_range = pacat::AxisRange::parse(theta_range).scaled(pacat::kPi);
    if (theta_opt->count()) spec.theta = theta * pacat::kPi;
    if (!grid.empty()) spec.grid = parse_grid(grid);
    if (tol_opt->count()) spec.cutoff_tol = cutoff_tol;
    if (nmax_opt->count()) spec.n_max = n_max;
    if (minimize) spec.minimize = true;
    spec.method = method == "displaced" ? pacat::Construction::displaced : pacat::Construction::direct;
    spec.format = format == "json" ? pacat::OutputFormat::json : pacat::OutputFormat::csv;
    spec.output_path = out;
    spec.workers = pacat::default_worker_count();

    std::ostringstream buffer;
    pacat::execute(spec, buffer);
    std::cout << buffer.str();
    return kOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const pacat::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const pacat::VanishingNormError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const pacat::CutoffTooSmallError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCutoff;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
