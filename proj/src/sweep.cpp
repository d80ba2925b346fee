#include "pacat/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "pacat/parallel.hpp"
#include "pacat/serialization.hpp"
#include "pacat/squeezing.hpp"
#include "pacat/statistics.hpp"

namespace pacat {

namespace {

struct Series {
  double alpha;
  int m;
  double phi;
  std::string label;
};

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<Series> make_series(const SweepSpec& spec, const std::string& prefix, bool per_alpha) {
  const std::vector<double> alphas = per_alpha ? spec.alphas : std::vector<double>{0.0};
  std::vector<Series> out;
  for (double alpha : alphas) {
    for (int m : spec.ms) {
      for (double phi : spec.phis) {
        std::string label = prefix;
        if (per_alpha && spec.alphas.size() > 1) label += "_alpha" + short_number(alpha);
        label += "_m" + std::to_string(m) + "_phi" + short_number(phi / kPi);
        out.push_back({alpha, m, phi, std::move(label)});
      }
    }
  }
  return out;
}

std::vector<double> alpha_axis(const SweepSpec& spec) {
  return spec.alpha_range ? spec.alpha_range->values() : spec.alphas;
}

CatParams params_for(const SweepSpec& spec, double alpha, int m, double phi) {
  return {alpha, spec.varphi, phi, m};
}

using Cell = std::function<std::optional<double>(double axis_value, const Series&)>;

SweepTable tabulate(const SweepSpec& spec, const std::string& axis_name, const std::vector<double>& axis,
                    const std::vector<Series>& series, const Cell& cell) {
  SweepTable table;
  table.columns.push_back(axis_name);
  for (const auto& s : series) table.columns.push_back(s.label);
  table.rows.assign(axis.size(), std::vector<std::optional<double>>(series.size() + 1));
  parallel_for(static_cast<int>(axis.size()), spec.workers, [&](int r) {
    auto& row = table.rows[r];
    row[0] = axis[r];
    for (std::size_t c = 0; c < series.size(); ++c) row[c + 1] = cell(axis[r], series[c]);
  });
  return table;
}

void write_text_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  writer(file);
  if (!file) throw std::runtime_error("failed writing " + path);
}

}  // namespace

Quantity parse_quantity(std::string_view name) {
  if (name == "pmf") return Quantity::pmf;
  if (name == "q") return Quantity::q;
  if (name == "quad_variance") return Quantity::quad_variance;
  if (name == "amp2") return Quantity::amp2;
  if (name == "wigner") return Quantity::wigner;
  if (name == "state") return Quantity::state;
  throw std::invalid_argument("unknown quantity '" + std::string(name) + "'");
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::pmf: return "pmf";
    case Quantity::q: return "q";
    case Quantity::quad_variance: return "quad_variance";
    case Quantity::amp2: return "amp2";
    case Quantity::wigner: return "wigner";
    case Quantity::state: return "state";
  }
  return "?";
}

AxisRange AxisRange::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t colon = text.find(':', begin);
    parts.push_back(text.substr(begin, colon == std::string_view::npos ? std::string_view::npos : colon - begin));
    if (colon == std::string_view::npos) break;
    begin = colon + 1;
  }
  if (parts.size() != 3) throw std::invalid_argument("range must be start:stop:count, got '" + std::string(text) + "'");
  AxisRange r{};
  try {
    std::size_t used = 0;
    r.start = std::stod(std::string(parts[0]), &used);
    if (used != parts[0].size()) throw std::invalid_argument("start");
    r.stop = std::stod(std::string(parts[1]), &used);
    if (used != parts[1].size()) throw std::invalid_argument("stop");
    r.count = std::stoi(std::string(parts[2]), &used);
    if (used != parts[2].size()) throw std::invalid_argument("count");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed range '" + std::string(text) + "'");
  }
  if (r.count < 1) throw std::invalid_argument("range count must be at least 1");
  if (r.start > r.stop) throw std::invalid_argument("range start must not exceed stop");
  return r;
}

std::vector<double> AxisRange::values() const {
  if (count == 1) return {start};
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = start + (stop - start) * i / (count - 1);
  v.back() = stop;
  return v;
}

void SweepSpec::validate() const {
  if (alphas.empty() || phis.empty() || ms.empty()) throw std::invalid_argument("alpha, phi and m lists must be non-empty");
  for (double a : alphas)
    if (!(a >= 0.0 && std::isfinite(a))) throw std::invalid_argument("alpha must be a finite non-negative number");
  for (int m : ms)
    if (m < 0) throw std::invalid_argument("m must be non-negative");
  for (const auto* r : {&alpha_range, &theta_range}) {
    if (*r && (r->value().count < 1 || r->value().start > r->value().stop)) {
      throw std::invalid_argument("ranges need count >= 1 and start <= stop");
    }
  }
  if (alpha_range && alpha_range->start < 0.0) throw std::invalid_argument("alpha range must be non-negative");
  if (grid) grid->validate();
  if (!(cutoff_tol > 0.0 && cutoff_tol < 1.0)) throw std::invalid_argument("cutoff tolerance must lie in (0, 1)");
  if (n_max && *n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  if (workers < 1) throw std::invalid_argument("worker count must be positive");
}

SweepSpec preset_spec(std::string_view name) {
  const std::vector<double> five_phases{0.0, 0.25 * kPi, 0.5 * kPi, 0.75 * kPi, kPi};
  SweepSpec s;
  s.preset = std::string(name);
  s.ms = {0, 1, 2};
  if (name == "fig1") {
    s.quantity = Quantity::pmf;
    s.alphas = {1.0};
    s.phis = {0.0, 0.5 * kPi, kPi};
  } else if (name == "fig2") {
    s.quantity = Quantity::q;
    s.alpha_range = AxisRange{0.1, 4.0, 40};
    s.phis = five_phases;
  } else if (name == "fig3") {
    s.quantity = Quantity::quad_variance;
    s.alpha_range = AxisRange{0.05, 4.0, 80};
    s.phis = five_phases;
  } else if (name == "fig4") {
    s.quantity = Quantity::quad_variance;
    s.alphas = {0.25};
    s.theta_range = AxisRange{0.0, kPi, 181};
    s.phis = five_phases;
  } else if (name == "fig5") {
    s.quantity = Quantity::amp2;
    s.alpha_range = AxisRange{0.05, 3.0, 60};
    s.phis = five_phases;
  } else if (name == "fig6") {
    s.quantity = Quantity::wigner;
    s.alphas = {0.25, 2.0};
    s.phis = {0.5 * kPi};
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  }
  return s;
}

void write_csv(std::ostream& out, const SweepTable& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      if (row[c]) out << format_number(*row[c]);
    }
    out << '\n';
  }
}

nlohmann::json table_to_json(const SweepTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) r.push_back(cell ? nlohmann::json(*cell) : nlohmann::json(nullptr));
    rows.push_back(std::move(r));
  }
  return {{"columns", table.columns}, {"rows", std::move(rows)}};
}

SweepTable run_pmf(const SweepSpec& spec) {
  spec.validate();
  const auto series = make_series(spec, "P", true);
  int n_max = 0;
  if (spec.n_max) {
    n_max = *spec.n_max;
  } else {
    for (const auto& s : series) n_max = std::max(n_max, choose_cutoff(params_for(spec, s.alpha, s.m, s.phi), spec.cutoff_tol));
  }
  std::vector<double> axis(n_max + 1);
  for (int n = 0; n <= n_max; ++n) axis[n] = n;
  return tabulate(spec, "n", axis, series, [&](double n, const Series& s) -> std::optional<double> {
    return photon_probability(params_for(spec, s.alpha, s.m, s.phi), static_cast<int>(n));
  });
}

SweepTable run_q_sweep(const SweepSpec& spec) {
  spec.validate();
  return tabulate(spec, "alpha", alpha_axis(spec), make_series(spec, "Q", false),
                  [&](double alpha, const Series& s) -> std::optional<double> {
                    try {
                      return q_parameter(params_for(spec, alpha, s.m, s.phi));
                    } catch (const UndefinedStatisticError&) {
                      return std::nullopt;
                    }
                  });
}

SweepTable run_quadrature_sweep(const SweepSpec& spec) {
  spec.validate();
  if (spec.minimize) {
    return tabulate(spec, "alpha", alpha_axis(spec), make_series(spec, "variance_min", false),
                    [&](double alpha, const Series& s) -> std::optional<double> {
                      return min_quadrature_variance(params_for(spec, alpha, s.m, s.phi)).optimal_value;
                    });
  }
  if (spec.theta_range) {
    return tabulate(spec, "theta", spec.theta_range->values(), make_series(spec, "variance", true),
                    [&](double theta, const Series& s) -> std::optional<double> {
                      return quadrature_variance(params_for(spec, s.alpha, s.m, s.phi), theta).variance;
                    });
  }
  // Squeezed rotation θ + ϑ = π/2 unless θ is given.
  const double theta = spec.theta.value_or(0.5 * kPi - spec.varphi);
  return tabulate(spec, "alpha", alpha_axis(spec), make_series(spec, "variance", false),
                  [&](double alpha, const Series& s) -> std::optional<double> {
                    return quadrature_variance(params_for(spec, alpha, s.m, s.phi), theta).variance;
                  });
}

SweepTable run_amp2_sweep(const SweepSpec& spec) {
  spec.validate();
  if (spec.minimize) {
    return tabulate(spec, "alpha", alpha_axis(spec), make_series(spec, "Y_min", false),
                    [&](double alpha, const Series& s) -> std::optional<double> {
                      return min_amplitude_squared_squeezing(params_for(spec, alpha, s.m, s.phi)).optimal_value;
                    });
  }
  if (spec.theta_range) {
    return tabulate(spec, "theta", spec.theta_range->values(), make_series(spec, "Y", true),
                    [&](double theta, const Series& s) -> std::optional<double> {
                      return amplitude_squared_squeezing(params_for(spec, s.alpha, s.m, s.phi), theta);
                    });
  }
  const double theta = spec.theta.value_or(-2.0 * spec.varphi);
  return tabulate(spec, "alpha", alpha_axis(spec), make_series(spec, "Y", false),
                  [&](double alpha, const Series& s) -> std::optional<double> {
                    return amplitude_squared_squeezing(params_for(spec, alpha, s.m, s.phi), theta);
                  });
}

std::vector<LabeledGrid> run_wigner(const SweepSpec& spec) {
  spec.validate();
  std::vector<LabeledGrid> out;
  for (const auto& s : make_series(spec, "wigner", true)) {
    const CatParams params = params_for(spec, s.alpha, s.m, s.phi);
    const GridSpec grid = spec.grid.value_or(GridSpec::default_for(params));
    std::string label = "wigner_alpha" + short_number(s.alpha) + s.label.substr(s.label.find("_m"));
    out.push_back({std::move(label), params, wigner_grid(params, grid, spec.workers)});
  }
  return out;
}

nlohmann::json run_state_dump(const SweepSpec& spec) {
  spec.validate();
  const CatParams params = params_for(spec, spec.alphas.front(), spec.ms.front(), spec.phis.front());
  const int cutoff = spec.n_max.value_or(choose_cutoff(params, spec.cutoff_tol));
  const FockState state = spec.method == Construction::direct ? build_fock_direct(params, cutoff, spec.cutoff_tol)
                                                              : build_fock_displaced(params, cutoff, spec.cutoff_tol);
  nlohmann::json j = fock_state_to_json(state);
  j["params"] = {{"alpha_mag", params.alpha_mag()},
                 {"alpha_phase", params.alpha_phase()},
                 {"rel_phase", params.rel_phase()},
                 {"m", params.m()}};
  j["method"] = spec.method == Construction::direct ? "direct" : "displaced";
  return j;
}

void execute(const SweepSpec& spec, std::ostream& standard_output) {
  spec.validate();
  const bool json = spec.format == OutputFormat::json;

  auto emit = [&](const std::function<void(std::ostream&)>& writer) {
    if (spec.output_path.empty()) writer(standard_output);
    else write_text_file(spec.output_path, writer);
  };

  if (spec.quantity == Quantity::wigner) {
    const auto grids = run_wigner(spec);
    auto writer_for = [&](const WignerGrid& g) {
      return [&g, json](std::ostream& out) {
        if (json) out << wigner_to_json(g).dump() << '\n';
        else write_wigner_csv(out, g);
      };
    };
    if (grids.size() == 1) {
      emit(writer_for(grids.front().grid));
      return;
    }
    if (spec.output_path.empty()) throw std::invalid_argument("several Wigner grids need --out to name a directory");
    std::filesystem::create_directories(spec.output_path);
    for (const auto& g : grids) {
      const auto path = std::filesystem::path(spec.output_path) / (g.label + (json ? ".json" : ".csv"));
      write_text_file(path.string(), writer_for(g.grid));
    }
    return;
  }

  if (spec.quantity == Quantity::state) {
    const auto j = run_state_dump(spec);
    emit([&](std::ostream& out) { out << j.dump(2) << '\n'; });
    return;
  }

  SweepTable table;
  switch (spec.quantity) {
    case Quantity::pmf: table = run_pmf(spec); break;
    case Quantity::q: table = run_q_sweep(spec); break;
    case Quantity::quad_variance: table = run_quadrature_sweep(spec); break;
    case Quantity::amp2: table = run_amp2_sweep(spec); break;
    default: break;
  }
  emit([&](std::ostream& out) {
    if (json) out << table_to_json(table).dump() << '\n';
    else write_csv(out, table);
  });
}

}  // namespace pacat
