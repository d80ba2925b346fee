#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pacat/state.hpp"
#include "pacat/wigner.hpp"

namespace pacat {

enum class Quantity { pmf, q, quad_variance, amp2, wigner, state };
enum class OutputFormat { csv, json };
enum class Construction { direct, displaced };

Quantity parse_quantity(std::string_view name);
std::string_view to_string(Quantity q);

/// Inclusive linear range; count = 1 yields {start}.
struct AxisRange {
  double start;
  double stop;
  int count;

  /// Parses "start:stop:count".
  static AxisRange parse(std::string_view text);
  std::vector<double> values() const;
  AxisRange scaled(double factor) const { return {start * factor, stop * factor, count}; }
};

/// Everything a sweep needs. Angles are stored in radians.
struct SweepSpec {
  Quantity quantity = Quantity::pmf;
  std::string preset;
  std::vector<double> alphas{1.0};
  std::optional<AxisRange> alpha_range;
  std::vector<double> phis{0.0};
  double varphi = 0.0;
  std::vector<int> ms{0};
  std::optional<AxisRange> theta_range;
  std::optional<double> theta;
  bool minimize = false;
  std::optional<GridSpec> grid;
  double cutoff_tol = 1e-12;
  std::optional<int> n_max;
  Construction method = Construction::direct;
  OutputFormat format = OutputFormat::csv;
  std::string output_path;
  int workers = 1;

  void validate() const;
};

/// Parameter bundles behind the figure data: fig1 … fig6.
SweepSpec preset_spec(std::string_view name);

/// Rectangular table; a missing cell is an undefined statistic.
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
};

/// Header row, LF endings, 17 significant digits, empty cell for missing.
void write_csv(std::ostream& out, const SweepTable& table);
/// {"columns": [...], "rows": [[...]]}, null for missing.
nlohmann::json table_to_json(const SweepTable& table);

SweepTable run_pmf(const SweepSpec& spec);
SweepTable run_q_sweep(const SweepSpec& spec);
SweepTable run_quadrature_sweep(const SweepSpec& spec);
SweepTable run_amp2_sweep(const SweepSpec& spec);

struct LabeledGrid {
  std::string label;
  CatParams params;
  WignerGrid grid;
};
std::vector<LabeledGrid> run_wigner(const SweepSpec& spec);

/// FockState JSON plus "params" and "method".
nlohmann::json run_state_dump(const SweepSpec& spec);

/// Runs the spec and writes its output to spec.output_path (standard output
/// when empty). Several Wigner grids need output_path to name a directory.
void execute(const SweepSpec& spec, std::ostream& standard_output);

}  // namespace pacat
