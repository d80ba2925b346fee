#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "pacat/state.hpp"
#include "pacat/statistics.hpp"
#include "pacat/wigner.hpp"

namespace pacat {

/// 17 significant digits, "%.17g".
std::string format_number(double value);

/// {"cutoff": N, "re": [...], "im": [...], "tail_mass": t}
nlohmann::json fock_state_to_json(const FockState& state);
FockState fock_state_from_json(const nlohmann::json& j);

/// Header "n,P", one row per n.
void write_pmf_csv(std::ostream& out, const PhotonPMF& pmf);

/// Header "x,p,w"; rows ordered p-major, x fastest.
void write_wigner_csv(std::ostream& out, const WignerGrid& grid);

/// {"x": [...], "p": [...], "w": [[...]]} with w[j][i] = W(x_i, p_j).
nlohmann::json wigner_to_json(const WignerGrid& grid);

}  // namespace pacat
