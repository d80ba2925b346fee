#include "pacat/serialization.hpp"

#include <cstdio>
#include <vector>

namespace pacat {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

nlohmann::json fock_state_to_json(const FockState& state) {
  std::vector<double> re(state.cutoff() + 1);
  std::vector<double> im(state.cutoff() + 1);
  for (int n = 0; n <= state.cutoff(); ++n) {
    re[n] = state[n].real();
    im[n] = state[n].imag();
  }
  return {{"cutoff", state.cutoff()}, {"re", re}, {"im", im}, {"tail_mass", state.tail_mass()}};
}

FockState fock_state_from_json(const nlohmann::json& j) {
  const int cutoff = j.at("cutoff").get<int>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (cutoff < 0 || re.size() != static_cast<std::size_t>(cutoff) + 1 || im.size() != re.size()) {
    throw DomainError("FockState JSON: amplitude arrays do not match the cutoff");
  }
  FockVector v(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) v[n] = cplx(re[n], im[n]);
  return {std::move(v), j.at("tail_mass").get<double>()};
}

void write_pmf_csv(std::ostream& out, const PhotonPMF& pmf) {
  out << "n,P\n";
  for (int n = 0; n <= pmf.n_max(); ++n) out << n << ',' << format_number(pmf.probabilities()[n]) << '\n';
}

void write_wigner_csv(std::ostream& out, const WignerGrid& grid) {
  const GridSpec& s = grid.spec;
  out << "x,p,w\n";
  for (int j = 0; j < s.np; ++j) {
    const std::string p = format_number(s.p(j));
    for (int i = 0; i < s.nx; ++i) {
      out << format_number(s.x(i)) << ',' << p << ',' << format_number(grid.values(j, i)) << '\n';
    }
  }
}

nlohmann::json wigner_to_json(const WignerGrid& grid) {
  const GridSpec& s = grid.spec;
  std::vector<double> xs(s.nx);
  std::vector<double> ps(s.np);
  for (int i = 0; i < s.nx; ++i) xs[i] = s.x(i);
  for (int j = 0; j < s.np; ++j) ps[j] = s.p(j);
  std::vector<std::vector<double>> w(s.np, std::vector<double>(s.nx));
  for (int j = 0; j < s.np; ++j)
    for (int i = 0; i < s.nx; ++i) w[j][i] = grid.values(j, i);
  return {{"x", xs}, {"p", ps}, {"w", w}};
}

}  // namespace pacat
