#include "qse/io.hpp"

#include <cstdio>

#include "json.hpp"

namespace qse {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i)
    os << header[i] << (i + 1 < header.size() ? "," : "\n");
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << format_double(row[i]) << (i + 1 < row.size() ? "," : "\n");
  }
}

void write_grid_csv(std::ostream& os, const GridResult& g) {
  os << "x,p,value\n";
  for (std::size_t ix = 0; ix < g.xs.size(); ++ix)
    for (std::size_t ip = 0; ip < g.ps.size(); ++ip)
      os << format_double(g.xs[ix]) << ',' << format_double(g.ps[ip]) << ','
         << format_double(g.values[ix * g.ps.size() + ip]) << '\n';
}

void write_curve_csv(std::ostream& os, const std::string& xname,
                     const std::string& yname, const std::vector<double>& xs,
                     const std::vector<double>& ys) {
  os << xname << ',' << yname << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << format_double(xs[i]) << ',' << format_double(ys[i]) << '\n';
}

std::string fockvector_to_json(const FockVector& v) {
  nlohmann::json j;
  j["dim"] = v.dim();
  auto& amps = j["amps"] = nlohmann::json::array();
  for (const auto& a : v.amps) amps.push_back({a.real(), a.imag()});
  j["normalized"] = v.normalized;
  return j.dump(2);
}

FockVector fockvector_from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const int dim = j.at("dim").get<int>();
  FockVector v(dim);
  const auto& amps = j.at("amps");
  if (static_cast<int>(amps.size()) != dim)
    throw std::runtime_error("fockvector_from_json: dim/amps mismatch");
  for (int k = 0; k < dim; ++k)
    v[k] = cdouble(amps[static_cast<std::size_t>(k)][0].get<double>(),
                   amps[static_cast<std::size_t>(k)][1].get<double>());
  v.normalized = j.value("normalized", false);
  return v;
}

std::string photon_stats_to_json(const PhotonStats& st) {
  nlohmann::json j;
  j["distribution"] = st.distribution;
  j["mean"] = st.mean;
  j["second_moment"] = st.second_moment;
  j["mandel_q"] = st.mandel_q;
  return j.dump(2);
}

std::string grid_to_json(const GridResult& g) {
  nlohmann::json j;
  j["x"] = g.xs;
  j["p"] = g.ps;
  j["values"] = g.values;  // row-major in x
  return j.dump();
}

std::string curve_to_json(const std::string& xname, const std::string& yname,
                          const std::vector<double>& xs,
                          const std::vector<double>& ys) {
  nlohmann::json j;
  j[xname] = xs;
  j[yname] = ys;
  return j.dump(2);
}

}  // namespace qse
