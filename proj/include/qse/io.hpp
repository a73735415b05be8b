#ifndef QSE_IO_HPP
#define QSE_IO_HPP

#include <ostream>
#include <string>
#include <vector>

#include "qse/detection.hpp"
#include "qse/statistics.hpp"

namespace qse {

/// Floats at 17 significant digits so files round-trip exactly.
std::string format_double(double v);

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// Grid as CSV rows x, p, value.
void write_grid_csv(std::ostream& os, const GridResult& g);

/// Curve as CSV rows xname, yname.
void write_curve_csv(std::ostream& os, const std::string& xname,
                     const std::string& yname, const std::vector<double>& xs,
                     const std::vector<double>& ys);

// JSON text (pretty-printed); FockVector round-trips through
// {dim, amps: [[re, im], ...], normalized}.
std::string fockvector_to_json(const FockVector& v);
FockVector fockvector_from_json_text(const std::string& text);

std::string photon_stats_to_json(const PhotonStats& st);
std::string grid_to_json(const GridResult& g);
std::string curve_to_json(const std::string& xname, const std::string& yname,
                          const std::vector<double>& xs,
                          const std::vector<double>& ys);

}  // namespace qse

#endif
