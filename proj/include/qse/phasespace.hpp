#ifndef QSE_PHASESPACE_HPP
#define QSE_PHASESPACE_HPP

#include <vector>

#include "qse/exec.hpp"
#include "qse/jpstates.hpp"

namespace qse {

/// Phase-space point with alpha = (x + i p) / sqrt(2); vacuum quadrature
/// variance is 1/2 in this convention.
struct PhasePoint {
  double x = 0.0;
  double p = 0.0;
  cdouble alpha() const { return cdouble(x, p) / std::sqrt(2.0); }
};

/// Homodyne settings: local-oscillator phase and the x sample points.
struct QuadratureSpec {
  double phi = 0.0;
  std::vector<double> grid;

  void validate() const;
};

/// Uniform grid helper (inclusive endpoints).
std::vector<double> linspace(double lo, double hi, int count);

// ---- generic evaluators (the oracles) ------------------------------------

/// p(x, phi) for an arbitrary state, from the normalized Hermite-function
/// recurrence. Grid points beyond |x| = 40 are rejected.
std::vector<double> quadrature_dist_numeric(const FockVector& v,
                                            const QuadratureSpec& spec,
                                            Exec exec = Exec::Parallel);

double quadrature_point_numeric(const FockVector& v, double x, double phi);

/// Q(x, p) = |<alpha|v>|^2 / (2 pi).
double husimi_numeric(const FockVector& v, const PhasePoint& pt);

/// W(x, p) from the exact number-basis kernel, log-magnitude Laguerre form.
double wigner_numeric(const FockVector& v, const PhasePoint& pt);

// ---- coherent-input closed forms ------------------------------------------

std::vector<double> quadrature_dist_closed_coherent(
    const CoherentParams& beta, const ConditionalIndices& idx,
    const BeamSplitterParams& bs, const QuadratureSpec& spec,
    Exec exec = Exec::Parallel);

double quadrature_point_closed_coherent(const CoherentParams& beta,
                                        const ConditionalIndices& idx,
                                        const BeamSplitterParams& bs, double x,
                                        double phi);

double husimi_closed_coherent(const CoherentParams& beta,
                              const ConditionalIndices& idx,
                              const BeamSplitterParams& bs,
                              const PhasePoint& pt);

double wigner_closed_coherent(const CoherentParams& beta,
                              const ConditionalIndices& idx,
                              const BeamSplitterParams& bs,
                              const PhasePoint& pt);

// ---- grid drivers ---------------------------------------------------------

/// Row-major values[ix * ps.size() + ip] over the (x, p) product grid.
struct GridResult {
  std::vector<double> xs;
  std::vector<double> ps;
  std::vector<double> values;

  double at(int ix, int ip) const {
    return values[static_cast<std::size_t>(ix) * ps.size() + ip];
  }
  double min_value() const;
  double max_value() const;
};

GridResult wigner_grid(const FockVector& v, std::vector<double> xs,
                       std::vector<double> ps, Exec exec = Exec::Parallel);
GridResult husimi_grid(const FockVector& v, std::vector<double> xs,
                       std::vector<double> ps, Exec exec = Exec::Parallel);
GridResult wigner_grid_closed_coherent(const CoherentParams& beta,
                                       const ConditionalIndices& idx,
                                       const BeamSplitterParams& bs,
                                       std::vector<double> xs,
                                       std::vector<double> ps,
                                       Exec exec = Exec::Parallel);
GridResult husimi_grid_closed_coherent(const CoherentParams& beta,
                                       const ConditionalIndices& idx,
                                       const BeamSplitterParams& bs,
                                       std::vector<double> xs,
                                       std::vector<double> ps,
                                       Exec exec = Exec::Parallel);

/// Trapezoid integral over the grid.
double grid_integral(const GridResult& g);

/// Integrates out p at each x (trapezoid); the phi = 0 quadrature marginal.
std::vector<double> p_marginal(const GridResult& g);

}  // namespace qse

#endif
