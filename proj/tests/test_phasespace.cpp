#include "doctest.h"
#include "qse/phasespace.hpp"

#include <cmath>
#include <numbers>

using namespace qse;

namespace {

constexpr double kPi = std::numbers::pi;
const BeamSplitterParams kBs = BeamSplitterParams::from_t2(0.81);
const double kBeta = 2.3;

FockVector conditional(int n, int m) {
  const auto in = coherent_state({kBeta}, adaptive_dim(kBeta, n, m));
  return jp_state_general(in, ConditionalIndices(n, m), kBs).state;
}

// Direct y-integration of the Wigner transform; slow cross-check used only
// here. Simpson rule on a wide fixed window.
double wigner_by_integration(const FockVector& v, double x, double p) {
  const double half = 9.0;
  const int steps = 3600;
  const double h = 2.0 * half / steps;
  auto wavefn = [&](double q) {
    const int d = v.dim();
    std::vector<double> hseq(static_cast<std::size_t>(d));
    hermite_normalized_sequence(d - 1, q, hseq.data());
    cdouble s = 0.0;
    for (int k = 0; k < d; ++k) s += v[k] * hseq[static_cast<std::size_t>(k)];
    return std::pow(kPi, -0.25) * std::exp(-0.5 * q * q) * s;
  };
  cdouble acc = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double y = -half + i * h;
    const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * std::exp(cdouble(0.0, 2.0 * p * y)) * wavefn(x - y) *
           std::conj(wavefn(x + y));
  }
  return (acc * (h / 3.0) / kPi).real();
}

}  // namespace

TEST_CASE("quadrature distribution of simple states") {
  QuadratureSpec spec;
  spec.grid = linspace(-6.0, 6.0, 241);
  const auto vac = fock_state(0, 4);
  const auto pv = quadrature_dist_numeric(vac, spec);
  // ground-state Gaussian peaks at 1/sqrt(pi)
  double peak = 0.0;
  for (double v : pv) peak = std::max(peak, v);
  CHECK(peak == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-4));
  CHECK(quadrature_point_numeric(vac, 0.0, 0.3) ==
        doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-12));

  // coherent state: displaced Gaussian centred at sqrt(2) beta
  const double b = 1.3;
  const auto coh = coherent_state({b}, 40);
  const double at_center =
      quadrature_point_numeric(coh, std::sqrt(2.0) * b, 0.0);
  CHECK(at_center == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-9));

  // normalization on an adequate window
  double integral = 0.0;
  const auto dist = quadrature_dist_numeric(coh, spec);
  for (std::size_t i = 0; i + 1 < spec.grid.size(); ++i)
    integral += 0.5 * (dist[i] + dist[i + 1]) * (spec.grid[i + 1] - spec.grid[i]);
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-8));

  QuadratureSpec bad;
  bad.grid = {0.0, 50.0};
  CHECK_THROWS_AS(quadrature_dist_numeric(vac, bad), std::domain_error);
}

TEST_CASE("closed quadrature distribution matches the generic evaluator") {
  for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 2}}) {
    const auto st = conditional(n, m);
    QuadratureSpec spec;
    spec.grid = linspace(-6.0, 6.0, 121);
    for (double phi : {0.0, 0.7, 2.0}) {
      spec.phi = phi;
      const auto closed = quadrature_dist_closed_coherent(
          {kBeta}, ConditionalIndices(n, m), kBs, spec);
      const auto numeric = quadrature_dist_numeric(st, spec);
      for (std::size_t i = 0; i < closed.size(); ++i)
        CHECK(std::abs(closed[i] - numeric[i]) < 1e-8);
    }
  }
  // 2 pi periodicity in the local-oscillator phase
  const double v1 =
      quadrature_point_closed_coherent({kBeta}, ConditionalIndices(2, 3), kBs, 0.83, 0.4);
  const double v2 = quadrature_point_closed_coherent(
      {kBeta}, ConditionalIndices(2, 3), kBs, 0.83, 0.4 + 2.0 * kPi);
  CHECK(v1 == doctest::Approx(v2).epsilon(1e-12));
}

TEST_CASE("husimi: bound, coherent peak, closed form vs overlap") {
  const PhasePoint center{std::sqrt(2.0) * (kBs.T() * kBeta).real(),
                          std::sqrt(2.0) * (kBs.T() * kBeta).imag()};
  CHECK(husimi_closed_coherent({kBeta}, ConditionalIndices(0, 0), kBs, center) ==
        doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-9));

  for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 2}}) {
    const auto st = conditional(n, m);
    const auto xs = linspace(-6.0, 6.0, 41);
    double peak = 0.0;
    for (double x : xs)
      for (double p : xs) {
        const PhasePoint pt{x, p};
        const double closed =
            husimi_closed_coherent({kBeta}, ConditionalIndices(n, m), kBs, pt);
        const double numeric = husimi_numeric(st, pt);
        CHECK(std::abs(closed - numeric) < 1e-10);
        CHECK(closed >= 0.0);
        peak = std::max(peak, closed);
      }
    CHECK(peak <= 1.0 / (2.0 * kPi) + 1e-9);
  }
}

TEST_CASE("wigner generic evaluator on reference states") {
  CHECK(wigner_numeric(fock_state(1, 4), {0.0, 0.0}) ==
        doctest::Approx(-1.0 / kPi).epsilon(1e-12));
  const auto vac = fock_state(0, 4);
  CHECK(wigner_numeric(vac, {0.7, -0.2}) ==
        doctest::Approx(std::exp(-(0.49 + 0.04)) / kPi).epsilon(1e-12));
}

TEST_CASE("wigner closed form matches the kernel evaluator and is negative for the added state") {
  for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 2}}) {
    const auto st = conditional(n, m);
    const auto xs = linspace(-6.0, 6.0, 31);
    double minval = 0.0;
    for (double x : xs)
      for (double p : xs) {
        const PhasePoint pt{x, p};
        const double closed =
            wigner_closed_coherent({kBeta}, ConditionalIndices(n, m), kBs, pt);
        const double numeric = wigner_numeric(st, pt);
        CHECK(std::abs(closed - numeric) < 1e-8);
        minval = std::min(minval, closed);
      }
    CHECK(minval < 0.0);
  }
}

TEST_CASE("wigner kernel agrees with direct integration at spot points") {
  const auto st = conditional(2, 3);
  for (auto [x, p] : {std::pair{0.5, -0.3}, std::pair{2.9, 0.0}}) {
    CHECK(wigner_numeric(st, {x, p}) ==
          doctest::Approx(wigner_by_integration(st, x, p)).epsilon(1e-7));
  }
  const auto sv = squeezed_vacuum({0.6}, 60);
  CHECK(wigner_numeric(sv, {0.4, 0.8}) ==
        doctest::Approx(wigner_by_integration(sv, 0.4, 0.8)).epsilon(1e-7));
}

TEST_CASE("wigner integral, marginal, and gaussian smoothing to husimi") {
  const auto st = conditional(2, 3);
  const auto xs = linspace(-7.0, 13.0, 401);
  const auto ps = linspace(-10.0, 10.0, 401);
  const auto g = wigner_grid(st, xs, ps);
  CHECK(grid_integral(g) == doctest::Approx(1.0).epsilon(1e-6));

  const auto marg = p_marginal(g);
  QuadratureSpec spec;
  spec.grid = xs;
  const auto qd = quadrature_dist_numeric(st, spec);
  for (std::size_t i = 0; i < marg.size(); ++i)
    CHECK(std::abs(marg[i] - qd[i]) < 1e-6);

  // smoothing with the vacuum Gaussian reproduces the Husimi function
  for (auto [x0, p0] : {std::pair{2.9, 0.0}, std::pair{1.0, 1.5}}) {
    double acc = 0.0;
    for (std::size_t ix = 0; ix + 1 < xs.size(); ++ix)
      for (std::size_t ip = 0; ip + 1 < ps.size(); ++ip) {
        const double x = 0.5 * (xs[ix] + xs[ix + 1]);
        const double p = 0.5 * (ps[ip] + ps[ip + 1]);
        const double w = 0.25 * (g.at(static_cast<int>(ix), static_cast<int>(ip)) +
                                 g.at(static_cast<int>(ix) + 1, static_cast<int>(ip)) +
                                 g.at(static_cast<int>(ix), static_cast<int>(ip) + 1) +
                                 g.at(static_cast<int>(ix) + 1, static_cast<int>(ip) + 1));
        acc += w * std::exp(-((x - x0) * (x - x0) + (p - p0) * (p - p0))) *
               (xs[ix + 1] - xs[ix]) * (ps[ip + 1] - ps[ip]);
      }
    acc /= kPi;
    CHECK(std::abs(acc - husimi_numeric(st, {x0, p0})) < 2e-4);
  }
}

TEST_CASE("nonclassicality ordering at the reference parameters") {
  const auto subtracted = conditional(2, 3);
  const auto added = conditional(3, 2);
  const auto xs = linspace(-6.0, 6.0, 121);
  const auto gsub = wigner_grid(subtracted, xs, xs);
  const auto gadd = wigner_grid(added, xs, xs);
  CHECK(gadd.min_value() < gsub.min_value());
  CHECK(gsub.min_value() < 0.0);

  const auto hsub = husimi_grid(subtracted, xs, xs);
  const auto hadd = husimi_grid(added, xs, xs);
  CHECK(hsub.max_value() > hadd.max_value());
  CHECK(hsub.max_value() <= 1.0 / (2.0 * kPi) + 1e-9);
}

TEST_CASE("serial and parallel grid evaluation agree bitwise") {
  const auto st = conditional(3, 2);
  const auto xs = linspace(-4.0, 4.0, 41);
  const auto gs = wigner_grid(st, xs, xs, Exec::Serial);
  const auto gp = wigner_grid(st, xs, xs, Exec::Parallel);
  for (std::size_t i = 0; i < gs.values.size(); ++i)
    CHECK(gs.values[i] == gp.values[i]);

  QuadratureSpec spec;
  spec.grid = xs;
  const auto qs = quadrature_dist_numeric(st, spec, Exec::Serial);
  const auto qp = quadrature_dist_numeric(st, spec, Exec::Parallel);
  for (std::size_t i = 0; i < qs.size(); ++i) CHECK(qs[i] == qp[i]);
}
