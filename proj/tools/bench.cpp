// Timing comparison between the serial reference evaluators and the
// OpenMP-parallel grid kernels on representative workloads.

#include <chrono>
#include <cstring>
#include <iostream>

#include "qse/detection.hpp"
#include "qse/io.hpp"

using namespace qse;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Case {
  std::string name;
  double serial = 0.0;
  double parallel = 0.0;
};

template <class F>
double time_once(F&& f) {
  const auto t0 = clock_type::now();
  f();
  return seconds_since(t0);
}

void report(const Case& c) {
  std::cout << c.name << ": serial " << c.serial << " s, parallel "
            << c.parallel << " s, speedup "
            << (c.parallel > 0 ? c.serial / c.parallel : 0.0) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  const int grid_n = quick ? 41 : 201;
  const auto bs = BeamSplitterParams::from_t2(0.81);
  const FockVector input = coherent_state({2.3}, adaptive_dim(2.3, 3, 3));
  const FockVector st =
      jp_state_general(input, ConditionalIndices(3, 2), bs).state;
  const auto xs = linspace(-6.0, 6.0, grid_n);
  const auto ps = linspace(-6.0, 6.0, grid_n);

  {
    Case c{"wigner_grid " + std::to_string(grid_n) + "^2, dim " +
           std::to_string(st.dim())};
    GridResult gs, gp;
    c.serial = time_once([&] { gs = wigner_grid(st, xs, ps, Exec::Serial); });
    c.parallel =
        time_once([&] { gp = wigner_grid(st, xs, ps, Exec::Parallel); });
    double dev = 0.0;
    for (std::size_t i = 0; i < gs.values.size(); ++i)
      dev = std::max(dev, std::abs(gs.values[i] - gp.values[i]));
    report(c);
    std::cout << "  serial/parallel max difference: " << dev << '\n';
  }
  {
    Case c{"husimi_grid " + std::to_string(grid_n) + "^2"};
    c.serial = time_once([&] { husimi_grid(st, xs, ps, Exec::Serial); });
    c.parallel = time_once([&] { husimi_grid(st, xs, ps, Exec::Parallel); });
    report(c);
  }
  {
    QuadratureSpec spec;
    spec.grid = linspace(-8.0, 8.0, quick ? 801 : 20001);
    Case c{"quadrature_dist " + std::to_string(spec.grid.size()) + " pts"};
    c.serial =
        time_once([&] { quadrature_dist_numeric(st, spec, Exec::Serial); });
    c.parallel =
        time_once([&] { quadrature_dist_numeric(st, spec, Exec::Parallel); });
    report(c);
  }
  {
    const auto xs8 = linspace(-6.0, 6.0, quick ? 31 : 81);
    const FockVector in8 = coherent_state({2.3}, adaptive_dim(2.3, 4, 8));
    const auto ens = mixed_conditional_output(in8, binomial_mixture(4, 0.95),
                                              bs, DetectorModel(20, 0.9), 4);
    Case c{"ensemble_wigner " + std::to_string(xs8.size()) + "^2, " +
           std::to_string(ens.members.size()) + " members"};
    c.serial =
        time_once([&] { ensemble_wigner(ens, xs8, xs8, Exec::Serial); });
    c.parallel =
        time_once([&] { ensemble_wigner(ens, xs8, xs8, Exec::Parallel); });
    report(c);
  }
  return 0;
}
