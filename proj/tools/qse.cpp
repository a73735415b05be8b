// Command-line surface: conditional-state preparation on a beam splitter,
// phase-space and photon-number distributions, detector modelling, figure
// data export, and the numerical verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qse/io.hpp"
#include "qse/verify.hpp"

namespace {

using namespace qse;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerification = 3;

struct InputSpec {
  std::string kind = "coherent";
  double beta_abs = 2.3;
  double beta_phase = 0.0;
  double xi_abs = 0.5;
  double xi_phase = 0.0;
  int fock_k = 1;
  std::string mixture_file;
  int dim_override = -1;

  cdouble beta() const {
    return std::polar(beta_abs, beta_phase);
  }
  cdouble xi() const { return std::polar(xi_abs, xi_phase); }
};

struct BsSpec {
  double t2 = 0.81;
  double phi_t = 0.0;
  double phi_r = 0.0;
  BeamSplitterParams params() const {
    return BeamSplitterParams::from_t2(t2, phi_t, phi_r);
  }
};

struct GridSpec {
  double xmin = -6.0, xmax = 6.0;
  int nx = 121;
  double pmin = -6.0, pmax = 6.0;
  int np = 121;
  double phi = 0.0;
};

struct OutSpec {
  std::string path = "-";
  std::string format = "csv";
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--input", in.kind, "Input kind")
      ->check(CLI::IsMember({"coherent", "squeezed", "fock", "mixture-file"}));
  cmd->add_option("--beta", in.beta_abs, "|beta| of the coherent input");
  cmd->add_option("--beta-phase", in.beta_phase, "arg(beta) in radians");
  cmd->add_option("--xi", in.xi_abs, "|xi| of the squeezed-vacuum input");
  cmd->add_option("--xi-phase", in.xi_phase, "arg(xi) in radians");
  cmd->add_option("--fock", in.fock_k, "Fock input photon number");
  cmd->add_option("--mixture-file", in.mixture_file,
                  "JSON file with weighted pure-state members");
  cmd->add_option("--dim", in.dim_override, "Truncation override");
}

void add_bs_options(CLI::App* cmd, BsSpec& bs) {
  cmd->add_option("--t2", bs.t2, "|T|^2 of the beam splitter")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  cmd->add_option("--phi-t", bs.phi_t, "Transmittance phase");
  cmd->add_option("--phi-r", bs.phi_r, "Reflectance phase");
}

void add_out_options(CLI::App* cmd, OutSpec& out) {
  cmd->add_option("--out", out.path, "Output path ('-' for stdout)");
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

std::string resolve_out_path(const std::string& path) {
  if (path == "-" || path.empty() || path.front() == '/') return path;
  if (const char* dir = std::getenv("QSE_OUT_DIR"))
    return std::string(dir) + "/" + path;
  return path;
}

// Writes to the resolved path (stdout on '-') and reports the destination.
void emit(const OutSpec& out, const std::string& text) {
  const std::string path = resolve_out_path(out.path);
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << text;
  std::cerr << "wrote " << path << '\n';
}

FockVector build_pure_input(const InputSpec& in, int n, int m) {
  if (in.kind == "coherent") {
    int dim = in.dim_override > 0 ? in.dim_override
                                  : adaptive_dim(in.beta_abs, n, m);
    for (;; dim += 8) {
      try {
        return coherent_state({in.beta()}, dim);
      } catch (const TruncationError&) {
        if (in.dim_override > 0 || dim > 4096) throw;
      }
    }
  }
  if (in.kind == "squeezed") {
    int dim = in.dim_override > 0
                  ? in.dim_override
                  : adaptive_dim(2.0 * std::sinh(in.xi_abs), n, m);
    if (dim % 2) ++dim;
    for (;; dim += 8) {
      try {
        return squeezed_vacuum({in.xi()}, dim);
      } catch (const TruncationError&) {
        if (in.dim_override > 0 || dim > 4096) throw;
      }
    }
  }
  if (in.kind == "fock") {
    const int dim = in.dim_override > 0 ? in.dim_override
                                        : std::max(in.fock_k + n + m + 4, 8);
    return fock_state(in.fock_k, dim);
  }
  throw CLI::ValidationError("--input",
                             "this command needs a pure input state");
}

struct MixtureMember {
  double weight;
  FockVector state;
};

std::vector<MixtureMember> load_mixture(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open mixture file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  const auto j = nlohmann::json::parse(ss.str());
  std::vector<MixtureMember> members;
  double wsum = 0.0;
  for (const auto& jm : j.at("members")) {
    MixtureMember m;
    m.weight = jm.at("weight").get<double>();
    m.state = fockvector_from_json_text(jm.at("state").dump()).unit();
    wsum += m.weight;
    members.push_back(std::move(m));
  }
  if (!(wsum > 0.0)) throw std::runtime_error("mixture weights sum to zero");
  for (auto& m : members) m.weight /= wsum;
  return members;
}

// ---- conditional ----------------------------------------------------------

int cmd_conditional(const InputSpec& in, const BsSpec& bsspec, int n, int m,
                    const OutSpec& out) {
  const auto bs = bsspec.params();
  const ConditionalIndices idx(n, m);
  nlohmann::json j;
  j["n"] = n;
  j["m"] = m;
  j["t2"] = bsspec.t2;

  if (in.kind == "mixture-file") {
    const auto members = load_mixture(in.mixture_file);
    double total = 0.0;
    auto& arr = j["members"] = nlohmann::json::array();
    for (const auto& mem : members) {
      const auto cs = jp_state_general(mem.state, idx, bs);
      total += mem.weight * cs.probability;
      arr.push_back({{"weight", mem.weight},
                     {"probability", cs.probability},
                     {"norm_constant", cs.norm_constant},
                     {"state", nlohmann::json::parse(fockvector_to_json(cs.state))}});
    }
    // conditional mixture weights carry each member's event probability
    for (auto& jm : arr)
      jm["weight"] = jm["weight"].get<double>() *
                     jm["probability"].get<double>() / total;
    j["probability"] = total;
  } else {
    const FockVector input = build_pure_input(in, n, m);
    const auto cs = jp_state_general(input, idx, bs);
    j["probability"] = cs.probability;
    j["norm_constant"] = cs.norm_constant;
    j["state"] = nlohmann::json::parse(fockvector_to_json(cs.state));
    if (in.kind == "coherent") {
      j["probability_closed_form"] =
          probability_closed_coherent({in.beta()}, idx, bs);
    }
  }
  if (out.format == "json") {
    emit(out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "k,re,im,prob_k\n";
    const auto st = fockvector_from_json_text(j["state"].dump());
    for (int k = 0; k < st.dim(); ++k)
      os << k << ',' << format_double(st[k].real()) << ','
         << format_double(st[k].imag()) << ','
         << format_double(std::norm(st[k])) << '\n';
    os << "# probability," << format_double(j["probability"].get<double>())
       << '\n';
    emit(out, os.str());
  }
  return kExitOk;
}

// ---- prob-map --------------------------------------------------------------

int cmd_prob_map(const InputSpec& in, const BsSpec& bsspec, int n, int mmax,
                 const OutSpec& out) {
  const auto bs = bsspec.params();
  const FockVector input = build_pure_input(in, n, mmax);
  const auto pm = probability_map(input, n, bs, mmax);
  std::vector<std::vector<double>> rows;
  const bool coh = in.kind == "coherent";
  for (int m = 0; m <= mmax; ++m) {
    std::vector<double> row{static_cast<double>(m),
                            pm[static_cast<std::size_t>(m)]};
    if (coh)
      row.push_back(probability_closed_coherent({in.beta()},
                                                ConditionalIndices(n, m), bs));
    rows.push_back(std::move(row));
  }
  std::ostringstream os;
  if (out.format == "json") {
    nlohmann::json j;
    j["n"] = n;
    j["oracle"] = pm;
    if (coh) {
      std::vector<double> closed;
      for (const auto& r : rows) closed.push_back(r[2]);
      j["closed_form"] = closed;
    }
    os << j.dump(2) << '\n';
  } else {
    std::vector<std::string> header{"m", "P"};
    if (coh) header.push_back("P_closed");
    write_csv(os, header, rows);
  }
  emit(out, os.str());
  return kExitOk;
}

// ---- phase-space commands ---------------------------------------------------

FockVector conditional_state_for(const InputSpec& in, const BsSpec& bsspec,
                                 int n, int m) {
  const auto bs = bsspec.params();
  const FockVector input = build_pure_input(in, n, m);
  return jp_state_general(input, ConditionalIndices(n, m), bs).state;
}

int cmd_quadrature(const InputSpec& in, const BsSpec& bsspec, int n, int m,
                   const GridSpec& grid, const OutSpec& out) {
  QuadratureSpec spec;
  spec.phi = grid.phi;
  spec.grid = linspace(grid.xmin, grid.xmax, grid.nx);
  std::vector<double> vals;
  if (in.kind == "coherent") {
    vals = quadrature_dist_closed_coherent({in.beta()}, ConditionalIndices(n, m),
                                           bsspec.params(), spec);
  } else {
    vals = quadrature_dist_numeric(conditional_state_for(in, bsspec, n, m),
                                   spec);
  }
  std::ostringstream os;
  if (out.format == "json")
    os << curve_to_json("x", "p_x", spec.grid, vals) << '\n';
  else
    write_curve_csv(os, "x", "p_x", spec.grid, vals);
  emit(out, os.str());
  return kExitOk;
}

int cmd_phase_grid(const InputSpec& in, const BsSpec& bsspec, int n, int m,
                   const GridSpec& grid, const OutSpec& out, bool wigner) {
  const auto xs = linspace(grid.xmin, grid.xmax, grid.nx);
  const auto ps = linspace(grid.pmin, grid.pmax, grid.np);
  GridResult g;
  if (in.kind == "coherent") {
    const ConditionalIndices idx(n, m);
    g = wigner ? wigner_grid_closed_coherent({in.beta()}, idx, bsspec.params(),
                                             xs, ps)
               : husimi_grid_closed_coherent({in.beta()}, idx, bsspec.params(),
                                             xs, ps);
  } else {
    const FockVector st = conditional_state_for(in, bsspec, n, m);
    g = wigner ? wigner_grid(st, xs, ps) : husimi_grid(st, xs, ps);
  }
  std::ostringstream os;
  if (out.format == "json")
    os << grid_to_json(g) << '\n';
  else
    write_grid_csv(os, g);
  emit(out, os.str());
  return kExitOk;
}

int cmd_photon_stats(const InputSpec& in, const BsSpec& bsspec, int n, int m,
                     const OutSpec& out) {
  PhotonStats st;
  if (in.kind == "coherent") {
    st = photon_stats_closed({in.beta()}, ConditionalIndices(n, m),
                             bsspec.params());
  } else {
    const FockVector v = conditional_state_for(in, bsspec, n, m);
    st.distribution = v.number_dist();
    st.mean = v.mean_photon();
    st.second_moment = v.mean_photon_sq();
    st.mandel_q = (st.second_moment - st.mean * st.mean) / st.mean - 1.0;
  }
  if (out.format == "json") {
    emit(out, photon_stats_to_json(st) + "\n");
  } else {
    std::ostringstream os;
    std::vector<std::vector<double>> rows;
    for (std::size_t l = 0; l < st.distribution.size(); ++l)
      rows.push_back({static_cast<double>(l), st.distribution[l]});
    write_csv(os, {"l", "p_l"}, rows);
    os << "# mean," << format_double(st.mean) << '\n';
    os << "# mandel_q," << format_double(st.mandel_q) << '\n';
    emit(out, os.str());
  }
  return kExitOk;
}

// ---- detection commands -----------------------------------------------------

int cmd_chopping(int ports, double eta, int mmax, const OutSpec& out) {
  const DetectorModel det(ports, eta);
  const auto C = click_given_photons(det, mmax);
  std::ostringstream os;
  if (out.format == "json") {
    nlohmann::json j;
    j["ports"] = ports;
    j["eta"] = eta;
    auto& rows = j["click_given_photons"] = nlohmann::json::array();
    for (int k = 0; k <= ports; ++k) {
      nlohmann::json row = nlohmann::json::array();
      for (int m = 0; m <= mmax; ++m) row.push_back(C.at(k, m));
      rows.push_back(row);
    }
    os << j.dump(2) << '\n';
  } else {
    std::vector<std::vector<double>> rows;
    for (int k = 0; k <= ports; ++k)
      for (int m = 0; m <= mmax; ++m)
        rows.push_back({static_cast<double>(k), static_cast<double>(m),
                        C.at(k, m)});
    write_csv(os, {"k", "m", "P"}, rows);
  }
  emit(out, os.str());
  return kExitOk;
}

int cmd_posterior(const InputSpec& in, const BsSpec& bsspec, int n, int clicks,
                  int ports, double eta, const OutSpec& out) {
  const FockVector input = build_pure_input(in, n, clicks);
  const auto post = posterior_photons_given_clicks(
      DetectorModel(ports, eta), input, n, bsspec.params(), clicks);
  std::ostringstream os;
  if (out.format == "json") {
    nlohmann::json j;
    j["clicks"] = clicks;
    j["posterior"] = post;
    os << j.dump(2) << '\n';
  } else {
    std::vector<std::vector<double>> rows;
    for (std::size_t m = 0; m < post.size(); ++m)
      rows.push_back({static_cast<double>(m), post[m]});
    write_csv(os, {"m", "P_m_given_k"}, rows);
  }
  emit(out, os.str());
  return kExitOk;
}

int cmd_mixture(int n0, double p, const OutSpec& out) {
  const auto mix = binomial_mixture(n0, p);
  std::ostringstream os;
  if (out.format == "json") {
    nlohmann::json j;
    j["weights"] = mix.weights;
    j["mean"] = mix.mean();
    j["variance"] = mix.variance();
    os << j.dump(2) << '\n';
  } else {
    std::vector<std::vector<double>> rows;
    for (std::size_t n = 0; n < mix.weights.size(); ++n)
      rows.push_back({static_cast<double>(n), mix.weights[n]});
    write_csv(os, {"n", "weight"}, rows);
  }
  emit(out, os.str());
  return kExitOk;
}

// ---- figure -----------------------------------------------------------------

int cmd_figure(const std::string& fig, InputSpec in, BsSpec bsspec, int ports,
               double eta, int clicks, int n0, double pmix, OutSpec out) {
  if (out.path == "-") out.path = "figure_" + fig + "." + out.format;
  const auto curve_sweep = [&](double t2) {
    bsspec.t2 = t2;
    const auto bs = bsspec.params();
    std::vector<std::vector<double>> rows;
    for (int i = 0; i <= 120; ++i) {
      const double b = 0.05 * i;
      for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 2}}) {
        const double P =
            b == 0.0 ? (n >= m ? probability_from_norm_constant(
                                     jp_state_general(fock_state(0, 4),
                                                      ConditionalIndices(n, m), bs)
                                         .norm_constant,
                                     ConditionalIndices(n, m), bs)
                               : 0.0)
                     : probability_closed_coherent({cdouble(b)},
                                                   ConditionalIndices(n, m), bs);
        rows.push_back({b, static_cast<double>(n), static_cast<double>(m), t2,
                        P});
      }
    }
    std::ostringstream os;
    write_csv(os, {"beta_abs", "n", "m", "t2", "P"}, rows);
    emit(out, os.str());
    return kExitOk;
  };

  const auto quad_surface = [&](int n, int m, bool mixed) {
    const auto xs = linspace(-6.0, 6.0, 121);
    const auto phis = linspace(0.0, 3.141592653589793, 61);
    std::ostringstream os;
    os << "x,phi,value\n";
    if (!mixed) {
      for (double phi : phis) {
        QuadratureSpec spec;
        spec.phi = phi;
        spec.grid = xs;
        const auto vals = quadrature_dist_closed_coherent(
            {in.beta()}, ConditionalIndices(n, m), bsspec.params(), spec);
        for (std::size_t i = 0; i < xs.size(); ++i)
          os << format_double(xs[i]) << ',' << format_double(phi) << ','
             << format_double(vals[i]) << '\n';
      }
    } else {
      const FockVector input = build_pure_input(in, n0, clicks);
      const auto ens = mixed_conditional_output(
          input, binomial_mixture(n0, pmix), bsspec.params(),
          DetectorModel(ports, eta), clicks);
      for (double phi : phis) {
        QuadratureSpec spec;
        spec.phi = phi;
        spec.grid = xs;
        const auto vals = ensemble_quadrature(ens, spec);
        for (std::size_t i = 0; i < xs.size(); ++i)
          os << format_double(xs[i]) << ',' << format_double(phi) << ','
             << format_double(vals[i]) << '\n';
      }
    }
    emit(out, os.str());
    return kExitOk;
  };

  const auto phase_surface = [&](int n, int m, bool wigner, bool mixed) {
    const auto xs = linspace(-6.0, 6.0, 121);
    const auto ps = linspace(-6.0, 6.0, 121);
    GridResult g;
    if (mixed) {
      const FockVector input = build_pure_input(in, n0, clicks);
      const auto ens = mixed_conditional_output(
          input, binomial_mixture(n0, pmix), bsspec.params(),
          DetectorModel(ports, eta), clicks);
      g = ensemble_wigner(ens, xs, ps);
    } else if (wigner) {
      g = wigner_grid_closed_coherent({in.beta()}, ConditionalIndices(n, m),
                                      bsspec.params(), xs, ps);
    } else {
      g = husimi_grid_closed_coherent({in.beta()}, ConditionalIndices(n, m),
                                      bsspec.params(), xs, ps);
    }
    std::ostringstream os;
    write_grid_csv(os, g);
    emit(out, os.str());
    return kExitOk;
  };

  if (fig == "2a") return curve_sweep(0.4);
  if (fig == "2b") return curve_sweep(0.81);
  if (fig == "3a") return quad_surface(2, 3, false);
  if (fig == "3b") return quad_surface(3, 2, false);
  if (fig == "4a") return phase_surface(2, 3, false, false);
  if (fig == "4b") return phase_surface(3, 2, false, false);
  if (fig == "5a") return phase_surface(2, 3, true, false);
  if (fig == "5b") return phase_surface(3, 2, true, false);
  if (fig == "8a") return quad_surface(0, 0, true);
  if (fig == "8b") return phase_surface(0, 0, true, true);
  throw CLI::ValidationError("figure", "unknown figure id: " + fig);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditional quantum-state preparation on a beam splitter"};
  app.require_subcommand(1);
  // flags given on the command line take precedence over config values
  app.set_config("--config");

  InputSpec in;
  BsSpec bsspec;
  GridSpec grid;
  OutSpec out;
  int n = 0, m = 0, clicks = 4, mmax = 12;
  int ports = 20, n0 = 4;
  double eta = 0.9, pmix = 0.95;
  std::uint64_t seed = 12345;
  std::string fig, suite;
  bool json_report = false;

  auto add_common = [&](CLI::App* cmd, bool needs_nm) {
    add_input_options(cmd, in);
    add_bs_options(cmd, bsspec);
    add_out_options(cmd, out);
    if (needs_nm) {
      cmd->add_option("-n,--n", n, "Reference-port photon number");
      cmd->add_option("-m,--m", m, "Detected photon number");
    }
    return cmd;
  };

  auto* c_cond = add_common(app.add_subcommand("conditional",
                                               "Conditional output state"),
                            true);
  auto* c_pmap = add_common(
      app.add_subcommand("prob-map", "Event probabilities P(n, m)"), true);
  c_pmap->add_option("--mmax", mmax, "Largest detected count");
  auto* c_quad = add_common(
      app.add_subcommand("quadrature", "Quadrature-component distribution"),
      true);
  c_quad->add_option("--xmin", grid.xmin);
  c_quad->add_option("--xmax", grid.xmax);
  c_quad->add_option("--nx", grid.nx);
  c_quad->add_option("--phi", grid.phi, "Local-oscillator phase");
  auto* c_wig =
      add_common(app.add_subcommand("wigner", "Wigner function grid"), true);
  auto* c_hus =
      add_common(app.add_subcommand("husimi", "Husimi function grid"), true);
  for (auto* c : {c_wig, c_hus}) {
    c->add_option("--xmin", grid.xmin);
    c->add_option("--xmax", grid.xmax);
    c->add_option("--nx", grid.nx);
    c->add_option("--pmin", grid.pmin);
    c->add_option("--pmax", grid.pmax);
    c->add_option("--np", grid.np);
  }
  auto* c_stats = add_common(
      app.add_subcommand("photon-stats", "Photon-number statistics"), true);
  auto* c_chop =
      app.add_subcommand("chopping", "Click-given-photons matrix");
  c_chop->add_option("--ports", ports, "Number of on/off diodes");
  c_chop->add_option("--eta", eta, "Detection efficiency")
      ->check(CLI::Range(1e-9, 1.0));
  c_chop->add_option("--mmax", mmax);
  add_out_options(c_chop, out);
  auto* c_post = add_common(
      app.add_subcommand("posterior", "Photon-number posterior given clicks"),
      false);
  c_post->add_option("-n,--n", n, "Reference-port photon number");
  c_post->add_option("-k,--clicks", clicks, "Observed click count");
  c_post->add_option("--ports", ports);
  c_post->add_option("--eta", eta)->check(CLI::Range(1e-9, 1.0));
  auto* c_mix = app.add_subcommand("mixture", "Binomial Fock mixture");
  c_mix->add_option("--n0", n0);
  c_mix->add_option("--p", pmix)->check(CLI::Range(1e-12, 1.0 - 1e-12));
  add_out_options(c_mix, out);
  auto* c_fig = app.add_subcommand("figure", "Reference figure data");
  c_fig->add_option("id", fig, "Figure id")
      ->required()
      ->check(CLI::IsMember(
          {"2a", "2b", "3a", "3b", "4a", "4b", "5a", "5b", "8a", "8b"}));
  add_input_options(c_fig, in);
  add_bs_options(c_fig, bsspec);
  add_out_options(c_fig, out);
  c_fig->add_option("--ports", ports);
  c_fig->add_option("--eta", eta)->check(CLI::Range(1e-9, 1.0));
  c_fig->add_option("-k,--clicks", clicks);
  c_fig->add_option("--n0", n0);
  c_fig->add_option("--p", pmix)->check(CLI::Range(1e-12, 1.0 - 1e-12));
  auto* c_ver = app.add_subcommand("verify", "Numerical verification suites");
  c_ver->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(verify_suite_names()));
  c_ver->add_flag("--json", json_report, "Machine-readable report");
  c_ver->add_option("--seed", seed, "Monte-Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_cond->parsed()) return cmd_conditional(in, bsspec, n, m, out);
    if (c_pmap->parsed()) return cmd_prob_map(in, bsspec, n, mmax, out);
    if (c_quad->parsed()) return cmd_quadrature(in, bsspec, n, m, grid, out);
    if (c_wig->parsed())
      return cmd_phase_grid(in, bsspec, n, m, grid, out, true);
    if (c_hus->parsed())
      return cmd_phase_grid(in, bsspec, n, m, grid, out, false);
    if (c_stats->parsed()) return cmd_photon_stats(in, bsspec, n, m, out);
    if (c_chop->parsed()) return cmd_chopping(ports, eta, mmax, out);
    if (c_post->parsed())
      return cmd_posterior(in, bsspec, n, clicks, ports, eta, out);
    if (c_mix->parsed()) return cmd_mixture(n0, pmix, out);
    if (c_fig->parsed())
      return cmd_figure(fig, in, bsspec, ports, eta, clicks, n0, pmix, out);
    if (c_ver->parsed()) {
      const auto rep = run_verify_suite(suite, seed);
      std::cout << (json_report ? report_to_json(rep) : report_to_text(rep))
                << '\n';
      return rep.pass ? kExitOk : kExitVerification;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
