#include "doctest.h"
#include "qse/io.hpp"

#include <random>
#include <sstream>

using namespace qse;

TEST_CASE("doubles format with full round-trip precision") {
  for (double v : {0.1, -3.7e-15, 12345.6789, 1.0 / 3.0}) {
    const double back = std::stod(format_double(v));
    CHECK(back == v);
  }
}

TEST_CASE("fock vector json round-trip preserves amplitudes exactly") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  for (int rep = 0; rep < 5; ++rep) {
    FockVector v(17);
    for (int k = 0; k < v.dim(); ++k) v[k] = cdouble(g(rng), g(rng));
    v = v.unit();
    const auto text = fockvector_to_json(v);
    const auto w = fockvector_from_json_text(text);
    REQUIRE(w.dim() == v.dim());
    CHECK(w.normalized == v.normalized);
    for (int k = 0; k < v.dim(); ++k) CHECK(w[k] == v[k]);
  }
}

TEST_CASE("csv emission layout") {
  std::ostringstream os;
  write_csv(os, {"a", "b"}, {{1.0, 2.0}, {3.5, -4.25}});
  CHECK(os.str() == "a,b\n1,2\n3.5,-4.25\n");

  GridResult g;
  g.xs = {0.0, 1.0};
  g.ps = {5.0};
  g.values = {0.25, 0.5};
  std::ostringstream gs;
  write_grid_csv(gs, g);
  CHECK(gs.str() == "x,p,value\n0,5,0.25\n1,5,0.5\n");
}
