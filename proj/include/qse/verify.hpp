#ifndef QSE_VERIFY_HPP
#define QSE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qse {

struct VerifyCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;
  bool pass = true;

  void add(const std::string& name, double dev, double tol);
};

/// Runs one named suite: oracle, appendixA, appendixB, appendixC, detection.
/// The seed only affects the Monte-Carlo checks of the detection suite.
VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed = 12345);

std::vector<std::string> verify_suite_names();

std::string report_to_json(const VerifyReport& rep);
std::string report_to_text(const VerifyReport& rep);

}  // namespace qse

#endif
