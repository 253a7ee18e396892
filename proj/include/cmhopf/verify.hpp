#ifndef CMHOPF_VERIFY_HPP
#define CMHOPF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cmhopf {

struct VerifyOptions {
  int           degree = 6;
  std::uint64_t seed   = 42;
  int           trials = 10;
  // Test hook: drops the delta_1 (x) delta_1 term from Delta(delta_2).
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  bool        passed = true;
  // First failure, naming the degree and the offending term.
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
};

// Hopf axioms, closed formulas against the PBW recursion, the series
// oracles, both Q forms and the word-algebra images, each up to
// options.degree. Throws std::invalid_argument for degree < 1 or trials < 1.
VerifyReport run_verification(VerifyOptions const& options);

// One "PASS name" / "FAIL name: detail" line per check.
std::string render_report(VerifyReport const& report);

}  // namespace cmhopf

#endif  // CMHOPF_VERIFY_HPP
