#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace specmin {

// Outcome of a reproduction suite. `diffs` holds one "expected ... got ..."
// line per mismatch; `notes` records cases that are data only.
struct SuiteReport {
  std::string suite;
  std::vector<std::string> diffs;
  std::vector<std::string> notes;
  long checks = 0;
  bool ok() const { return diffs.empty(); }
};

// Counts, kernels (by canonical form), multiplicities and kernel ρ for every
// r of a published kernel table (k = 5 or 6; smaller k skip the counts).
SuiteReport verify_kernel_table(int k, int jobs = 1, double tol = 1e-12);

// Closed-form families for k in [k_lo, k_hi]: three orders per (k, r), lift
// identity, alpha, leaf count and monotonicity in n.
SuiteReport verify_families(int k_lo, int k_hi, int jobs = 1, double tol = 1e-12);

// Tree-space oracle against the construction for n <= n_max and every
// alpha >= ceil(n/2), plus the structural audit of each oracle minimizer.
SuiteReport verify_oracle(int n_max, int jobs = 1, double tol = 1e-12);

// Named suites: tables-1to4, k5, k6, oracle-small. Throws std::invalid_argument
// for other names.
SuiteReport run_suite(const std::string& name, int jobs = 1, double tol = 1e-12);

nlohmann::json to_json(const SuiteReport& r);

}  // namespace specmin
