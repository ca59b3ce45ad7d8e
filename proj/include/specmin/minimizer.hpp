#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "specmin/kernels.hpp"
#include "specmin/reference.hpp"

namespace specmin {

struct LiftPlan {
  int n = 0, k = 0, r = 0, n0 = 0;
  int ell = 0;  // (n - n0) / k
};

// Throws GraphError unless 1 <= k <= n/2 and n >= n0.
LiftPlan make_plan(int n, int k);

struct MinimizerTree {
  int main_index = 0;
  LeafSequence kernel_sequence;
  LeafSequence sequence;  // kernel_sequence + ell everywhere
  Graph tree;
  RadiusCertificate certificate;  // from the lifted tree's own polynomial
  RadiusCertificate lifted;       // from the kernel certificate
  bool lift_agrees = false;       // the two are the same algebraic number
  int alpha = 0;
  int leaves = 0;
  std::string canonical;
};

struct MinimizerResult {
  LiftPlan plan;
  std::vector<MinimizerTree> trees;  // canonical order
  std::optional<ClosedForm> closed_form;
};

MinimizerResult construct_minimizers(const LiftPlan& plan, int jobs = 1, double tol = 1e-12);

struct ClosedFormReport {
  bool known = false;
  bool ok = false;
  double expected_rho2 = 0.0;
  double certified_rho2 = 0.0;
  double tolerance = 0.0;
  std::string form;
};

// Certified ρ against the square root of the published family value at the
// plan's n: within 1e-10, or 5e-5 where only four decimals are published.
ClosedFormReport closed_form_check(const MinimizerResult& result);

nlohmann::json to_json(const MinimizerResult& r);

}  // namespace specmin
