#include "specmin/minimizer.hpp"

#include <algorithm>
#include <cmath>

#include "specmin/canonical.hpp"
#include "specmin/independence.hpp"
#include "specmin/io.hpp"

namespace specmin {

LiftPlan make_plan(int n, int k) {
  if (k < 1 || 2 * k > n) throw GraphError("make_plan: need 1 <= k <= n/2");
  LiftPlan p;
  p.n = n;
  p.k = k;
  p.r = (n + 1) % k;
  p.n0 = 3 * k * k - k - 1 - (k - 1) * p.r;
  if (n < p.n0)
    throw GraphError("make_plan: n = " + std::to_string(n) + " is below n0 = " + std::to_string(p.n0));
  p.ell = (n - p.n0) / k;
  return p;
}

MinimizerResult construct_minimizers(const LiftPlan& plan, int jobs, double tol) {
  MinimizerResult out;
  out.plan = plan;
  out.closed_form = closed_form(plan.k, plan.r);
  KernelResult kernels = kernel_search(plan.k, plan.r, jobs, tol);
  for (const auto& kc : kernels.minimizers) {
    const MainTree& mt = kernels.per_main_tree[static_cast<std::size_t>(kc.main_index)].main_tree;
    MinimizerTree m;
    m.main_index = kc.main_index;
    m.kernel_sequence = kc.sequence;
    m.sequence = kc.sequence;
    for (int& x : m.sequence) x += plan.ell;
    m.tree = attach_leaves(mt.realized.tree, to_assignment(mt, m.sequence));
    m.lifted = bipartite_lift_radius(kc.certificate, plan.ell, tol);
    m.certificate = certify_largest_root(char_poly_tree(m.tree), m.lifted.approx, tol);
    m.lift_agrees = compare_radii(m.certificate, m.lifted) == 0;
    m.alpha = tree_independence_number(m.tree);
    m.leaves = static_cast<int>(leaf_set(m.tree).size());
    m.canonical = canonical_form(m.tree);
    out.trees.push_back(std::move(m));
  }
  std::sort(out.trees.begin(), out.trees.end(),
            [](const MinimizerTree& a, const MinimizerTree& b) { return a.canonical < b.canonical; });
  return out;
}

ClosedFormReport closed_form_check(const MinimizerResult& result) {
  ClosedFormReport rep;
  if (!result.closed_form || result.trees.empty()) return rep;
  const auto& f = *result.closed_form;
  rep.known = true;
  rep.form = f.text;
  rep.expected_rho2 = f.rho2_at(result.plan.n);
  rep.tolerance = f.decimal_only ? 5e-5 : 1e-10;
  rep.ok = true;
  for (const auto& t : result.trees) {
    double rho = t.certificate.approx;
    rep.certified_rho2 = rho * rho;
    if (std::abs(rho - std::sqrt(rep.expected_rho2)) > rep.tolerance) rep.ok = false;
  }
  return rep;
}

nlohmann::json to_json(const MinimizerResult& r) {
  nlohmann::json trees = nlohmann::json::array();
  for (const auto& t : r.trees)
    trees.push_back({{"graph6", to_graph6(t.tree)},
                     {"main_tree", t.main_index + 1},
                     {"assignment", t.sequence},
                     {"kernel_assignment", t.kernel_sequence},
                     {"lift", r.plan.ell},
                     {"rho", t.certificate.approx},
                     {"lift_identity_exact", t.lift_agrees},
                     {"alpha", t.alpha},
                     {"certificate", to_json(t.certificate)}});
  nlohmann::json j = {{"n", r.plan.n},           {"k", r.plan.k},  {"alpha", r.plan.n - r.plan.k},
                      {"r", r.plan.r},           {"n0", r.plan.n0}, {"ell", r.plan.ell},
                      {"minimizers", trees}};
  j["rho2_closed_form_if_known"] = nullptr;
  if (r.closed_form) {
    const auto& f = *r.closed_form;
    j["rho2_closed_form_if_known"] =
        f.text + (r.plan.ell ? " + " + std::to_string(r.plan.ell) : std::string());
  }
  return j;
}

}  // namespace specmin
