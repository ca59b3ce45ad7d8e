#include "specmin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "specmin/canonical.hpp"
#include "specmin/independence.hpp"
#include "specmin/io.hpp"
#include "specmin/kernels.hpp"
#include "specmin/minimizer.hpp"
#include "specmin/oracle.hpp"
#include "specmin/reference.hpp"

namespace specmin {

namespace {

std::string seq_text(const std::vector<int>& s) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ")";
  return os.str();
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// True when rho matches the published kernel value for (k, r).
bool rho_matches(const ClosedForm& f, double rho) {
  double tol = f.decimal_only ? 5e-5 : 1e-10;
  return std::abs(rho - std::sqrt(f.kernel_rho2())) <= tol;
}

}  // namespace

SuiteReport verify_kernel_table(int k, int jobs, double tol) {
  SuiteReport rep;
  rep.suite = "k" + std::to_string(k);
  const auto mains = enumerate_main_trees(k);
  for (int r = 0; r < k; ++r) {
    const std::string tag = "k=" + std::to_string(k) + " r=" + std::to_string(r);
    KernelResult res = kernel_search(k, r, jobs, tol);

    auto counts = reference_counts(k, r);
    if (!counts.empty()) {
      ++rep.checks;
      for (std::size_t i = 0; i < counts.size() && i < res.per_main_tree.size(); ++i)
        if (counts[i] != res.per_main_tree[i].count)
          rep.diffs.push_back(tag + " count F" + std::to_string(i + 1) + ": expected " + std::to_string(counts[i]) +
                              ", got " + std::to_string(res.per_main_tree[i].count));
      if (counts.size() != res.per_main_tree.size())
        rep.diffs.push_back(tag + " main trees: expected " + std::to_string(counts.size()) + ", got " +
                            std::to_string(res.per_main_tree.size()));
    }

    std::set<std::string> expected, got;
    std::map<std::string, std::string> label;
    for (const auto& ref : reference_kernels(k, r)) {
      const MainTree& mt = mains.at(static_cast<std::size_t>(ref.main_index - 1));
      auto form = canonical_form(attach_leaves(mt.realized.tree, to_assignment(mt, ref.sequence)));
      expected.insert(form);
      label[form] = "F" + std::to_string(ref.main_index) + seq_text(ref.sequence);
    }
    for (const auto& c : res.minimizers) {
      got.insert(c.canonical);
      label.try_emplace(c.canonical, "F" + std::to_string(c.main_index + 1) + seq_text(c.sequence));
    }
    ++rep.checks;
    for (const auto& f : expected)
      if (!got.count(f)) rep.diffs.push_back(tag + " kernel missing: " + label[f]);
    for (const auto& f : got)
      if (!expected.count(f)) rep.diffs.push_back(tag + " kernel unexpected: " + label[f]);
    if (expected.size() != res.minimizers.size())
      rep.diffs.push_back(tag + " multiplicity: expected " + std::to_string(expected.size()) + ", got " +
                          std::to_string(res.minimizers.size()));

    if (auto f = closed_form(k, r)) {
      ++rep.checks;
      for (const auto& c : res.minimizers)
        if (!rho_matches(*f, c.certificate.approx))
          rep.diffs.push_back(tag + " rho^2: expected " + f->text + " = " + num(f->kernel_rho2()) + ", got " +
                              num(c.certificate.approx * c.certificate.approx));
    }
    std::ostringstream note;
    note << tag << ": " << res.minimizers.size() << " kernel(s), rho^2 = "
         << (res.minimizers.empty() ? 0.0 : res.minimizers.front().certificate.approx * res.minimizers.front().certificate.approx);
    rep.notes.push_back(note.str());
  }
  return rep;
}

SuiteReport verify_families(int k_lo, int k_hi, int jobs, double tol) {
  SuiteReport rep;
  rep.suite = "families";
  for (int k = k_lo; k <= k_hi; ++k) {
    for (int r = 0; r < k; ++r) {
      int start = make_kernel_problem(k, r).n0;
      while (start < 2 * k) start += k;
      double previous = 0.0;
      for (int step : {0, 1, 5}) {
        const int n = start + step * k;
        const std::string tag = "k=" + std::to_string(k) + " r=" + std::to_string(r) + " n=" + std::to_string(n);
        MinimizerResult res = construct_minimizers(make_plan(n, k), jobs, tol);
        ++rep.checks;
        if (res.trees.empty()) {
          rep.diffs.push_back(tag + ": no minimizer constructed");
          continue;
        }
        auto cf = closed_form_check(res);
        if (cf.known && !cf.ok)
          rep.diffs.push_back(tag + " rho^2: expected " + num(cf.expected_rho2) + ", got " + num(cf.certified_rho2));
        for (const auto& t : res.trees) {
          if (!t.lift_agrees) rep.diffs.push_back(tag + ": lift identity not exact");
          if (t.tree.vertex_count() != n) rep.diffs.push_back(tag + ": order " + std::to_string(t.tree.vertex_count()));
          if (t.alpha != n - k)
            rep.diffs.push_back(tag + " alpha: expected " + std::to_string(n - k) + ", got " + std::to_string(t.alpha));
          if (t.leaves != 2 * t.alpha - n + 1)
            rep.diffs.push_back(tag + " leaves: expected " + std::to_string(2 * t.alpha - n + 1) + ", got " +
                                std::to_string(t.leaves));
        }
        double rho = res.trees.front().certificate.approx;
        if (step > 0 && !(rho > previous))
          rep.diffs.push_back(tag + ": radius did not increase with n");
        previous = rho;
      }
    }
  }
  return rep;
}

SuiteReport verify_oracle(int n_max, int jobs, double tol) {
  SuiteReport rep;
  rep.suite = "oracle";
  for (int n = 2; n <= n_max; ++n) {
    for (int alpha = (n + 1) / 2; alpha <= n - 1; ++alpha) {
      const int k = n - alpha;
      const std::string tag = "n=" + std::to_string(n) + " alpha=" + std::to_string(alpha);
      OracleResult oracle = brute_force_minimizer(n, alpha, SearchSpace::Trees, tol);
      auto audit = audit_structural_propositions(oracle);
      ++rep.checks;
      for (const auto& f : audit.failures) rep.diffs.push_back(tag + " audit " + f);

      const int r = (n + 1) % k;
      if (n < make_kernel_problem(k, r).n0) {
        rep.notes.push_back(tag + ": below n0, " + std::to_string(oracle.minimizers.size()) + " minimizer(s) recorded");
        continue;
      }
      MinimizerResult built = construct_minimizers(make_plan(n, k), jobs, tol);
      std::set<std::string> a, b;
      for (const auto& m : oracle.minimizers) a.insert(canonical_form(m.graph));
      for (const auto& t : built.trees) b.insert(t.canonical);
      ++rep.checks;
      if (a != b) {
        std::string got, expected;
        for (const auto& m : oracle.minimizers) expected += " " + to_graph6(m.graph);
        for (const auto& t : built.trees) got += " " + to_graph6(t.tree);
        rep.diffs.push_back(tag + ": oracle" + expected + ", construction" + got);
      }
    }
  }
  return rep;
}

SuiteReport run_suite(const std::string& name, int jobs, double tol) {
  SuiteReport rep;
  if (name == "tables-1to4") {
    rep = verify_families(1, 4, jobs, tol);
    for (int k = 1; k <= 4; ++k) {
      auto t = verify_kernel_table(k, jobs, tol);
      rep.checks += t.checks;
      rep.diffs.insert(rep.diffs.end(), t.diffs.begin(), t.diffs.end());
      rep.notes.insert(rep.notes.end(), t.notes.begin(), t.notes.end());
    }
  } else if (name == "k5") {
    rep = verify_kernel_table(5, jobs, tol);
  } else if (name == "k6") {
    rep = verify_kernel_table(6, jobs, tol);
  } else if (name == "oracle-small") {
    rep = verify_oracle(14, jobs, tol);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  rep.suite = name;
  return rep;
}

nlohmann::json to_json(const SuiteReport& r) {
  return {{"suite", r.suite}, {"ok", r.ok()}, {"checks", r.checks}, {"diffs", r.diffs}, {"notes", r.notes}};
}

}  // namespace specmin
