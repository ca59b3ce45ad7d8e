#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "specmin/io.hpp"
#include "specmin/kernels.hpp"
#include "specmin/main_trees.hpp"
#include "specmin/minimizer.hpp"
#include "specmin/oracle.hpp"
#include "specmin/verify.hpp"

using namespace specmin;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

struct Options {
  std::optional<int> n, k, alpha, r;
  double tol = 1e-12;
  std::string space = "trees";
  std::string output = "json";
  std::string suite;
  int jobs = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

void emit(const json& j) { std::cout << j.dump() << '\n' << std::flush; }

std::string fixed(double x, int digits = 10) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::fixed << x;
  return os.str();
}

std::string seq_text(const std::vector<int>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

int run_oracle(const Options& o, int n, int alpha) {
  if (o.space != "trees" && o.space != "connected") throw UsageError("--space must be trees or connected");
  auto space = o.space == "trees" ? SearchSpace::Trees : SearchSpace::Connected;
  OracleResult res = brute_force_minimizer(n, alpha, space, o.tol);
  bool auditable = 2 * alpha >= n;
  std::optional<AuditReport> audit;
  if (auditable) audit = audit_structural_propositions(res);

  if (o.output == "graph6") {
    for (const auto& m : res.minimizers) std::cout << to_graph6(m.graph) << '\n';
  } else if (o.output == "table") {
    std::cout << "n=" << n << " alpha=" << alpha << " space=" << o.space << " examined=" << res.search_space_size
              << " class=" << res.class_size << " escalations=" << res.escalations << '\n';
    for (const auto& m : res.minimizers)
      std::cout << to_graph6(m.graph) << "  rho=" << fixed(m.certificate.approx) << (m.is_tree ? "  tree" : "") << '\n';
    if (audit) std::cout << "audit: " << (audit->ok() ? "pass" : "FAIL") << '\n';
    if (audit)
      for (const auto& f : audit->failures) std::cout << "  " << f << '\n';
  } else {
    json j = to_json(res);
    j["audit"] = audit ? to_json(*audit) : json(nullptr);
    emit(j);
  }
  return 0;
}

int run_minimize(const Options& o) {
  const int n = need(o.n, "--n"), k = need(o.k, "--k");
  if (k < 1 || 2 * k > n) throw UsageError("need 1 <= k <= n/2");
  const int r = (n + 1) % k;
  const int n0 = make_kernel_problem(k, r).n0;
  if (n < n0) {
    // The construction only covers n >= n0; smaller orders go to the oracle.
    if (n > kFreeTreeCap)
      throw UsageError("n = " + std::to_string(n) + " is below n0 = " + std::to_string(n0) + " and above the oracle cap");
    if (o.output == "json") std::cerr << "n < n0 = " << n0 << ", answering with the tree oracle\n";
    return run_oracle(o, n, n - k);
  }
  MinimizerResult res = construct_minimizers(make_plan(n, k), o.jobs, o.tol);
  auto check = closed_form_check(res);
  if (o.output == "graph6") {
    for (const auto& t : res.trees) std::cout << to_graph6(t.tree) << '\n';
  } else if (o.output == "table") {
    std::cout << "n=" << n << " k=" << k << " r=" << res.plan.r << " n0=" << res.plan.n0 << " ell=" << res.plan.ell
              << '\n';
    for (const auto& t : res.trees)
      std::cout << "F" << t.main_index + 1 << seq_text(t.sequence) << "  rho=" << fixed(t.certificate.approx)
                << "  rho^2=" << fixed(t.certificate.approx * t.certificate.approx) << "  " << to_graph6(t.tree)
                << '\n';
    if (check.known)
      std::cout << "closed form " << check.form << ": " << (check.ok ? "match" : "MISMATCH") << '\n';
  } else {
    json j = to_json(res);
    j["closed_form_check"] = check.known ? json{{"ok", check.ok},
                                                {"expected_rho2", check.expected_rho2},
                                                {"certified_rho2", check.certified_rho2},
                                                {"tolerance", check.tolerance}}
                                         : json(nullptr);
    emit(j);
  }
  return 0;
}

int run_kernel(const Options& o) {
  const int k = need(o.k, "--k"), r = need(o.r, "--r");
  if (r < 0 || r >= k) throw UsageError("--r must lie in [0, k-1]");
  KernelResult res = kernel_search(k, r, o.jobs, o.tol);
  if (o.output == "graph6") {
    for (const auto& c : res.minimizers) std::cout << to_graph6(c.tree) << '\n';
  } else if (o.output == "table") {
    std::cout << "k=" << k << " r=" << r << " n0=" << res.problem.n0 << " lbar=" << res.problem.lbar << '\n';
    for (std::size_t i = 0; i < res.per_main_tree.size(); ++i) {
      const auto& s = res.per_main_tree[i];
      std::cout << "F" << i + 1 << "  #" << s.count;
      for (const auto& c : s.best)
        std::cout << "  " << seq_text(c.sequence) << " rho^2=" << fixed(c.certificate.approx * c.certificate.approx);
      std::cout << '\n';
    }
    std::cout << "kernels:";
    for (const auto& c : res.minimizers) std::cout << "  F" << c.main_index + 1 << seq_text(c.sequence);
    std::cout << '\n';
  } else {
    emit(to_json(res));
  }
  return 0;
}

int run_main_trees(const Options& o) {
  const int k = need(o.k, "--k");
  if (k < 1 || k > kMainTreeCap) throw UsageError("--k must lie in [1, " + std::to_string(kMainTreeCap) + "]");
  auto mains = enumerate_main_trees(k);
  for (std::size_t i = 0; i < mains.size(); ++i) {
    const auto& mt = mains[i];
    if (o.output == "graph6") {
      std::cout << to_graph6(mt.realized.tree) << '\n';
    } else if (o.output == "table") {
      std::cout << "F" << i + 1 << "  d=" << mt.desc.d << "  levels=" << mt.desc.levels.size() << "  "
                << to_graph6(mt.realized.tree) << '\n';
    } else {
      emit({{"k", k},
            {"index", i + 1},
            {"descriptor", to_json(mt.desc)},
            {"graph6", to_graph6(mt.realized.tree)},
            {"odd", mt.realized.odd_set},
            {"even", mt.realized.even_set},
            {"validation", to_json(validate_structure(mt.realized))}});
    }
  }
  return 0;
}

int run_verify(const Options& o) {
  if (o.suite.empty()) throw UsageError("--suite is required");
  SuiteReport rep;
  try {
    rep = run_suite(o.suite, o.jobs, o.tol);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.output == "json") {
    emit(to_json(rep));
  } else {
    for (const auto& n : rep.notes) std::cout << "  " << n << '\n';
    for (const auto& d : rep.diffs) std::cout << "- " << d << '\n';
    std::cout << rep.suite << ": " << (rep.ok() ? "ok" : "MISMATCH") << " (" << rep.checks << " checks, "
              << rep.diffs.size() << " diffs)\n";
  }
  return rep.ok() ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol", o.tol, "numeric screening tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--output", o.output, "json, graph6 or table")->check(CLI::IsMember({"json", "graph6", "table"}));
  cmd->add_option("--jobs", o.jobs, "worker threads (0 = all cores)")->envname("SPECMIN_JOBS")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum spectral radius trees for a given order and independence number"};
  app.require_subcommand(1);
  Options o;

  auto* minimize = app.add_subcommand("minimize", "minimizer trees for (n, alpha = n - k)");
  minimize->add_option("--n", o.n)->required();
  minimize->add_option("--k", o.k)->required();
  minimize->add_option("--space", o.space, "search space when routed to the oracle");
  add_common(minimize, o);

  auto* kernel = app.add_subcommand("kernel", "kernel search for (k, r)");
  kernel->add_option("--k", o.k)->required();
  kernel->add_option("--r", o.r)->required();
  add_common(kernel, o);

  auto* mains = app.add_subcommand("main-trees", "main trees for k");
  mains->add_option("--k", o.k)->required();
  add_common(mains, o);

  auto* oracle = app.add_subcommand("oracle", "exhaustive minimizers for (n, alpha)");
  oracle->add_option("--n", o.n)->required();
  oracle->add_option("--alpha", o.alpha)->required();
  oracle->add_option("--space", o.space)->check(CLI::IsMember({"trees", "connected"}));
  add_common(oracle, o);

  auto* verify = app.add_subcommand("verify", "reproduce the published tables");
  verify->add_option("--suite", o.suite)->required()->check(
      CLI::IsMember({"tables-1to4", "k5", "k6", "oracle-small"}));
  add_common(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*minimize) return run_minimize(o);
    if (*kernel) return run_kernel(o);
    if (*mains) return run_main_trees(o);
    if (*oracle) return run_oracle(o, need(o.n, "--n"), need(o.alpha, "--alpha"));
    if (*verify) return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
