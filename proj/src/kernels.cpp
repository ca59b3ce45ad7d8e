#include "specmin/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "specmin/canonical.hpp"
#include "specmin/io.hpp"
#include "specmin/parallel.hpp"
#include "specmin/reference.hpp"

namespace specmin {

KernelProblem make_kernel_problem(int k, int r) {
  if (k < 1) throw GraphError("kernel problem: k must be positive");
  if (r < 0 || r >= k) throw GraphError("kernel problem: r must lie in [0, k-1]");
  KernelProblem p;
  p.k = k;
  p.r = r;
  p.n0 = 3 * k * k - k - 1 - (k - 1) * r;
  p.total_leaves = p.n0 - 2 * k + 1;
  p.lbar = p.total_leaves / k;
  return p;
}

std::pair<int, int> leaf_bounds(const KernelProblem& p, const MainTree& mt, Vertex u) {
  const auto& even = mt.realized.even_set;
  if (!std::binary_search(even.begin(), even.end(), u)) throw GraphError("leaf_bounds: vertex is not in V2*");
  const int deg = mt.realized.tree.degree(u);
  int lo, hi;
  if (p.r <= 4) {
    lo = p.lbar + p.r - p.k + 1 - deg;
    hi = p.lbar + 3 - deg;
  } else {
    lo = p.lbar + p.r - 2 * p.k + 2 - deg;
    hi = p.lbar + 4 - deg;
  }
  return {std::max(lo, 0), hi};
}

LeafAssignment to_assignment(const MainTree& mt, const LeafSequence& seq) {
  const auto& even = mt.realized.even_set;
  if (seq.size() != even.size()) throw GraphError("leaf sequence length differs from |V2*|");
  LeafAssignment a;
  for (std::size_t i = 0; i < seq.size(); ++i) a[even[i]] = seq[i];
  return a;
}

std::vector<LeafSequence> enumerate_leaf_sequences(const KernelProblem& p, const MainTree& mt) {
  const auto& even = mt.realized.even_set;
  const std::size_t m = even.size();
  std::vector<int> lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) std::tie(lo[i], hi[i]) = leaf_bounds(p, mt, even[i]);
  // Suffix sums bound what the remaining positions can still absorb.
  std::vector<int> lo_rest(m + 1, 0), hi_rest(m + 1, 0);
  for (std::size_t i = m; i-- > 0;) {
    lo_rest[i] = lo_rest[i + 1] + lo[i];
    hi_rest[i] = hi_rest[i + 1] + std::max(hi[i], lo[i] - 1);
  }

  std::vector<LeafSequence> out;
  std::set<std::string> seen;
  std::vector<int> colours(static_cast<std::size_t>(mt.realized.tree.vertex_count()), -1);
  LeafSequence seq(m, 0);
  auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == m) {
      if (remaining != 0) return;
      for (std::size_t j = 0; j < m; ++j) colours[even[j]] = seq[j];
      if (seen.insert(canonical_form(mt.realized.tree, colours)).second) out.push_back(seq);
      return;
    }
    for (int v = lo[i]; v <= hi[i]; ++v) {
      int rest = remaining - v;
      if (rest < lo_rest[i + 1]) break;
      if (rest > hi_rest[i + 1]) continue;
      seq[i] = v;
      self(self, i + 1, rest);
    }
  };
  recurse(recurse, 0, p.total_leaves);
  return out;
}

namespace {

// Exact minima among `pool`, ties kept in input order.
std::vector<KernelCandidate> exact_minima(std::vector<KernelCandidate> pool) {
  std::vector<KernelCandidate> best;
  for (auto& c : pool) {
    if (best.empty()) {
      best.push_back(std::move(c));
      continue;
    }
    auto ord = compare_radii(c.certificate, best.front().certificate);
    if (ord < 0) {
      best.clear();
      best.push_back(std::move(c));
    } else if (ord == 0) {
      best.push_back(std::move(c));
    }
  }
  return best;
}

}  // namespace

KernelResult kernel_search(int k, int r, int jobs, double tol) {
  if (k > kKernelExhaustiveCap) throw GraphError("kernel_search: k above exhaustive cap " + std::to_string(kKernelExhaustiveCap));
  KernelResult result;
  result.problem = make_kernel_problem(k, r);
  const auto mains = enumerate_main_trees(k);

  struct Screened {
    std::vector<LeafSequence> seqs;
    std::vector<double> rho;
  };
  std::vector<Screened> screened(mains.size());
  for (std::size_t i = 0; i < mains.size(); ++i) {
    screened[i].seqs = enumerate_leaf_sequences(result.problem, mains[i]);
    screened[i].rho.assign(screened[i].seqs.size(), 0.0);
  }
  // One flat index space over (main tree, sequence) keeps workers busy.
  std::vector<std::pair<std::size_t, std::size_t>> jobs_list;
  for (std::size_t i = 0; i < mains.size(); ++i)
    for (std::size_t j = 0; j < screened[i].seqs.size(); ++j) jobs_list.emplace_back(i, j);
  parallel_for(jobs_list.size(), jobs, [&](std::size_t t) {
    auto [i, j] = jobs_list[t];
    Graph g = attach_leaves(mains[i].realized.tree, to_assignment(mains[i], screened[i].seqs[j]));
    screened[i].rho[j] = tree_radius_numeric(g);
  });

  auto make_candidate = [&](std::size_t i, std::size_t j) {
    KernelCandidate c;
    c.main_index = static_cast<int>(i);
    c.sequence = screened[i].seqs[j];
    c.tree = attach_leaves(mains[i].realized.tree, to_assignment(mains[i], c.sequence));
    c.certificate = certify_largest_root(char_poly_tree(c.tree), screened[i].rho[j], tol);
    c.canonical = canonical_form(c.tree);
    return c;
  };

  double global = INFINITY;
  for (std::size_t i = 0; i < mains.size(); ++i) {
    MainTreeSummary summary;
    summary.main_tree = mains[i];
    summary.count = static_cast<long>(screened[i].seqs.size());
    const auto& rho = screened[i].rho;
    if (!rho.empty()) {
      double low = *std::min_element(rho.begin(), rho.end());
      std::vector<std::size_t> near;
      for (std::size_t j = 0; j < rho.size(); ++j)
        if (rho[j] <= low + kScreenMargin) near.push_back(j);
      std::vector<KernelCandidate> pool(near.size());
      parallel_for(near.size(), jobs, [&](std::size_t t) { pool[t] = make_candidate(i, near[t]); });
      summary.best = exact_minima(std::move(pool));
      global = std::min(global, low);
    }
    result.per_main_tree.push_back(std::move(summary));
  }

  std::vector<KernelCandidate> pool;
  for (std::size_t i = 0; i < mains.size(); ++i) {
    const auto& rho = screened[i].rho;
    if (rho.empty() || *std::min_element(rho.begin(), rho.end()) > global + kScreenMargin) continue;
    for (const auto& c : result.per_main_tree[i].best) pool.push_back(c);
  }
  result.minimizers = exact_minima(std::move(pool));
  std::sort(result.minimizers.begin(), result.minimizers.end(),
            [](const KernelCandidate& a, const KernelCandidate& b) { return a.canonical < b.canonical; });
  return result;
}

nlohmann::json to_json(const KernelCandidate& c, bool with_certificate) {
  nlohmann::json j = {{"main_tree", c.main_index + 1},
                      {"assignment", c.sequence},
                      {"graph6", to_graph6(c.tree)},
                      {"rho", c.certificate.approx},
                      {"rho2", c.certificate.approx * c.certificate.approx}};
  if (with_certificate) j["certificate"] = to_json(c.certificate);
  return j;
}

nlohmann::json to_json(const KernelResult& r) {
  const auto& p = r.problem;
  auto form = closed_form(p.k, p.r);
  nlohmann::json per = nlohmann::json::array();
  for (const auto& s : r.per_main_tree) {
    nlohmann::json best = nlohmann::json::array();
    for (const auto& c : s.best) {
      auto j = to_json(c);
      bool global = !r.minimizers.empty() && compare_radii(c.certificate, r.minimizers.front().certificate) == 0;
      j["rho2_closed_form_if_known"] = global && form ? nlohmann::json(form->text) : nlohmann::json(nullptr);
      best.push_back(std::move(j));
    }
    per.push_back({{"main_tree", to_json(s.main_tree.desc)}, {"count", s.count}, {"best", best}});
  }
  nlohmann::json mins = nlohmann::json::array();
  for (const auto& c : r.minimizers) mins.push_back(to_json(c));
  return {{"problem", {{"k", p.k}, {"r", p.r}, {"n0", p.n0}, {"total_leaves", p.total_leaves}, {"lbar", p.lbar}}},
          {"rho2_closed_form_if_known", form ? nlohmann::json(form->text) : nlohmann::json(nullptr)},
          {"per_main_tree", per},
          {"minimizers", mins}};
}

}  // namespace specmin
