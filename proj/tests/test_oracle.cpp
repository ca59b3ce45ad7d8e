#include "doctest.h"

#include <set>

#include <algorithm>
#include <numeric>

#include "specmin/canonical.hpp"
#include "specmin/graph_ops.hpp"
#include "specmin/io.hpp"
#include "specmin/minimizer.hpp"
#include "specmin/oracle.hpp"

using namespace specmin;

namespace {

// Connected graphs on n vertices up to isomorphism by minimising the edge
// mask over all n! relabelings.
long brute_connected_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<std::vector<int>> index(n, std::vector<int>(n));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
    index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
  }
  std::set<unsigned> classes;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) edges.push_back(pairs[i]);
    if (!Graph::from_edges(n, edges).is_connected()) continue;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    unsigned best = ~0u;
    do {
      unsigned m = 0;
      for (auto [u, v] : edges) m |= 1u << index[perm[u]][perm[v]];
      best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return static_cast<long>(classes.size());
}

}  // namespace

TEST_CASE("free tree enumeration") {
  auto four = enumerate_free_trees(4);
  REQUIRE(four.size() == 2);
  std::set<std::string> forms{canonical_form(four[0]), canonical_form(four[1])};
  CHECK(forms == std::set<std::string>{canonical_form(path_graph(4)), canonical_form(star_graph(4))});
  CHECK(enumerate_free_trees(7).size() == 11);
  CHECK(enumerate_free_trees(9).size() == 47);
  const long counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320};
  for (int n = 1; n <= 16; ++n) {
    long c = 0;
    for_each_free_tree(n, [&](const Graph&) { ++c; });
    CHECK(c == counts[n - 1]);
  }
  CHECK_THROWS_AS(enumerate_free_trees(kFreeTreeCap + 1), GraphError);
  CHECK_THROWS_AS(enumerate_free_trees(0), GraphError);
}

TEST_CASE("the two tree generators agree") {
  for (int n = 1; n <= 14; ++n) {
    std::set<std::string> a, b;
    long ca = 0;
    for_each_free_tree(n, [&](const Graph& t) {
      ++ca;
      a.insert(canonical_form(t));
    });
    for (const auto& t : enumerate_free_trees(n, TreeGenerator::LeafAugmentation)) b.insert(canonical_form(t));
    CHECK(static_cast<long>(a.size()) == ca);
    CHECK_MESSAGE(a == b, "n=", n);
  }
}

TEST_CASE("connected graph enumeration") {
  CHECK(enumerate_connected_graphs(3).size() == 2);
  CHECK(enumerate_connected_graphs(4).size() == 6);
  CHECK(enumerate_connected_graphs(5).size() == 21);
  CHECK(brute_connected_count(4) == 6);
  CHECK(brute_connected_count(5) == 21);
  CHECK(brute_connected_count(6) == 112);
  CHECK(enumerate_connected_graphs(6).size() == 112);
  CHECK(enumerate_connected_graphs(7).size() == 853);
  for (const auto& g : enumerate_connected_graphs(6)) CHECK(g.is_connected());
  CHECK_THROWS_AS(enumerate_connected_graphs(kConnectedCap + 1), GraphError);
}

TEST_CASE("brute force examples") {
  auto star = brute_force_minimizer(8, 7, SearchSpace::Trees);
  REQUIRE(star.minimizers.size() == 1);
  CHECK(canonical_form(star.minimizers[0].graph) == canonical_form(star_graph(8)));
  CHECK(star.search_space_size == 23);
  CHECK(star.class_size == 1);

  auto t33 = brute_force_minimizer(9, 7, SearchSpace::Trees);
  REQUIRE(t33.minimizers.size() == 1);
  CHECK(canonical_form(t33.minimizers[0].graph) == canonical_form(attach_leaves(path_graph(3), {{0, 3}, {2, 3}})));
  CHECK(t33.minimizers[0].certificate.approx == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));

  auto p8 = brute_force_minimizer(8, 4, SearchSpace::Connected);
  REQUIRE(p8.minimizers.size() == 1);
  CHECK(p8.minimizers[0].is_tree);
  CHECK(canonical_form(p8.minimizers[0].graph) == canonical_form(path_graph(8)));
  CHECK(p8.search_space_size == 11117);

  CHECK_THROWS_AS(brute_force_minimizer(8, 8, SearchSpace::Trees), GraphError);
  CHECK_THROWS_AS(brute_force_minimizer(8, 2, SearchSpace::Trees), GraphError);  // no tree has alpha 2
}

TEST_CASE("non-tree classes escalate near ties") {
  auto k = brute_force_minimizer(6, 2, SearchSpace::Connected);
  CHECK(k.escalations >= 1);
  REQUIRE(!k.minimizers.empty());
  CHECK_FALSE(k.minimizers[0].is_tree);
}

TEST_CASE("structural audit") {
  for (int alpha = 5; alpha <= 9; ++alpha) {
    auto res = brute_force_minimizer(10, alpha, SearchSpace::Trees);
    auto audit = audit_structural_propositions(res);
    CHECK_MESSAGE(audit.ok(), "alpha=", alpha, " ", audit.failures.empty() ? "" : audit.failures[0]);
    CHECK(audit.passed.at("tree") == static_cast<int>(res.minimizers.size()));
  }
  // alpha = n - 2 forces diameter 4; the 6..2(n - alpha) range starts below n - 2
  for (const auto& m : brute_force_minimizer(12, 10, SearchSpace::Trees).minimizers) CHECK(m.graph.diameter() == 4);
  for (int alpha = 7; alpha <= 9; ++alpha) {
    for (const auto& m : brute_force_minimizer(12, alpha, SearchSpace::Trees).minimizers) {
      int d = m.graph.diameter();
      CHECK(d % 2 == 0);
      CHECK(d >= 6);
      CHECK(d <= 2 * (12 - alpha));
    }
  }
  auto nine = brute_force_minimizer(9, 8, SearchSpace::Trees);
  REQUIRE(nine.minimizers.size() == 1);
  CHECK(nine.minimizers[0].graph.diameter() == 2);

  // a non-tree minimizer is reported, not skipped
  OracleResult fake;
  fake.n = 4;
  fake.alpha = 2;
  fake.minimizers.push_back({Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), {}, false});
  auto bad = audit_structural_propositions(fake);
  CHECK_FALSE(bad.ok());
  CHECK(bad.failed.at("tree") == 1);
}

TEST_CASE("oracle agrees with the construction where it applies") {
  for (int n = 2; n <= 14; ++n) {
    for (int alpha = (n + 1) / 2; alpha <= n - 1; ++alpha) {
      int k = n - alpha;
      if (n < make_kernel_problem(k, (n + 1) % k).n0) continue;
      auto oracle = brute_force_minimizer(n, alpha, SearchSpace::Trees);
      auto built = construct_minimizers(make_plan(n, k));
      std::set<std::string> a, b;
      for (const auto& m : oracle.minimizers) a.insert(canonical_form(m.graph));
      for (const auto& t : built.trees) b.insert(t.canonical);
      CHECK_MESSAGE(a == b, "n=", n, " alpha=", alpha);
    }
  }
}

TEST_CASE("oracle json") {
  auto res = brute_force_minimizer(7, 5, SearchSpace::Trees);
  auto j = to_json(res);
  CHECK(j["space"] == "trees");
  CHECK(j["search_space_size"] == 11);
  CHECK(j["minimizers"][0]["graph6"] == to_graph6(res.minimizers[0].graph));
  auto a = to_json(audit_structural_propositions(res));
  CHECK(a["ok"] == true);
  CHECK(a["checks"]["tree"]["passed"] == 1);
}
