#include "doctest.h"

#include <set>

#include <cmath>

#include "specmin/canonical.hpp"
#include "specmin/graph_ops.hpp"
#include "specmin/independence.hpp"
#include "specmin/minimizer.hpp"

using namespace specmin;

TEST_CASE("lift plans") {
  auto p = make_plan(104, 5);
  CHECK(p.r == 0);
  CHECK(p.n0 == 69);
  CHECK(p.ell == 7);
  auto q = make_plan(69, 5);
  CHECK(q.r == 0);
  CHECK(q.ell == 0);
  CHECK_THROWS_AS(make_plan(60, 5), GraphError);
  CHECK_THROWS_AS(make_plan(9, 5), GraphError);
  CHECK_THROWS_AS(make_plan(9, 0), GraphError);
}

TEST_CASE("construct minimizers examples") {
  auto res = construct_minimizers(make_plan(104, 5));
  REQUIRE(res.trees.size() == 1);
  const auto& t = res.trees[0];
  CHECK(t.main_index == 0);
  CHECK(t.sequence == LeafSequence{20, 15, 20, 20, 20});
  CHECK(std::abs(t.certificate.approx - std::sqrt(20 + std::sqrt(5.0))) < 1e-10);
  CHECK(t.lift_agrees);

  auto k2 = construct_minimizers(make_plan(9, 2));
  REQUIRE(k2.trees.size() == 1);
  CHECK(k2.trees[0].canonical == canonical_form(attach_leaves(path_graph(3), {{0, 3}, {2, 3}})));
  CHECK(std::abs(k2.trees[0].certificate.approx - std::sqrt(5.0)) < 1e-12);

  for (int n : {2, 3, 10, 31}) {
    auto k1 = construct_minimizers(make_plan(n, 1));
    REQUIRE(k1.trees.size() == 1);
    CHECK(k1.trees[0].canonical == canonical_form(star_graph(n)));
    CHECK(std::abs(k1.trees[0].certificate.approx - std::sqrt(n - 1.0)) < 1e-12);
  }
}

TEST_CASE("closed form checks") {
  auto a = closed_form_check(construct_minimizers(make_plan(53, 5)));
  CHECK(a.known);
  CHECK(a.ok);
  CHECK(a.expected_rho2 == doctest::Approx(12.0));

  auto b = construct_minimizers(make_plan(81, 6));
  CHECK(b.trees.size() == 6);
  auto bc = closed_form_check(b);
  CHECK(bc.ok);
  CHECK(bc.expected_rho2 == doctest::Approx(15.0));
  CHECK(bc.expected_rho2 == doctest::Approx((81 + 9) / 6.0));

  auto c = closed_form_check(construct_minimizers(make_plan(21, 3)));
  CHECK(c.ok);
  CHECK(c.certified_rho2 == doctest::Approx(8.0).epsilon(1e-12));

  auto d = closed_form_check(construct_minimizers(make_plan(70, 5)));
  CHECK(d.ok);
  CHECK(d.tolerance == 5e-5);
}

TEST_CASE("bookkeeping on every constructed minimizer") {
  for (int k = 1; k <= 6; ++k) {
    for (int r = 0; r < k; ++r) {
      int n0 = make_kernel_problem(k, r).n0;
      while (n0 < 2 * k) n0 += k;
      for (int n : {n0, n0 + 3 * k}) {
        auto res = construct_minimizers(make_plan(n, k), 0);
        REQUIRE(!res.trees.empty());
        CHECK(res.trees.size() == construct_minimizers(make_plan(n0, k), 0).trees.size());
        for (const auto& t : res.trees) {
          CHECK(t.tree.vertex_count() == n);
          CHECK(t.alpha == n - k);
          CHECK(independence_number(t.tree).alpha == n - k);
          CHECK(t.leaves == 2 * t.alpha - n + 1);
          CHECK(t.lift_agrees);
          CHECK(compare_radii(t.certificate, t.lifted) == 0);
        }
      }
    }
  }
}

TEST_CASE("radius grows with n inside a family") {
  for (int k = 2; k <= 6; ++k) {
    for (int r = 0; r < k; ++r) {
      int n0 = make_kernel_problem(k, r).n0;
      auto a = construct_minimizers(make_plan(n0 + k, k), 0);
      auto b = construct_minimizers(make_plan(n0 + 2 * k, k), 0);
      CHECK(compare_radii(a.trees.front().certificate, b.trees.front().certificate) < 0);
    }
  }
}

TEST_CASE("co-minimizer multiplicities survive the lift") {
  const std::map<std::pair<int, int>, std::size_t> expected = {
      {{4, 0}, 2}, {{4, 2}, 3}, {{5, 4}, 3}, {{6, 0}, 3}, {{6, 1}, 10}, {{6, 4}, 6}};
  for (auto [kr, count] : expected) {
    auto [k, r] = kr;
    int n0 = make_kernel_problem(k, r).n0;
    auto res = construct_minimizers(make_plan(n0 + 4 * k, k), 0);
    CHECK_MESSAGE(res.trees.size() == count, "k=", k, " r=", r);
    std::set<std::string> forms;
    for (const auto& t : res.trees) forms.insert(t.canonical);
    CHECK(forms.size() == count);
    CHECK(std::is_sorted(res.trees.begin(), res.trees.end(),
                         [](const MinimizerTree& x, const MinimizerTree& y) { return x.canonical < y.canonical; }));
  }
}

TEST_CASE("minimizer json") {
  auto j = to_json(construct_minimizers(make_plan(104, 5)));
  CHECK(j["n0"] == 69);
  CHECK(j["ell"] == 7);
  CHECK(j["minimizers"].size() == 1);
  CHECK(j["minimizers"][0]["assignment"] == nlohmann::json::array({20, 15, 20, 20, 20}));
  CHECK(j["rho2_closed_form_if_known"] == "13+sqrt5 + 7");
}
