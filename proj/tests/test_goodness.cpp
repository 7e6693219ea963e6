#include <doctest.h>

#include "oracles.hpp"
#include "rgk/error.hpp"
#include "rgk/goodness.hpp"
#include "rgk/invariants.hpp"
#include "rgk/ramsey.hpp"

using namespace rgk;

namespace {

Graph path(int n) { return standard_graph(GraphKind::path, n); }
Graph empty(int n) { return standard_graph(GraphKind::empty, n); }
Graph complete(int n) { return standard_graph(GraphKind::complete, n); }
Graph fan() { return join(path(6), Graph(1)); }

}  // namespace

TEST_SUITE("goodness") {

TEST_CASE("snd fixtures") {
  for (int a : {1, 3, 5, 7}) CHECK(snd(a) == 2);
  CHECK(snd(2) == 3);
  CHECK(snd(6) == 4);
  CHECK(snd(60) == 7);
  CHECK(snd(12) == 5);
  CHECK_THROWS_AS(snd(0), PreconditionError);
}

TEST_CASE("snd is the least non-divisor") {
  for (long long a = 1; a <= 1000000; ++a) {
    const int s = snd(a);
    if (a % s == 0) FAIL("snd(" << a << ") divides it");
    for (int j = 1; j < s; ++j)
      if (a % j != 0) FAIL("snd(" << a << ") is not the least non-divisor");
  }
}

TEST_CASE("host template sizes") {
  CHECK(host_template(7, 0, path(7)) == copies(path(7), 7));
  CHECK(host_template(7, 1, path(7)).order() == 56);
  const Graph h = host_template(2, 1, complete(2));
  CHECK(h.order() == 6);
  CHECK(h == join(copies(complete(2), 2), empty(2)));
  CHECK(host_template(3, 2, path(3)).order() == 15);
  CHECK_THROWS_AS(host_template(2, 1, standard_graph(GraphKind::cycle, 3)), PreconditionError);
  for (int k1 = 0; k1 < 4; ++k1) {
    const Graph t = standard_graph(GraphKind::star, 4);
    CHECK(symmetry_is_valid(host_template(4, k1, t), host_template_symmetry(4, k1, t)));
  }
}

TEST_CASE("the fan is good for alpha = 60") {
  const auto cert = decide_goodness({fan(), 60, 7, {}});
  CHECK(cert.verdict == Verdict::good);
  CHECK(cert.trees.size() == 11);
  CHECK(cert.m == 7);
  CHECK(cert.chi == 3);
  CHECK(cert.s == 1);
  CHECK(cert.claimed_value.slope == 2);
  CHECK(cert.claimed_value.intercept == 2 * (7 * 60 - 1) + 1);
  for (const auto& e : cert.embeddings) CHECK(e.has_value());
  CHECK(recheck_certificate(fan(), cert));
}

TEST_CASE("K_2 + mK_1 and cliques are good") {
  for (int m = 0; m <= 4; ++m)
    for (int alpha = 1; alpha <= 6; ++alpha) {
      const Graph g = join(complete(2), empty(m));
      CHECK(decide_goodness({g, alpha, snd(alpha), {}}).verdict == Verdict::good);
    }
  for (int k = 1; k <= 3; ++k)
    for (int alpha = 1; alpha <= 6; ++alpha)
      CHECK(decide_goodness({complete(k + 1), alpha, snd(alpha), {}}).verdict == Verdict::good);
}

TEST_CASE("P_3 is not good for odd alpha") {
  const auto cert = decide_goodness({path(3), 3, 2, {}});
  CHECK(cert.verdict == Verdict::not_good);
  REQUIRE(cert.failing_tree);
  CHECK(cert.trees.trees[static_cast<std::size_t>(*cert.failing_tree)] == complete(2));
  REQUIRE(cert.refutation);
  CHECK(cert.refutation->blue_absent);
  CHECK(cert.refutation->red_avoids);
  CHECK(recheck_certificate(path(3), cert));
}

TEST_CASE("hypotheses are enforced by name") {
  try {
    decide_goodness({complete_multipartite({2, 2}), 3, 2, {}});
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    CHECK(e.hypothesis() == "s(G) = 1");
  }
  try {
    decide_goodness({complete(3), 2, 2, {}});
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    CHECK(e.hypothesis() == "p >= snd(alpha)");
  }
  try {
    decide_goodness({empty(3), 1, 2, {}});
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    CHECK(e.hypothesis() == "chi(G) >= 2");
  }
  CHECK_THROWS_AS(decide_goodness({complete(3), 1, 2, Family{0, 1}}), HypothesisError);
  CHECK_THROWS_AS(decide_goodness({complete(3), 0, 2, {}}), PreconditionError);
}

TEST_CASE("family sets the slope of the claimed value") {
  const auto cert = decide_goodness({complete(3), 2, 3, Family{2, 1}});
  CHECK(cert.h == 5);
  CHECK(cert.claimed_value.slope == 2 * 5);
  CHECK(cert.claimed_value.intercept == 2 * (3 * 2 - 1) + 1);
  const auto zero = decide_goodness({complete(3), 2, 3, Family{2, 0}});
  CHECK(zero.h == 4);
  CHECK(std::find_if(zero.notes.begin(), zero.notes.end(), [](const std::string& s) {
          return s.find("beta = 0") != std::string::npos;
        }) != zero.notes.end());
}

TEST_CASE("multisize variant") {
  const Graph k2m2 = join(complete(2), empty(2));
  const std::vector<int> s12{1, 2};
  CHECK(decide_goodness_multisize(k2m2, s12).verdict == Verdict::sufficient);
  const std::vector<int> s11{1, 1};
  CHECK(decide_goodness_multisize(complete(3), s11).verdict == Verdict::sufficient);
  const std::vector<int> s33{3, 3};
  const auto p3 = decide_goodness_multisize(path(3), s33);
  CHECK(p3.verdict == Verdict::inconclusive);
  CHECK(p3.tree_order == 2);
  const std::vector<int> s26{2, 6};
  CHECK(decide_goodness_multisize(complete(3), s26).tree_order == 3);
}

TEST_CASE("verdict does not depend on tree order or worker count") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (const Graph& g : enumerate_graphs(6)) {
    if (rng() % 4 != 0) continue;
    const auto prof = min_color_class(g);
    if (prof.chi < 2 || prof.s != 1) continue;
    for (int alpha : {2, 6}) {
      const GoodnessProblem prob{g, alpha, snd(alpha), {}};
      const auto fwd = decide_goodness(prob);
      DecideOptions rev;
      rev.reverse_tree_order = true;
      rev.jobs = 3;
      const auto back = decide_goodness(prob, rev);
      CHECK(fwd.verdict == back.verdict);
      DecideOptions all;
      all.exhaustive = true;
      const auto full = decide_goodness(prob, all);
      CHECK(full.verdict == fwd.verdict);
      CHECK(recheck_certificate(g, full));
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("parallel runs give identical certificates") {
  const GoodnessProblem prob{fan(), 60, 7, {}};
  const auto one = decide_goodness(prob);
  DecideOptions many;
  many.jobs = 4;
  const auto four = decide_goodness(prob, many);
  CHECK(one.embeddings == four.embeddings);
  CHECK(one.failing_trees == four.failing_trees);
}

TEST_CASE("odd alpha reduces to the matching host") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto prof = min_color_class(g);
      if (prof.chi < 2 || prof.s != 1) continue;
      const bool expected = oracle::matching_plus_independent(g, prof.chi - 1);
      CHECK((decide_goodness({g, 3, 2, {}}).verdict == Verdict::good) == expected);
    }
}

TEST_CASE("budget exhaustion is never a verdict") {
  DecideOptions tight;
  tight.budget = 2;
  CHECK_THROWS_AS(decide_goodness({fan(), 60, 7, {}}, tight), BudgetExhausted);
}

}  // TEST_SUITE
