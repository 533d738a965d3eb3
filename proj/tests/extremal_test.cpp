#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "sigmat/extremal.hpp"
#include "sigmat/invariants.hpp"
#include "sigmat/oracle.hpp"

using namespace sigmat;

namespace {

// ceil(n/4), and floor(n/4) lowered by one when 4 | n.
std::int64_t expected_ceil(std::int64_t n) { return (n + 3) / 4; }
std::int64_t expected_floor(std::int64_t n) { return n % 4 == 0 ? n / 4 - 1 : n / 4; }

}  // namespace

TEST(Constructors, SplitAndBipartite) {
  const Graph s = make_split(2, 6);
  EXPECT_EQ(s.order(), 8);
  EXPECT_EQ(sigma_t(s), 300);
  EXPECT_EQ(sigma_t(make_complete_bipartite(2, 3)), 6);
  EXPECT_TRUE(is_complete_bipartite(make_complete_bipartite(2, 3)));
  EXPECT_TRUE(is_star(make_star(7)));
  EXPECT_TRUE(is_path(make_path(7)));
  EXPECT_THROW(make_split(0, 3), std::domain_error);
  EXPECT_THROW(make_complete_bipartite(0, 3), std::domain_error);
}

TEST(Formulas, Split) {
  EXPECT_EQ(sigma_t_split_formula(2, 8), 300);
  EXPECT_EQ(sigma_t_split_formula(1, 5), 36);
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(sigma_t_split_formula(n - 1, n), 0);
  EXPECT_THROW(sigma_t_split_formula(0, 5), std::domain_error);
  EXPECT_THROW(sigma_t_split_formula(5, 5), std::domain_error);
}

TEST(Formulas, Bipartite) {
  EXPECT_EQ(sigma_t_bipartite_formula(1, 9), 576);
  EXPECT_EQ(sigma_t_bipartite_formula(2, 8), 576);
  for (int h = 1; h <= 10; ++h) EXPECT_EQ(sigma_t_bipartite_formula(h, h), 0);
  EXPECT_EQ(sigma_t_bipartite_formula(2, 3), 6);
  for (int n = 3; n <= 31; n += 2) {
    EXPECT_EQ(sigma_t_bipartite_formula(n / 2, n - n / 2), (n / 2) * (n - n / 2));
  }
}

TEST(FormulasProperty, AgreeWithConstructors) {
  for (int n = 2; n <= 40; ++n) {
    for (int x = 1; x <= n - 1; ++x) {
      ASSERT_EQ(sigma_t_split_formula(x, n), sigma_t(make_split(x, n - x)));
    }
    for (int n1 = 1; n1 <= n - 1; ++n1) {
      const Graph g = make_complete_bipartite(n1, n - n1);
      ASSERT_EQ(sigma_t_bipartite_formula(n1, n - n1), sigma_t(g));
      ASSERT_TRUE(is_bipartite(g));
      ASSERT_TRUE(is_triangle_free(g));
    }
  }
}

TEST(CriticalPoint, Examples) {
  const CriticalPoint eight = split_critical_point(8);
  EXPECT_NEAR(eight.value, (38 - std::sqrt(548.0)) / 8, 1e-12);
  EXPECT_NEAR(eight.value, 1.8238, 1e-4);
  EXPECT_EQ(eight.ceil, 2);
  EXPECT_EQ(eight.floor, 1);

  const CriticalPoint five = split_critical_point(5);
  EXPECT_NEAR(five.value, 1.0679, 1e-4);
  EXPECT_EQ(five.ceil, 2);
  EXPECT_EQ(five.floor, 1);

  const CriticalPoint four = split_critical_point(4);
  EXPECT_NEAR(four.value, (18 - std::sqrt(132.0)) / 8, 1e-12);
  EXPECT_EQ(four.ceil, 1);
  EXPECT_EQ(four.floor, 0);

  EXPECT_THROW(split_critical_point(1), std::domain_error);
}

TEST(CriticalPoint, ClosedFormsUpToOneHundredThousand) {
  for (std::int64_t n = 2; n <= 100000; ++n) {
    const CriticalPoint cp = split_critical_point(n);
    ASSERT_EQ(cp.ceil, expected_ceil(n)) << n;
    ASSERT_EQ(cp.floor, expected_floor(n)) << n;
  }
}

TEST(CriticalPoint, LargeOrdersStayExact) {
  for (std::int64_t n : {std::int64_t{1} << 30, (std::int64_t{1} << 36) + 1, (std::int64_t{1} << 40)}) {
    const CriticalPoint cp = split_critical_point(n);
    EXPECT_EQ(cp.ceil, expected_ceil(n));
    EXPECT_EQ(cp.floor, expected_floor(n));
  }
}

TEST(SplitOptimum, Examples) {
  const SplitOptimum eight = max_split_sigma_t(8);
  EXPECT_EQ(eight.x, 2);
  EXPECT_EQ(eight.value, 300);
  EXPECT_TRUE(eight.agrees);

  const SplitOptimum five = max_split_sigma_t(5);
  EXPECT_EQ(five.x, 1);
  EXPECT_EQ(five.value, 36);

  const SplitOptimum seven = max_split_sigma_t(7);
  EXPECT_EQ(seven.x, 2);
  EXPECT_EQ(seven.value, 160);
  EXPECT_EQ(seven.scan_argmax, (std::vector<std::int64_t>{2}));

  EXPECT_THROW(max_split_sigma_t(2), std::domain_error);
}

TEST(SplitOptimum, CaseRuleMatchesScan) {
  for (int n = 3; n <= 40; ++n) {
    const SplitOptimum opt = max_split_sigma_t(n);
    std::int64_t best = 0;
    for (int y = 1; y <= n - 1; ++y) best = std::max(best, sigma_t_split_formula(y, n));
    ASSERT_EQ(opt.value, best) << n;
    ASSERT_TRUE(opt.agrees) << n;
  }
}

TEST(BipartiteOptimum, Examples) {
  const BipartiteOptimum ten = max_bipartite_split(10);
  EXPECT_TRUE(ten.tie);
  EXPECT_EQ(ten.n1, 1);
  EXPECT_EQ(ten.tie_set, (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(ten.value, 576);

  const BipartiteOptimum eleven = max_bipartite_split(11);
  EXPECT_FALSE(eleven.tie);
  EXPECT_EQ(eleven.n1, 2);
  EXPECT_EQ(eleven.n2, 9);

  const BipartiteOptimum seven = max_bipartite_split(7);
  EXPECT_EQ(seven.n1, 1);
  EXPECT_EQ(seven.value, 150);
  EXPECT_EQ(seven.candidate_floor, 1);
  EXPECT_EQ(seven.candidate_ceil, 2);
  EXPECT_TRUE(seven.winner_in_candidates);

  EXPECT_THROW(max_bipartite_split(1), std::domain_error);
}

TEST(BipartiteOptimum, CandidatesAreFloorAndCeil) {
  for (int n = 2; n <= 300; ++n) {
    const BipartiteOptimum opt = max_bipartite_split(n);
    const double c = n * (2 - std::sqrt(2.0)) / 4;
    ASSERT_EQ(opt.candidate_floor, static_cast<std::int64_t>(std::floor(c))) << n;
    ASSERT_EQ(opt.candidate_ceil, static_cast<std::int64_t>(std::ceil(c))) << n;
    std::int64_t best = 0;
    for (int t = 1; t < n; ++t) best = std::max(best, sigma_t_bipartite_formula(t, n - t));
    ASSERT_EQ(opt.value, best);
  }
}

TEST(KPartite, Examples) {
  const KPartitePart k32[] = {{3, 0}, {2, 0}};
  EXPECT_EQ(make_generalized_kpartite(k32), make_complete_bipartite(3, 2));

  const KPartitePart matched[] = {{4, 1}, {1, 0}};
  const Graph g = make_generalized_kpartite(matched);
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 2 + 4);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_EQ(g.degree(4), 4);
  EXPECT_TRUE(is_generalized_complete_kpartite(g));
  EXPECT_EQ(sigma(g), sigma_t(g));

  const KPartitePart triangle[] = {{3, 2}};
  EXPECT_EQ(make_generalized_kpartite(triangle), make_complete(3));
  EXPECT_EQ(sigma_t(make_generalized_kpartite(triangle)), 0);
}

TEST(KPartite, RejectsInfeasibleParts) {
  const KPartitePart odd[] = {{3, 1}};
  EXPECT_THROW(make_generalized_kpartite(odd), std::domain_error);
  const KPartitePart too_dense[] = {{3, 3}};
  EXPECT_THROW(make_generalized_kpartite(too_dense), std::domain_error);
  EXPECT_THROW(make_generalized_kpartite({}), std::domain_error);
}

TEST(KPartite, Recognition) {
  EXPECT_TRUE(is_generalized_complete_kpartite(make_complete_bipartite(2, 3)));
  EXPECT_FALSE(is_generalized_complete_kpartite(make_path(4)));
  EXPECT_TRUE(is_generalized_complete_kpartite(make_cycle(5)));
}

TEST(KPartiteProperty, ConstructionsAreRecognised) {
  for (int a = 1; a <= 6; ++a) {
    for (int ra = 0; ra < a; ++ra) {
      if (ra * a % 2) continue;
      for (int b = 1; b <= 5; ++b) {
        for (int rb = 0; rb < b; ++rb) {
          if (rb * b % 2) continue;
          const KPartitePart parts[] = {{a, ra}, {b, rb}};
          const Graph g = make_generalized_kpartite(parts);
          for (int v = 0; v < a; ++v) ASSERT_EQ(g.degree(v), ra + b);
          for (int v = a; v < a + b; ++v) ASSERT_EQ(g.degree(v), rb + a);
          ASSERT_TRUE(is_generalized_complete_kpartite(g));
          ASSERT_EQ(sigma(g), sigma_t(g));
        }
      }
    }
  }
}

TEST(KPartiteProperty, EquivalentToEqualIndicesUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    enumerate_graphs(n, [](const Graph& g) {
      ASSERT_EQ(is_generalized_complete_kpartite(g), sigma(g) == sigma_t(g));
    });
  }
}

TEST(KPartiteProperty, TreesAreStars) {
  for (int n = 2; n <= 7; ++n) {
    enumerate_trees(n, [](const Graph& t) {
      ASSERT_EQ(is_generalized_complete_kpartite(t), is_star(t));
    });
  }
}
