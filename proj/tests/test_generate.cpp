#include <gtest/gtest.h>

#include "support.hpp"

using namespace phylolattice;
using namespace testing_support;

namespace {

// Minimax path lengths over the complete graph.
std::vector<double> minimax_oracle(const PhyloNetwork& d) {
  const std::size_t n = d.size();
  std::vector<double> m = d.entries();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] = std::min(m[i * n + j], std::max(m[i * n + k], m[k * n + j]));
  return m;
}

// UPGMA recomputing every average from the original matrix.
std::vector<double> upgma_oracle(const PhyloNetwork& d) {
  const std::size_t n = d.size();
  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < n; ++i) clusters.push_back({i});
  std::vector<double> u(n * n, 0.0);
  while (clusters.size() > 1) {
    double best = kInfinity;
    std::size_t a = 0, b = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i)
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        double sum = 0;
        for (std::size_t x : clusters[i])
          for (std::size_t y : clusters[j]) sum += d(x, y);
        const double avg = sum / static_cast<double>(clusters[i].size() * clusters[j].size());
        if (avg < best) {
          best = avg;
          a = i;
          b = j;
        }
      }
    for (std::size_t x : clusters[a])
      for (std::size_t y : clusters[b]) u[x * n + y] = u[y * n + x] = best;
    clusters[a].insert(clusters[a].end(), clusters[b].begin(), clusters[b].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(b));
  }
  return u;
}

}  // namespace

TEST(Generator, SingleTaxon) {
  const auto trees = gen_random_treegrams({1, 3, 5, Linkage::upgma});
  ASSERT_EQ(trees.size(), 3u);
  for (const auto& t : trees) EXPECT_EQ(t.network().entries(), std::vector<double>{0});
  EXPECT_THROW(gen_random_treegrams({0, 3, 5, Linkage::upgma}), ValidationError);
  EXPECT_THROW(gen_random_treegrams({3, 0, 5, Linkage::upgma}), ValidationError);
}

TEST(Generator, Uniform01StaysInRange) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = uniform01(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Generator, DeterministicInTheSeed) {
  for (const Linkage l : {Linkage::upgma, Linkage::single}) {
    const auto a = gen_random_treegrams({12, 5, 99, l});
    const auto b = gen_random_treegrams({12, 5, 99, l});
    const auto c = gen_random_treegrams({12, 5, 100, l});
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a[k].network().entries(), b[k].network().entries());
      EXPECT_EQ(serialize_matrix_csv(a[k].network()), serialize_matrix_csv(b[k].network()));
    }
    EXPECT_NE(a[0].network().entries(), c[0].network().entries());
    EXPECT_EQ(a[0].taxa().label(11), "t11");
  }
}

TEST(Linkage, Parsing) {
  EXPECT_EQ(linkage_from_string("upgma"), Linkage::upgma);
  EXPECT_EQ(linkage_from_string("single-linkage"), Linkage::single);
  EXPECT_THROW(linkage_from_string("ward"), std::invalid_argument);
}

TEST(Linkage, UpgmaExample) {
  const PhyloNetwork d(TaxaSet{"a", "b", "c"}, std::vector<double>{0, 2, 6, 2, 0, 8, 6, 8, 0});
  EXPECT_EQ(upgma(d).network().entries(), (std::vector<double>{0, 2, 7, 2, 0, 7, 7, 7, 0}));
  EXPECT_EQ(single_linkage(d).network().entries(), (std::vector<double>{0, 2, 6, 2, 0, 6, 6, 6, 0}));
}

TEST(Linkage, MatchesOracles) {
  std::mt19937_64 rng(80);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_dissimilarity(TaxaSet::numbered(1 + uniform_index(rng, 12), "t"), rng);
    const auto sl = single_linkage(d);
    EXPECT_EQ(sl.network().entries(), minimax_oracle(d));
    const auto up = upgma(d);
    EXPECT_TRUE(is_ultranetwork(up.network()));
    const auto expected = upgma_oracle(d);
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(up.network().entries()[i], expected[i], 1e-12);
  }
  // Integer matrices with ties still give ultrametrics.
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_network(1 + uniform_index(rng, 9), rng, 3, true);
    EXPECT_TRUE(is_ultranetwork(upgma(d).network()));
    EXPECT_EQ(single_linkage(d).network().entries(), minimax_oracle(d));
  }
}

TEST(Experiment, SingleTree) {
  const auto trees = gen_random_treegrams({5, 1, 3, Linkage::upgma});
  for (const JoinMode mode : {JoinMode::cliquegram, JoinMode::facegram}) {
    const auto rows = bottleneck_progression(trees, mode);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].k, 1u);
    EXPECT_EQ(rows[0].distance, 0.0);
  }
  EXPECT_THROW(bottleneck_progression(std::span<const Ultranetwork>(), JoinMode::facegram), ValidationError);
}

TEST(Experiment, PartialJoinsAreMonotoneAndEndAtZero) {
  for (const Linkage l : {Linkage::upgma, Linkage::single}) {
    const auto trees = gen_random_treegrams({8, 9, 21, l});
    for (const JoinMode mode : {JoinMode::cliquegram, JoinMode::facegram}) {
      const auto joins = partial_joins(trees, mode);
      ASSERT_EQ(joins.size(), trees.size());
      std::vector<Gram> grams;
      for (const auto& t : trees) grams.push_back(treegram_from_ultranetwork(t));
      EXPECT_EQ(joins.back(), join_grams(grams, mode));
      for (std::size_t k = 0; k + 1 < joins.size(); ++k) EXPECT_TRUE(gram_leq(joins[k], joins[k + 1]));

      const auto rows = bottleneck_progression(trees, mode, 2);
      EXPECT_EQ(rows.back().distance, 0.0);
      for (const auto& r : rows) EXPECT_TRUE(r.below_next);
      EXPECT_EQ(rows.front().distance, bottleneck_distance(mergegram(grams[0]), mergegram(joins.back())));
    }
  }
}

TEST(Experiment, CsvFormat) {
  const std::vector<ProgressionRow> rows{{1, 0.5, true}, {2, 0, true}};
  EXPECT_EQ(progression_csv(rows, "facegram"), "mode,k,bottleneck,monotone\nfacegram,1,0.5,1\nfacegram,2,0,1\n");
}
