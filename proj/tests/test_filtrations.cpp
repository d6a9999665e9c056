#include <gtest/gtest.h>

#include "support.hpp"

using namespace phylolattice;
using namespace testing_support;

TEST(Network, Validation) {
  const TaxaSet xy{"x", "y"};
  EXPECT_NO_THROW(PhyloNetwork(xy, std::vector<double>{0, 1, 1, 0}));
  // Symmetric, but N(y,y) = 2 exceeds N(x,y) = 1.
  try {
    PhyloNetwork(xy, std::vector<double>{0, 1, 1, 2});
    FAIL() << "expected a diagonal-condition violation";
  } catch (const ValidationError& e) {
    EXPECT_FALSE(e.diagnostics().empty());
  }
  EXPECT_THROW(PhyloNetwork(xy, std::vector<double>{0, 1, 2, 0}), ValidationError);
  EXPECT_THROW(PhyloNetwork(xy, std::vector<double>{0, std::nan(""), std::nan(""), 0}), ValidationError);
  EXPECT_THROW(PhyloNetwork(xy, std::vector<double>{0, 1, 1}), ValidationError);
}

TEST(Network, ListsEveryViolation) {
  const TaxaSet abc{"a", "b", "c"};
  try {
    PhyloNetwork(abc, std::vector<double>{0, 1, 2, 3, 0, 1, 2, 1, 5});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_GE(e.diagnostics().size(), 2u);  // (a,b) asymmetric, c's diagonal too large
  }
}

TEST(Network, UltranetworkCheck) {
  EXPECT_TRUE(is_ultranetwork(line_single_linkage({0, 1, 3, 7}).network()));
  EXPECT_FALSE(is_ultranetwork(line_metric({0, 1, 3})));
  EXPECT_TRUE(is_ultranetwork(PhyloNetwork(TaxaSet{"x"}, std::vector<double>{4})));
  EXPECT_THROW(Ultranetwork(line_metric({0, 1, 3})), ValidationError);
}

TEST(Network, VietorisRipsValue) {
  const auto n = line_metric({0, 1, 3, 7});
  EXPECT_EQ(vr_value(n, Face{0, 1, 2}), 3.0);
  EXPECT_EQ(vr_value(n, Face{2}), 0.0);
  EXPECT_EQ(vr_value(n, n.taxa().all()), 7.0);
  EXPECT_THROW(vr_value(n, Face{}), std::invalid_argument);
}

TEST(Network, VietorisRipsMonotone) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = random_network(1 + uniform_index(rng, 8), rng);
    const Face tau = random_face(n.size(), rng, 0.6);
    Face sigma = tau;
    sigma.erase(tau.first());
    if (!sigma.empty()) { EXPECT_LE(vr_value(n, sigma), vr_value(n, tau)); }
  }
}

TEST(Network, JoinIsEntrywiseMinimum) {
  const TaxaSet xyz{"x", "y", "z"};
  const PhyloNetwork u1(xyz, std::vector<double>{0, 1, 3, 1, 0, 3, 3, 3, 0});
  const PhyloNetwork u2(xyz, std::vector<double>{0, 3, 3, 3, 0, 1, 3, 1, 0});
  const PhyloNetwork nets[] = {u1, u2};
  const auto j = network_join(nets);
  EXPECT_EQ(j.at("x", "y"), 1.0);
  EXPECT_EQ(j.at("y", "z"), 1.0);
  EXPECT_EQ(j.at("x", "z"), 3.0);
  const PhyloNetwork same[] = {u1, u1};
  EXPECT_EQ(network_join(same).entries(), u1.entries());
}

TEST(Network, JoinIsGreatestLowerBoundOfEntries) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 6);
    std::vector<PhyloNetwork> nets;
    for (int k = 0; k < 3; ++k) nets.push_back(random_network(n, rng));
    const auto j = network_join(nets);
    for (std::size_t i = 0; i < n * n; ++i) {
      double lo = std::numeric_limits<double>::infinity();
      for (const auto& m : nets) {
        EXPECT_LE(j.entries()[i], m.entries()[i]);
        lo = std::min(lo, m.entries()[i]);
      }
      EXPECT_EQ(j.entries()[i], lo);
    }
  }
}

TEST(Network, DiameterBelowReachInUltranetworks) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = random_ultranetwork(1 + uniform_index(rng, 7), rng);
    const Face sigma = random_face(u.size(), rng, 0.5);
    const double diam = vr_value(u.network(), sigma);
    for (std::size_t y = 0; y < u.size(); ++y) {
      if (sigma.contains(y)) continue;
      double reach = 0.0;
      sigma.for_each([&](std::size_t x) { reach = std::max(reach, u(x, y)); });
      EXPECT_LE(diam, reach);
    }
  }
}

TEST(Surjection, RejectsNonSurjectiveMaps) {
  const TaxaSet xy{"x", "y"};
  EXPECT_THROW(Surjection(TaxaSet{"a", "b"}, xy, {0, 0}), ValidationError);
  EXPECT_THROW(Surjection(TaxaSet{"a"}, xy, {0, 1}), ValidationError);
  EXPECT_NO_THROW(Surjection(TaxaSet{"a", "b", "c"}, xy, {0, 0, 1}));
}

TEST(Pullback, Examples) {
  const TaxaSet x1{"x"};
  const auto constant = Filtration::from_function(x1, [](const Face&) { return 0.0; });
  const auto pulled = pullback_filtration(constant, Surjection(TaxaSet{"a", "b"}, x1, {0, 0}));
  EXPECT_EQ(pulled(Face{0}), 0.0);
  EXPECT_EQ(pulled(Face{0, 1}), 0.0);

  const TaxaSet xy{"x", "y"};
  const auto vr = Filtration::vietoris_rips(PhyloNetwork(xy, std::vector<double>{1, 2, 2, 0}));
  const auto z = pullback_filtration(vr, Surjection(TaxaSet{"a", "b", "c"}, xy, {0, 0, 1}));
  EXPECT_EQ(z(Face{0, 1}), vr(Face{0}));
  EXPECT_EQ(z(Face{0, 2}), 2.0);
  EXPECT_EQ(z(Face{2}), 0.0);
}

TEST(Pullback, MatchesDefinitionOnAllFaces) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 5);
    const bool vr = trial % 2 == 0;
    const Filtration f = vr ? Filtration::vietoris_rips(random_network(n, rng))
                            : Filtration::from_facegram(random_facegram(n, rng));
    const auto phi = random_surjection(f.taxa(), n + uniform_index(rng, 4), rng);
    const auto g = pullback_filtration(f, phi);
    for (std::size_t mask = 1; mask < (std::size_t{1} << phi.source().size()); ++mask) {
      const Face kappa = face_of_mask(mask);
      EXPECT_EQ(g(kappa), f(phi.image(kappa)));
      // Monotone under adding any element.
      for (std::size_t z = 0; z < phi.source().size(); ++z) {
        Face bigger = kappa;
        bigger.insert(z);
        EXPECT_LE(g(kappa), g(bigger));
      }
    }
  }
}

TEST(Pullback, BijectionPreservesInterleaving) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 6);
    const auto f = Filtration::from_facegram(random_facegram(n, rng));
    const auto g = Filtration::vietoris_rips(random_network(n, rng));
    const auto phi = random_surjection(f.taxa(), n, rng);
    EXPECT_EQ(filtration_interleaving(pullback_filtration(f, phi), pullback_filtration(g, phi)),
              filtration_interleaving(f, g));
  }
}

TEST(Interleaving, Examples) {
  const auto fx = Filtration::vietoris_rips(line_metric({0, 1, 3, 7}));
  const auto fy_raw = line_metric({0, 1, 5, 7});
  const auto fy = Filtration::vietoris_rips(PhyloNetwork(fx.taxa(), fy_raw.entries()));
  EXPECT_EQ(filtration_interleaving(fx, fx), 0.0);
  EXPECT_EQ(filtration_interleaving(fx, fy), 2.0);
  EXPECT_EQ(interleaving_oracle(fx, fy), 2.0);

  std::mt19937_64 rng(2);
  const Gram g = random_facegram(5, rng);
  std::vector<GramLevel> shifted = g.levels();
  for (auto& l : shifted) l.t += 0.25;
  EXPECT_EQ(filtration_interleaving(Filtration::from_facegram(g),
                                    Filtration::from_facegram(Gram(g.taxa(), g.kind(), shifted))),
            0.25);
}

TEST(Interleaving, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 10);
    auto make = [&](int kind) {
      switch (kind) {
        case 0: return Filtration::vietoris_rips(random_network(n, rng));
        case 1: return Filtration::from_facegram(random_facegram(n, rng));
        default: return Filtration::from_facegram(treegram_from_ultranetwork(random_ultranetwork(n, rng)));
      }
    };
    const auto f = make(trial % 3);
    const auto g = make((trial / 3) % 3);
    EXPECT_EQ(filtration_interleaving(f, g), interleaving_oracle(f, g)) << "trial " << trial;
  }
}

TEST(Interleaving, RejectsDifferentUniverses) {
  const auto f = Filtration::vietoris_rips(line_metric({0, 1}));
  const auto g = Filtration::vietoris_rips(line_metric({0, 2}));
  EXPECT_THROW(filtration_interleaving(f, g), ValidationError);
}
