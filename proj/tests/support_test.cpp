#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "owalk/autos.hpp"
#include "owalk/error.hpp"
#include "owalk/spectral.hpp"
#include "owalk/support.hpp"

namespace owalk {
namespace {

using std::numbers::pi;

TEST(Support, Examples) {
  const auto k3 = decompose(builtin_example("k3"));
  EXPECT_EQ(eigenvalue_support(k3, 0).members, (std::vector<std::size_t>{0, 1, 2}));

  // Single edge: the kernel is empty so 0 is never in a support.
  const auto edge = decompose(OrientedGraph::build(2, {{0, 1}}));
  const auto s = eigenvalue_support(edge, 0);
  EXPECT_EQ(s.members.size(), 2u);
  EXPECT_FALSE(s.contains_zero(edge));

  // Isolated vertex: support is {0}.
  const auto iso = decompose(OrientedGraph::build(3, {{0, 1}}));
  const auto s2 = eigenvalue_support(iso, 2);
  ASSERT_EQ(s2.members.size(), 1u);
  EXPECT_TRUE(s2.contains_zero(iso));
}

TEST(Support, SquaredNormsSumToOne) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_oriented_graph(rng, 1 + static_cast<int>(rng() % 8), 0.5);
    const auto sd = decompose(g);
    for (Vertex a = 0; a < g.size(); ++a) {
      const auto support = eigenvalue_support(sd, a);
      double total = 0.0;
      for (std::size_t r : support.members) total += sd.idempotent(r)(a, a).real();
      EXPECT_NEAR(total, 1.0, 1e-9);
    }
  }
}

TEST(Quarrel, Branch) {
  EXPECT_DOUBLE_EQ(quarrel_of({1.0, 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(quarrel_of({-1.0, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(quarrel_of({-1.0, -0.0}), 1.0);
  EXPECT_NEAR(quarrel_of({0.0, 1.0}), 0.5, 1e-15);
  EXPECT_NEAR(quarrel_of({0.0, -1.0}), -0.5, 1e-15);
}

TEST(StrongCospectrality, SameVertex) {
  const auto sd = decompose(builtin_example("irrational5"));
  const auto cert = strong_cospectrality(sd, 2, 2);
  ASSERT_TRUE(cert);
  for (const auto& [r, q] : cert->quarrels) EXPECT_NEAR(q, 0.0, 1e-12);
}

TEST(StrongCospectrality, K3Quarrels) {
  // With omega = exp(2 pi i/3), the theta = i sqrt3 eigenvector is
  // (1, omega, omega^2)/sqrt3 up to conjugation, so the quarrels between
  // neighbours are 0 and +-2/3.
  const auto sd = decompose(builtin_example("k3"));
  const auto c01 = strong_cospectrality(sd, 0, 1);
  ASSERT_TRUE(c01);
  EXPECT_NEAR(c01->quarrels.at(0), -2.0 / 3, 1e-12);
  EXPECT_NEAR(c01->quarrels.at(1), 0.0, 1e-12);
  EXPECT_NEAR(c01->quarrels.at(2), 2.0 / 3, 1e-12);
  const auto c02 = strong_cospectrality(sd, 0, 2);
  ASSERT_TRUE(c02);
  EXPECT_NEAR(c02->quarrels.at(0), 2.0 / 3, 1e-12);
  EXPECT_NEAR(c02->quarrels.at(2), -2.0 / 3, 1e-12);
}

TEST(StrongCospectrality, Irrational5Quarrels) {
  const auto sd = decompose(builtin_example("irrational5"));
  const auto cert = strong_cospectrality(sd, 3, 4);
  ASSERT_TRUE(cert);
  const double q = std::acos(0.75) / pi;
  EXPECT_NEAR(cert->quarrels.at(0), -q, 1e-12);
  EXPECT_NEAR(cert->quarrels.at(1), 1.0, 1e-12);
  EXPECT_NEAR(cert->quarrels.at(2), q, 1e-12);
  EXPECT_LT(cert->residual, 1e-12);
  EXPECT_FALSE(strong_cospectrality(sd, 0, 3));
}

TEST(StrongCospectrality, NotCospectral) {
  // Directed path 0 -> 1 -> 2: the middle vertex lacks the kernel.
  const auto sd = decompose(OrientedGraph::build(3, {{0, 1}, {1, 2}}));
  EXPECT_FALSE(strong_cospectrality(sd, 0, 1));
  EXPECT_TRUE(strong_cospectrality(sd, 0, 2));
}

// alpha_r(b, a) = conj(alpha_r(a, b)), checked directly against the
// defining relation E_r e_a = alpha_r E_r e_b.
TEST(StrongCospectrality, SymmetryProperty) {
  std::mt19937_64 rng(8);
  int found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_oriented_graph(rng, 2 + static_cast<int>(rng() % 6), 0.6);
    const auto sd = decompose(g);
    for (Vertex a = 0; a < g.size(); ++a) {
      for (Vertex b = a + 1; b < g.size(); ++b) {
        const auto ab = strong_cospectrality(sd, a, b);
        const auto ba = strong_cospectrality(sd, b, a);
        ASSERT_EQ(ab.has_value(), ba.has_value());
        if (!ab) continue;
        ++found;
        for (const auto& [r, alpha] : ab->alphas) {
          EXPECT_LT(std::abs(ba->alphas.at(r) - std::conj(alpha)), 1e-9);
          EXPECT_NEAR(std::abs(alpha), 1.0, 1e-12);
          const Eigen::VectorXcd lhs = sd.idempotent(r).col(a);
          const Eigen::VectorXcd rhs = alpha * sd.idempotent(r).col(b);
          EXPECT_LT((lhs - rhs).norm(), 1e-8);
          EXPECT_GT(ab->quarrels.at(r), -1.0);
          EXPECT_LE(ab->quarrels.at(r), 1.0);
        }
      }
    }
  }
  EXPECT_GT(found, 0);
}

TEST(QuarrelPowerCheck, K3) {
  const auto g = builtin_example("k3");
  const auto sd = decompose(g);
  const auto p = make_automorphism(g, {1, 2, 0}, {1, 1, 1});
  const auto base = strong_cospectrality(sd, 0, apply(p, 0));
  const auto square = strong_cospectrality(sd, 0, apply(power(p, 2), 0));
  ASSERT_TRUE(base && square);
  EXPECT_TRUE(quarrel_power_check(*base, 2, *square));
  EXPECT_TRUE(quarrel_power_check(*base, 1, *base));
  EXPECT_FALSE(quarrel_power_check(*base, 1, *square));
}

TEST(QuarrelPowerCheck, SupportMismatch) {
  const auto sd = decompose(builtin_example("k3"));
  auto base = *strong_cospectrality(sd, 0, 1);
  auto other = base;
  other.alphas.erase(1);
  other.quarrels.erase(1);
  try {
    quarrel_power_check(base, 2, other);
    FAIL() << "expected SupportMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SupportMismatch);
  }
}

}  // namespace
}  // namespace owalk
