#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "borsuk/sphere_cover.hpp"

namespace borsuk {
namespace {

constexpr double kPi = std::numbers::pi;

HemisphereFamily planar(const std::vector<double>& angles) {
  HemisphereFamily f{2, {}};
  for (double a : angles) f.vectors.push_back(Eigen::Vector2d(std::cos(a), std::sin(a)));
  return f;
}

// Oracle: fold minimum over random directions (an upper bound on the true
// minimum, from above).
std::size_t sampled_min(const std::vector<Eigen::VectorXd>& vs, std::size_t n, double threshold,
                        bool closed, std::size_t samples, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  std::size_t best = vs.size();
  Eigen::VectorXd x(static_cast<Eigen::Index>(n));
  for (std::size_t s = 0; s < samples; ++s) {
    for (Eigen::Index d = 0; d < x.size(); ++d) x(d) = g(rng);
    x.normalize();
    std::size_t c = 0;
    for (const auto& u : vs) c += closed ? u.dot(x) >= threshold : u.dot(x) > threshold;
    best = std::min(best, c);
  }
  return best;
}

TEST(GaleVectors, Sizes) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto f = gale_vectors(n, k);
      EXPECT_EQ(f.size(), 2 * k + n - 1);
      for (const auto& u : f.vectors) EXPECT_NEAR(u.norm(), 1.0, 1e-14);
    }
  EXPECT_THROW(gale_vectors(1, 1), PreconditionError);
  EXPECT_THROW(gale_vectors(2, 0), PreconditionError);
}

TEST(MinCoverFold, Examples) {
  EXPECT_EQ(min_cover_fold(planar({0.3, 0.3 + kPi})).fold, 0u);
  EXPECT_EQ(min_cover_fold(planar({0, 2 * kPi / 3, 4 * kPi / 3})).fold, 1u);
  const auto g31 = gale_vectors(3, 1);
  EXPECT_EQ(g31.size(), 4u);
  EXPECT_EQ(min_cover_fold(g31).fold, 1u);
  EXPECT_EQ(min_cover_fold(gale_vectors(3, 2)).fold, 2u);
  EXPECT_EQ(min_cover_fold(gale_vectors(3, 2)).mode, FoldMode::Exact);
  EXPECT_EQ(min_cover_fold(gale_vectors(4, 1)).mode, FoldMode::Statistical);
}

TEST(MinCoverFold, ExactlyKForSmallCases) {
  for (auto params : {MomentParameters::Centered, MomentParameters::Integer}) {
    for (std::size_t n = 2; n <= 3; ++n) {
      for (std::size_t k = 1; k <= 4; ++k) {
        const auto f = gale_vectors(n, k, params);
        const auto r = min_cover_fold(f);
        EXPECT_EQ(r.fold, k) << "n=" << n << " k=" << k;
        EXPECT_GE(sampled_min(f.vectors, n, 0, false, 20000, 7), r.fold);
      }
    }
  }
}

TEST(MinCoverFold, PlanarHalfCircleCount) {
  // every open half-circle of directions holds at least k of the 2k+1 vectors
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto f = gale_vectors(2, k);
    std::size_t least = f.size();
    for (int i = 0; i < 20000; ++i) {
      const double a = 2 * kPi * (i + 0.5) / 20000;
      const Eigen::Vector2d x(std::cos(a), std::sin(a));
      std::size_t c = 0;
      for (const auto& u : f.vectors) c += u.dot(x) > 0;
      least = std::min(least, c);
    }
    EXPECT_EQ(least, k);
    EXPECT_EQ(min_cover_fold(f).fold, k);
  }
}

TEST(MinCoverFold, RotationInvariant) {
  std::mt19937 rng(11);
  std::normal_distribution<double> g;
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto f = gale_vectors(3, k);
    const std::size_t base = min_cover_fold(f).fold;
    for (int t = 0; t < 5; ++t) {
      Eigen::Matrix3d m;
      for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = g(rng);
      const Eigen::Matrix3d q = Eigen::HouseholderQR<Eigen::Matrix3d>(m).householderQ();
      HemisphereFamily r{3, {}};
      for (const auto& u : f.vectors) r.vectors.push_back(q * u);
      EXPECT_EQ(min_cover_fold(r).fold, base);
    }
  }
}

TEST(ShrinkCaps, ThreeEquallySpaced) {
  const auto f = planar({0.1, 0.1 + 2 * kPi / 3, 0.1 + 4 * kPi / 3});
  const auto caps = shrink_caps(f, 1);
  EXPECT_GE(caps.rho, kPi / 3 - 1e-9);
  EXPECT_LE(caps.rho, kPi / 2 - 1e-4);
  EXPECT_GE(cap_cover_fold(caps), 1u);
  // just below pi/3 the caps leave gaps
  EXPECT_EQ(cap_cover_fold(CapCover{2, f.vectors, kPi / 3 - 1e-6}), 0u);
}

TEST(ShrinkCaps, PreconditionAndReverification) {
  EXPECT_THROW(shrink_caps(planar({0, kPi}), 1), PreconditionError);
  EXPECT_THROW(shrink_caps(gale_vectors(3, 1), 2), PreconditionError);
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto f = gale_vectors(n, k);
      const auto caps = shrink_caps(f, k);
      EXPECT_LE(caps.rho, kPi / 2 - 1e-4);
      EXPECT_GE(cap_cover_fold(caps), k);
      EXPECT_GE(sampled_min(caps.centers, n, std::cos(caps.rho), true, 20000, 5), k);
    }
  }
}

TEST(ShrinkCaps, IntegerParametersLeaveTooLittleRoom) {
  // with t_i = i the vectors crowd together and n = 3, k = 4 needs caps wider
  // than pi/2 - 1e-4
  const auto f = gale_vectors(3, 4, MomentParameters::Integer);
  EXPECT_EQ(min_cover_fold(f).fold, 4u);
  EXPECT_THROW(shrink_caps(f, 4), VerificationError);
}

TEST(BallBorsuk, Values) {
  EXPECT_EQ(ball_borsuk(2, 1).value, 3u);
  const auto b = ball_borsuk(3, 2);
  EXPECT_EQ(b.value, 6u);
  ASSERT_TRUE(b.caps);
  EXPECT_EQ(b.fold.mode, FoldMode::Exact);
  FoldOptions opt;
  opt.samples = 200'000;
  const auto b4 = ball_borsuk(4, 3, opt);
  EXPECT_EQ(b4.value, 9u);
  EXPECT_EQ(b4.fold.mode, FoldMode::Statistical);
  EXPECT_GE(b4.fold.fold, 3u);
  EXPECT_FALSE(b4.caps);
}

}  // namespace
}  // namespace borsuk
