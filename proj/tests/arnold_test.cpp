#include <gtest/gtest.h>

#include <algorithm>

#include "fstego/arnold.hpp"
#include "test_util.hpp"

namespace fstego {
namespace {

using arnold::period;
using arnold::scramble;
using arnold::unscramble;

// Samples are their own flat index, so a permutation is visible directly.
ImageGrid index_image(std::size_t n) {
  ImageGrid g(n, n);
  for (std::size_t i = 0; i < g.size(); ++i) g.samples()[i] = static_cast<double>(i);
  return g;
}

TEST(ArnoldPeriod, KnownSides) {
  EXPECT_EQ(period(128), 96u);
  EXPECT_EQ(period(256), 192u);
  EXPECT_EQ(period(480), 120u);
  EXPECT_EQ(period(512), 384u);
  EXPECT_EQ(period(2), 3u);
  EXPECT_EQ(period(3), 4u);
  EXPECT_EQ(period(5), 10u);
}

// 240 is a return time for N = 480 but not the smallest one: stepping the map
// one iteration at a time first returns to the start after 120 steps, which is
// half the Pisano period lcm(48, 8, 20).
TEST(ArnoldPeriod, Side480ReturnsAfter120) {
  const ImageGrid src = index_image(480);
  ImageGrid cur = src;
  std::uint64_t first_return = 0;
  for (std::uint64_t k = 1; k <= 240; ++k) {
    cur = scramble(cur, 1);
    if (first_return == 0 && cur == src) first_return = k;
  }
  EXPECT_EQ(first_return, 120u);
  EXPECT_EQ(cur, src);
}

TEST(ArnoldPeriod, RejectsTinySides) {
  EXPECT_THROW(period(0), ParameterError);
  EXPECT_THROW(period(1), ParameterError);
}

TEST(Arnold, SingleStepMapsCoordinates) {
  // pixel at (a, b) moves to ((a + b) mod N, (a + 2b) mod N)
  const std::size_t n = 5;
  const ImageGrid src = index_image(n);
  const ImageGrid out = scramble(src, 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) EXPECT_EQ(out((a + b) % n, (a + 2 * b) % n), src(a, b));
  }
}

TEST(Arnold, FullPeriodOfSingleStepsIsIdentity) {
  for (std::size_t n = 2; n <= 64; ++n) {
    const ImageGrid src = index_image(n);
    const std::uint64_t t = period(n);
    ImageGrid cur = src;
    std::uint64_t first_return = 0;
    for (std::uint64_t k = 1; k <= t; ++k) {
      cur = scramble(cur, 1);
      if (first_return == 0 && cur == src) first_return = k;
    }
    EXPECT_EQ(cur, src) << "N = " << n;
    EXPECT_EQ(first_return, t) << "N = " << n;
  }
}

TEST(Arnold, IsAPermutation) {
  const ImageGrid src = testing::random_u8_image(32, 32, 1);
  auto before = std::vector<double>(src.samples().begin(), src.samples().end());
  const ImageGrid out = scramble(src, 7);
  auto after = std::vector<double>(out.samples().begin(), out.samples().end());
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  EXPECT_EQ(before, after);
}

TEST(Arnold, RoundTrip) {
  for (std::size_t n : {4u, 17u, 64u, 256u}) {
    const ImageGrid src = testing::random_image(n, n, n);
    for (std::uint64_t it : {0ull, 1ull, 5ull, 1000ull}) {
      EXPECT_EQ(unscramble(scramble(src, it), it), src);
      EXPECT_EQ(scramble(unscramble(src, it), it), src);
    }
  }
}

TEST(Arnold, UnscrambleIsComplementaryScramble) {
  const std::size_t n = 16;
  const ImageGrid src = index_image(n);
  const std::uint64_t t = period(n);
  for (std::uint64_t it = 0; it <= t; ++it) EXPECT_EQ(unscramble(src, it), scramble(src, t - it)) << it;
}

TEST(Arnold, IterationsAddUp) {
  const ImageGrid src = index_image(12);
  EXPECT_EQ(scramble(scramble(src, 3), 4), scramble(src, 7));
  EXPECT_EQ(scramble(src, period(12) + 2), scramble(src, 2));
}

TEST(Arnold, ComplexGridsPermuteAlike) {
  const ComplexGrid f = testing::random_field(8, 8, 2);
  EXPECT_EQ(real_part(scramble(f, 3)), scramble(real_part(f), 3));
}

TEST(Arnold, ShapeErrors) {
  EXPECT_THROW(scramble(ImageGrid(4, 8), 1), SizingError);
  EXPECT_THROW(unscramble(ImageGrid(8, 4), 1), SizingError);
  EXPECT_THROW(scramble(ImageGrid(8, 8), arnold::ArnoldSpec{16, 1}), ShapeError);
  EXPECT_THROW(scramble(ImageGrid(1, 1), 1), ParameterError);
}

}  // namespace
}  // namespace fstego
