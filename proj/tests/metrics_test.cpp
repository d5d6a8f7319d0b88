#include <gtest/gtest.h>

#include "fstego/metrics.hpp"
#include "test_util.hpp"

namespace fstego {
namespace {

using namespace metrics;
using testing::random_image;

TEST(Mse, TrivialCases) {
  const ImageGrid a = random_image(16, 16, 1);
  EXPECT_EQ(mse(a, a), 0.0);
  EXPECT_EQ(mse(ImageGrid(4, 4, 0.0), ImageGrid(4, 4, 255.0)), 65025.0);
  EXPECT_EQ(mse(ImageGrid(3, 7, 0.0), ImageGrid(3, 7, 1.0)), 1.0);
}

TEST(Mse, Symmetric) {
  const ImageGrid a = random_image(16, 16, 2), b = random_image(16, 16, 3);
  EXPECT_EQ(mse(a, b), mse(b, a));
}

TEST(Psnr, TrivialCases) {
  EXPECT_EQ(psnr_from_mse(65025.0), 0.0);
  const ImageGrid a = random_image(8, 8, 4);
  EXPECT_TRUE(std::isinf(psnr(a, a)));
  EXPECT_NEAR(psnr_from_mse(4.3273), 41.77, 0.01);
  EXPECT_THROW(psnr_from_mse(-1.0), ParameterError);
}

TEST(Psnr, DecreasesWithMse) {
  double previous = INFINITY;
  for (double m = 0.01; m < 70000.0; m *= 1.3) {
    const double p = psnr_from_mse(m);
    EXPECT_LT(p, previous);
    previous = p;
  }
}

TEST(Cc, TrivialCases) {
  const ImageGrid a = random_image(16, 16, 5);
  EXPECT_NEAR(cc(a, a), 1.0, 1e-15);
  EXPECT_NEAR(cc(a, map(a, [](double v) { return 255.0 - v; })), -1.0, 1e-15);
  EXPECT_NEAR(cc(a, map(a, [](double v) { return 2.0 * v + 7.0; })), 1.0, 1e-15);
}

TEST(Cc, ConstantImages) {
  EXPECT_THROW(cc(ImageGrid(4, 4, 3.0), ImageGrid(4, 4, 9.0)), UndefinedCorrelation);
  EXPECT_EQ(cc(ImageGrid(4, 4, 3.0), random_image(4, 4, 6)), 0.0);
}

TEST(Cc, AffineInvariance) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const ImageGrid a = random_image(16, 16, 1000 + i);
    const ImageGrid b = random_image(16, 16, 2000 + i);
    const double scale = 0.1 + 10.0 * testing::unit(rng);
    const double shift = -100.0 + 200.0 * testing::unit(rng);
    const double base = cc(a, b);
    const ImageGrid mapped = map(b, [&](double v) { return scale * v + shift; });
    const ImageGrid flipped = map(b, [&](double v) { return -scale * v + shift; });
    EXPECT_NEAR(cc(a, mapped), base, 1e-12);
    EXPECT_NEAR(cc(mapped, a), base, 1e-12);
    EXPECT_NEAR(cc(a, flipped), -base, 1e-12);
  }
}

TEST(Ssim, IdenticalImagesScoreOne) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ImageGrid a = random_image(32, 32, seed);
    for (const SsimConstants& k : {SsimConstants{}, SsimConstants{1e-6, 2e-6, 3e-6}}) {
      const SsimResult s = ssim(a, a, k);
      EXPECT_EQ(s.luminance, 1.0);
      EXPECT_EQ(s.contrast, 1.0);
      EXPECT_EQ(s.structure, 1.0);
      EXPECT_EQ(s.ssim, 1.0);
    }
  }
}

TEST(Ssim, ConstantImagesLuminance) {
  const SsimConstants k;
  const SsimResult s = ssim(ImageGrid(8, 8, 0.0), ImageGrid(8, 8, 255.0), k);
  EXPECT_DOUBLE_EQ(s.luminance, k.c1 / (255.0 * 255.0 + k.c1));
  EXPECT_LT(s.luminance, 1e-3);
  EXPECT_EQ(s.contrast, 1.0);
  EXPECT_EQ(s.structure, 1.0);
}

TEST(Ssim, ProductOfComponents) {
  const ImageGrid a = random_image(32, 32, 10), b = random_image(32, 32, 11);
  for (StructureForm form : {StructureForm::Standard, StructureForm::AsPrinted}) {
    SsimConstants k;
    k.structure = form;
    const SsimResult s = ssim(a, b, k);
    EXPECT_NEAR(s.ssim, s.luminance * s.contrast * s.structure, 1e-12);
  }
}

TEST(Ssim, AsPrintedStructureTendsToTwo) {
  const ImageGrid a = random_image(64, 64, 12);
  SsimConstants k;
  k.structure = StructureForm::AsPrinted;
  const double s = ssim(a, a, k).structure;
  EXPECT_GT(s, 1.99);
  EXPECT_LT(s, 2.0);
}

TEST(Report, FieldsAgree) {
  const ImageGrid a = random_image(16, 16, 13);
  const ImageGrid b = map(a, [](double v) { return v + 1.0; });
  const MetricsReport r = report(a, b);
  EXPECT_EQ(r.mse, 1.0);
  EXPECT_DOUBLE_EQ(r.psnr_db, 10.0 * std::log10(65025.0));
  EXPECT_FALSE(r.psnr_infinite());
  EXPECT_NEAR(r.cc, 1.0, 1e-12);
  EXPECT_NEAR(r.ssim, r.luminance * r.contrast * r.structure, 1e-12);
  EXPECT_TRUE(report(a, a).psnr_infinite());
}

TEST(Metrics, ShapeMismatch) {
  const ImageGrid a(4, 4), b(4, 5);
  EXPECT_THROW(mse(a, b), ShapeError);
  EXPECT_THROW(cc(a, b), ShapeError);
  EXPECT_THROW(ssim(a, b), ShapeError);
}

}  // namespace
}  // namespace fstego
