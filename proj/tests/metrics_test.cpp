#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sadt/errors.h"
#include "sadt/metrics.h"

using namespace sadt;

TEST(Mse, Examples) {
    const Image a(1, 2, std::vector<std::uint8_t>{0, 0});
    const Image b(1, 2, std::vector<std::uint8_t>{3, 4});
    EXPECT_DOUBLE_EQ(mse(a, b), 12.5);
    EXPECT_DOUBLE_EQ(mse(b, a), 12.5);
    EXPECT_EQ(mse(a, a), 0.0);
    EXPECT_THROW(mse(a, Image(2, 1)), ArgumentError);
}

TEST(Psnr, PublishedQualityRows) {
    EXPECT_NEAR(psnr_from_mse(0.672668), 49.852793, 1e-3);
    EXPECT_NEAR(psnr_from_mse(0.666504), 49.892777, 1e-3);
}

TEST(Psnr, IdenticalIsInfinite) {
    const Image a(3, 3, 9);
    EXPECT_EQ(psnr(a, a), kInfinitePsnr);
    EXPECT_TRUE(std::isinf(psnr(a, a)));
}

TEST(Psnr, StrictlyDecreasingInMse) {
    double prev = psnr_from_mse(1e-6);
    for (double m = 1e-3; m < 1e4; m *= 1.37) {
        const double p = psnr_from_mse(m);
        EXPECT_LT(p, prev);
        prev = p;
    }
    EXPECT_THROW(psnr_from_mse(-1.0), ArgumentError);
}

TEST(ImageFidelity, Examples) {
    const Image a(1, 1, std::vector<std::uint8_t>{10});
    const Image b(1, 1, std::vector<std::uint8_t>{8});
    EXPECT_DOUBLE_EQ(image_fidelity(a, b), 0.96);
    EXPECT_DOUBLE_EQ(image_fidelity(a, a), 1.0);
    EXPECT_THROW(image_fidelity(Image(2, 2, 0), Image(2, 2, 5)), UndefinedError);
}

TEST(ImageFidelity, AtMostOneAndOneOnlyWhenEqual) {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 300; ++t) {
        Image a(6, 5), b(6, 5);
        for (auto& v : a.pixels) v = static_cast<std::uint8_t>(1 + rng() % 255);
        b = a;
        if (t % 3) b.pixels[rng() % b.size()] ^= static_cast<std::uint8_t>(1 + rng() % 255);
        const double f = image_fidelity(a, b);
        EXPECT_LE(f, 1.0);
        EXPECT_EQ(f == 1.0, a == b);
        EXPECT_DOUBLE_EQ(mse(a, b), mse(b, a));
    }
}

TEST(Measure, CombinesAll) {
    const Image a(2, 2, std::vector<std::uint8_t>{10, 20, 30, 40});
    const Image b(2, 2, std::vector<std::uint8_t>{11, 20, 28, 40});
    const QualityMetrics q = measure(a, b);
    EXPECT_DOUBLE_EQ(q.mse, 5.0 / 4.0);
    EXPECT_DOUBLE_EQ(q.psnr, 10.0 * std::log10(65025.0 / 1.25));
    EXPECT_DOUBLE_EQ(q.imageFidelity, 1.0 - 5.0 / 3000.0);
}
