#pragma once

#include <limits>

#include "sadt/image.h"

namespace sadt {

// Returned by psnr() for identical images.
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

struct QualityMetrics {
    double mse = 0.0;
    double psnr = kInfinitePsnr;  // dB
    double imageFidelity = 1.0;
};

// Mean squared pixel difference. Throws ArgumentError on a size mismatch.
double mse(const Image& a, const Image& b);

// 10 log10(255^2 / mse) in dB, or kInfinitePsnr when mse is zero.
double psnr_from_mse(double mse);
double psnr(const Image& a, const Image& b);

// 1 - sum((a - b)^2) / sum(a^2), with a as the reference (cover).
// Throws UndefinedError when a is all zero.
double image_fidelity(const Image& reference, const Image& test);

QualityMetrics measure(const Image& cover, const Image& stego);

}  // namespace sadt
