#include "sadt/metrics.h"

#include <cmath>
#include <string>

#include "sadt/errors.h"

namespace sadt {
namespace {

void require_same_shape(const Image& a, const Image& b) {
    if (a.width != b.width || a.height != b.height) {
        throw ArgumentError("image sizes differ: " + std::to_string(a.width) + "x" +
                            std::to_string(a.height) + " vs " + std::to_string(b.width) + "x" +
                            std::to_string(b.height));
    }
    if (a.empty()) throw ArgumentError("images are empty");
}

double squared_error(const Image& a, const Image& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
        sum += d * d;
    }
    return sum;
}

}  // namespace

double mse(const Image& a, const Image& b) {
    require_same_shape(a, b);
    return squared_error(a, b) / static_cast<double>(a.size());
}

double psnr_from_mse(double m) {
    if (m < 0.0 || std::isnan(m)) throw ArgumentError("mse must be non-negative");
    if (m == 0.0) return kInfinitePsnr;
    return 10.0 * std::log10(255.0 * 255.0 / m);
}

double psnr(const Image& a, const Image& b) {
    return psnr_from_mse(mse(a, b));
}

double image_fidelity(const Image& reference, const Image& test) {
    require_same_shape(reference, test);
    double energy = 0.0;
    for (const auto v : reference.pixels) energy += static_cast<double>(v) * static_cast<double>(v);
    if (energy == 0.0) throw UndefinedError("image fidelity is undefined for an all-zero reference");
    return 1.0 - squared_error(reference, test) / energy;
}

QualityMetrics measure(const Image& cover, const Image& stego) {
    QualityMetrics q;
    q.mse = mse(cover, stego);
    q.psnr = psnr_from_mse(q.mse);
    q.imageFidelity = image_fidelity(cover, stego);
    return q;
}

}  // namespace sadt
