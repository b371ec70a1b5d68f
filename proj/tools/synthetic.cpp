#include "synthetic.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>

namespace sadt::synthetic {
namespace {

// Uniform doubles from raw mt19937_64 output so the stream does not depend
// on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        const double u1 = std::max(uniform(), 1e-300);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

double smoothstep(double t) {
    return t * t * (3.0 - 2.0 * t);
}

// One octave of lattice value noise with smoothstep interpolation.
class ValueNoise {
public:
    ValueNoise(Rng& rng, int width, int height, double cell)
        : cell_(cell),
          gw_(static_cast<int>(std::ceil(width / cell)) + 2),
          gh_(static_cast<int>(std::ceil(height / cell)) + 2),
          lattice_(static_cast<std::size_t>(gw_ * gh_)) {
        for (auto& v : lattice_) v = rng.uniform(-1.0, 1.0);
    }

    double at(double x, double y) const {
        const double fx = x / cell_;
        const double fy = y / cell_;
        const int ix = static_cast<int>(fx);
        const int iy = static_cast<int>(fy);
        const double tx = smoothstep(fx - ix);
        const double ty = smoothstep(fy - iy);
        const double a = node(ix, iy) + (node(ix + 1, iy) - node(ix, iy)) * tx;
        const double b = node(ix, iy + 1) + (node(ix + 1, iy + 1) - node(ix, iy + 1)) * tx;
        return a + (b - a) * ty;
    }

private:
    double node(int x, int y) const { return lattice_[static_cast<std::size_t>(y * gw_ + x)]; }

    double cell_;
    int gw_;
    int gh_;
    std::vector<double> lattice_;
};

}  // namespace

Image generate(int index, int width, int height) {
    Rng rng(0x5AD7'0000ULL + static_cast<std::uint64_t>(index) * 7919ULL);
    std::vector<double> field(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0.0);

    const double persistence = rng.uniform(0.42, 0.62);
    const double base_cell = rng.uniform(96.0, 200.0);
    double amplitude = 1.0;
    double cell = base_cell;
    for (int octave = 0; octave < 6 && cell >= 2.0; ++octave) {
        const ValueNoise noise(rng, width, height, cell);
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                field[static_cast<std::size_t>(y * width + x)] += amplitude * noise.at(x, y);
            }
        }
        amplitude *= persistence;
        cell /= 2.0;
    }

    // Soft-edged ellipses and rectangles.
    const int shapes = 4 + static_cast<int>(rng.uniform(0.0, 9.0));
    for (int s = 0; s < shapes; ++s) {
        const double cx = rng.uniform(0.0, width);
        const double cy = rng.uniform(0.0, height);
        const double rx = rng.uniform(12.0, width / 4.0);
        const double ry = rng.uniform(12.0, height / 4.0);
        const double level = rng.uniform(-0.9, 0.9);
        const bool ellipse = rng.uniform() < 0.6;
        const double edge = rng.uniform(0.8, 4.0);
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                double inside;
                if (ellipse) {
                    const double dx = (x - cx) / rx;
                    const double dy = (y - cy) / ry;
                    inside = (1.0 - std::sqrt(dx * dx + dy * dy)) * std::min(rx, ry);
                } else {
                    inside = std::min(rx - std::fabs(x - cx), ry - std::fabs(y - cy));
                }
                const double w = std::clamp(0.5 + inside / (2.0 * edge), 0.0, 1.0);
                auto& v = field[static_cast<std::size_t>(y * width + x)];
                v = v * (1.0 - 0.5 * w) + level * w;
            }
        }
    }

    // Stripe texture inside a band on odd scenes.
    if (index % 2 == 1) {
        const double period = rng.uniform(3.0, 14.0);
        const double angle = rng.uniform(0.0, std::numbers::pi);
        const double strength = rng.uniform(0.1, 0.35);
        const int y0 = static_cast<int>(rng.uniform(0.0, height * 0.6));
        const int y1 = std::min(height, y0 + static_cast<int>(height * 0.35));
        for (int y = y0; y < y1; ++y) {
            for (int x = 0; x < width; ++x) {
                const double phase = (x * std::cos(angle) + y * std::sin(angle)) * 2.0 * std::numbers::pi / period;
                field[static_cast<std::size_t>(y * width + x)] += strength * std::sin(phase);
            }
        }
    }

    const auto [lo_it, hi_it] = std::minmax_element(field.begin(), field.end());
    const double lo = *lo_it;
    const double span = std::max(*hi_it - lo, 1e-9);
    const double out_lo = rng.uniform(4.0, 30.0);
    const double out_hi = rng.uniform(220.0, 252.0);
    const double grain = rng.uniform(0.8, 3.5);

    Image img(width, height);
    for (std::size_t i = 0; i < field.size(); ++i) {
        const double v = out_lo + (field[i] - lo) / span * (out_hi - out_lo) + grain * rng.gaussian();
        img.pixels[i] = static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
    }
    return img;
}

std::vector<NamedImage> corpus(int count, int width, int height) {
    std::vector<NamedImage> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "synthetic_%02d", i);
        out.push_back({name, generate(i, width, height)});
    }
    return out;
}

}  // namespace sadt::synthetic
