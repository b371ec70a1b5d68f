#include "sadt/wavelet.h"

#include <cmath>
#include <string>

#include "sadt/errors.h"

namespace sadt {
namespace {

using Signal4 = std::array<double, 4>;

// a[k] = sum_n h[n] x[(2k+n) mod 4], d[k] likewise with g.
// Output layout: a0 a1 d0 d1.
Signal4 analyze(const Signal4& x, const FilterBank& fb) {
    Signal4 out{};
    for (int k = 0; k < 2; ++k) {
        double a = 0.0;
        double d = 0.0;
        for (int n = 0; n < 4; ++n) {
            const double s = x[static_cast<std::size_t>((2 * k + n) % 4)];
            a += fb.h[static_cast<std::size_t>(n)] * s;
            d += fb.g[static_cast<std::size_t>(n)] * s;
        }
        out[static_cast<std::size_t>(k)] = a;
        out[static_cast<std::size_t>(k + 2)] = d;
    }
    return out;
}

// x[m] = sum_k h[(m-2k) mod 4] a[k] + g[(m-2k) mod 4] d[k]
Signal4 synthesize(const Signal4& y, const FilterBank& fb) {
    Signal4 out{};
    for (int m = 0; m < 4; ++m) {
        double s = 0.0;
        for (int k = 0; k < 2; ++k) {
            const auto tap = static_cast<std::size_t>(((m - 2 * k) % 4 + 4) % 4);
            s += fb.h[tap] * y[static_cast<std::size_t>(k)] +
                 fb.g[tap] * y[static_cast<std::size_t>(k + 2)];
        }
        out[static_cast<std::size_t>(m)] = s;
    }
    return out;
}

template <typename Fn>
std::array<double, 16> apply_rows(const std::array<double, 16>& in, Fn&& fn) {
    std::array<double, 16> out{};
    for (std::size_t r = 0; r < 4; ++r) {
        const Signal4 row = fn(Signal4{in[r * 4], in[r * 4 + 1], in[r * 4 + 2], in[r * 4 + 3]});
        for (std::size_t c = 0; c < 4; ++c) out[r * 4 + c] = row[c];
    }
    return out;
}

template <typename Fn>
std::array<double, 16> apply_cols(const std::array<double, 16>& in, Fn&& fn) {
    std::array<double, 16> out{};
    for (std::size_t c = 0; c < 4; ++c) {
        const Signal4 col = fn(Signal4{in[c], in[4 + c], in[8 + c], in[12 + c]});
        for (std::size_t r = 0; r < 4; ++r) out[r * 4 + c] = col[r];
    }
    return out;
}

void require_finite(const std::array<double, 16>& values, const char* what) {
    for (const double v : values) {
        if (!std::isfinite(v)) throw NumericError(std::string("non-finite value in ") + what);
    }
}

}  // namespace

FilterBank FilterBank::daubechies4() {
    const double s3 = std::sqrt(3.0);
    const double norm = 4.0 * std::sqrt(2.0);
    FilterBank fb{};
    fb.h = {(1.0 + s3) / norm, (3.0 + s3) / norm, (3.0 - s3) / norm, (1.0 - s3) / norm};
    fb.g = {fb.h[3], -fb.h[2], fb.h[1], -fb.h[0]};
    return fb;
}

const char* band_name(Band band) {
    switch (band) {
        case Band::AF: return "AF";
        case Band::HF: return "HF";
        case Band::VF: return "VF";
        case Band::DF: return "DF";
    }
    return "?";
}

std::array<double, 4> CoefficientMask::band(Band b) const {
    const int r0 = band_row(b);
    const int c0 = band_col(b);
    return {at(r0, c0), at(r0, c0 + 1), at(r0 + 1, c0), at(r0 + 1, c0 + 1)};
}

double CoefficientMask::sum() const {
    double s = 0.0;
    for (const double v : coeffs_) s += v;
    return s;
}

CoefficientMask fdt_block(const PixelBlock& pixels, const FilterBank& fb) {
    require_finite(pixels, "pixel block");
    const auto step = [&fb](const Signal4& x) { return analyze(x, fb); };
    return CoefficientMask(apply_cols(apply_rows(pixels, step), step));
}

PixelBlock idt_block(const CoefficientMask& mask, const FilterBank& fb) {
    require_finite(mask.values(), "coefficient mask");
    const auto step = [&fb](const Signal4& y) { return synthesize(y, fb); };
    return apply_rows(apply_cols(mask.values(), step), step);
}

CoefficientImage fdt_image(const Image& img, const FilterBank& fb) {
    if (!is_block_aligned(img)) {
        throw ArgumentError("fdt_image needs dimensions that are multiples of 4; pad first");
    }
    CoefficientImage ci;
    ci.rows = img.height / kBlockSize;
    ci.cols = img.width / kBlockSize;
    ci.masks.reserve(static_cast<std::size_t>(ci.rows) * static_cast<std::size_t>(ci.cols));
    PixelBlock block{};
    for (int br = 0; br < ci.rows; ++br) {
        for (int bc = 0; bc < ci.cols; ++bc) {
            for (int r = 0; r < 4; ++r) {
                for (int c = 0; c < 4; ++c) {
                    block[static_cast<std::size_t>(r * 4 + c)] = img.at(br * 4 + r, bc * 4 + c);
                }
            }
            ci.masks.push_back(fdt_block(block, fb));
        }
    }
    return ci;
}

Image idt_image(const CoefficientImage& ci, const FilterBank& fb) {
    if (ci.rows <= 0 || ci.cols <= 0 ||
        ci.masks.size() != static_cast<std::size_t>(ci.rows) * static_cast<std::size_t>(ci.cols)) {
        throw ArgumentError("coefficient grid is empty or inconsistent");
    }
    Image img(ci.cols * kBlockSize, ci.rows * kBlockSize);
    for (int br = 0; br < ci.rows; ++br) {
        for (int bc = 0; bc < ci.cols; ++bc) {
            const PixelBlock block = idt_block(ci.at(br, bc), fb);
            for (int r = 0; r < 4; ++r) {
                for (int c = 0; c < 4; ++c) {
                    img.at(br * 4 + r, bc * 4 + c) = to_pixel(block[static_cast<std::size_t>(r * 4 + c)]);
                }
            }
        }
    }
    return img;
}

double round_half_away(double v) {
    return std::round(v);
}

std::uint8_t to_pixel(double v) {
    const double r = round_half_away(v);
    if (r <= 0.0) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

}  // namespace sadt
