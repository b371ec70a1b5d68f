#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "sadt/image.h"

namespace sadt {

// Daubechies-4 analysis filters. g is the quadrature mirror of h.
struct FilterBank {
    std::array<double, 4> h;
    std::array<double, 4> g;

    static FilterBank daubechies4();
};

// The four 2x2 quadrants of a transformed 4x4 mask.
//
//   +----+----+
//   | AF | HF |    AF  average / low frequency
//   +----+----+    HF  horizontal detail
//   | VF | DF |    VF  vertical detail
//   +----+----+    DF  diagonal / high frequency
enum class Band { AF = 0, HF = 1, VF = 2, DF = 3 };

inline constexpr std::array<Band, 4> kBands = {Band::AF, Band::HF, Band::VF, Band::DF};

const char* band_name(Band band);

// 4x4 spatial samples, row-major.
using PixelBlock = std::array<double, 16>;

class CoefficientMask {
public:
    CoefficientMask() { coeffs_.fill(0.0); }
    explicit CoefficientMask(const std::array<double, 16>& coeffs) : coeffs_(coeffs) {}

    double& at(int row, int col) { return coeffs_[static_cast<std::size_t>(row * 4 + col)]; }
    double at(int row, int col) const { return coeffs_[static_cast<std::size_t>(row * 4 + col)]; }

    const std::array<double, 16>& values() const { return coeffs_; }

    // Top-left cell of the band's quadrant.
    static int band_row(Band band) { return band == Band::VF || band == Band::DF ? 2 : 0; }
    static int band_col(Band band) { return band == Band::HF || band == Band::DF ? 2 : 0; }

    // Quadrant values in row-major order.
    std::array<double, 4> band(Band band) const;

    double sum() const;

private:
    std::array<double, 16> coeffs_;
};

// Row-major grid of masks covering a block-aligned image.
struct CoefficientImage {
    int rows = 0;  // masks per column (height / 4)
    int cols = 0;  // masks per row (width / 4)
    std::vector<CoefficientMask> masks;

    CoefficientMask& at(int row, int col) { return masks[static_cast<std::size_t>(row * cols + col)]; }
    const CoefficientMask& at(int row, int col) const {
        return masks[static_cast<std::size_t>(row * cols + col)];
    }
};

// Separable 2-D D4 analysis with periodic extension: rows first, then columns.
// Throws NumericError on non-finite input.
CoefficientMask fdt_block(const PixelBlock& pixels, const FilterBank& fb);

// Exact inverse of fdt_block (columns first, then rows).
PixelBlock idt_block(const CoefficientMask& mask, const FilterBank& fb);

// Transforms every disjoint 4x4 tile independently. The image must be
// block-aligned (see pad_to_blocks); throws ArgumentError otherwise.
CoefficientImage fdt_image(const Image& img, const FilterBank& fb);

// Inverse per tile, then round half away from zero and clamp to [0, 255].
Image idt_image(const CoefficientImage& ci, const FilterBank& fb);

// Round half away from zero.
double round_half_away(double v);

std::uint8_t to_pixel(double v);

}  // namespace sadt
