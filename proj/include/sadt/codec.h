#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sadt/image.h"
#include "sadt/payload.h"
#include "sadt/wavelet.h"

namespace sadt {

struct EmbedConfig {
    PayloadMode mode = PayloadMode::Set1Only;
    // Bit positions available for embedding, counted from the LSB.
    int maxLsbPositions = 2;
    // Coefficients are quantized to multiples of this step before the bit
    // surgery; the bits live in round(c / quantStep).
    double quantStep = 1.0;
    // Largest wrapped byte distance still counted as a match.
    int tolerance = 4;
    // Minimum matched fraction for an Authentic verdict.
    double verdictThreshold = 0.95;
    // XOR each secret byte with a byte derived from the mask's grid position.
    // Without it a constant-zero tile carries a valid (all-zero) signature.
    bool bindPosition = true;
    // After the inverse transform, nudge tile pixels by +-1 until the tile
    // verifies. Without it pixel rounding corrupts a large share of masks.
    bool refine = true;

    // Defaults for a payload mode: Set-1 uses 2 LSB positions at unit step,
    // Set-1+Set-2 uses 4 positions at step 3/8.
    static EmbedConfig for_mode(PayloadMode mode);

    // Throws ArgumentError on an inconsistent configuration.
    void validate() const;
};

// Quantizes c to q = round(c / step) and rewrites the listed magnitude bits
// of q with AND/OR, keeping its sign (zero counts as positive). Returns the
// modified value scaled back by step. Throws ArgumentError if the lists
// differ in length, repeat a position, or use a position outside [0, 30].
double embed_in_coefficient(double c, std::span<const std::uint8_t> bits,
                            std::span<const int> positions, double step = 1.0);

// Reads the listed bits of |round(c / step)|, in the order given.
std::vector<std::uint8_t> extract_from_coefficient(double c, std::span<const int> positions,
                                                   double step = 1.0);

// min(|a - b|, 256 - |a - b|)
int wrapped_distance(std::uint8_t a, std::uint8_t b);

// Pseudo-random byte tied to a mask position; set 0 for Set-1, 1 for Set-2.
std::uint8_t binding_byte(int maskRow, int maskCol, int set);

struct EmbedStats {
    std::size_t masks = 0;
    std::size_t secretBytes = 0;
    std::size_t embeddedBits = 0;
    std::size_t coverBytes = 0;
    std::size_t refinedMasks = 0;     // needed at least one refinement step
    std::size_t unresolvedMasks = 0;  // still failing verification after refinement

    double bits_per_byte() const {
        return coverBytes == 0 ? 0.0 : static_cast<double>(embeddedBits) / static_cast<double>(coverBytes);
    }
};

// Embeds each mask's own Set-1 (and Set-2) bytes into its P10/P12/P30/P32
// coefficients and returns the stego image, same size as the cover.
Image embed_image(const Image& cover, const EmbedConfig& cfg, EmbedStats* stats = nullptr);

struct MaskAuthResult {
    int maskRow = 0;
    int maskCol = 0;
    std::uint8_t extractedSet1 = 0;
    std::uint8_t recomputedSet1 = 0;
    std::optional<std::uint8_t> extractedSet2;
    std::optional<std::uint8_t> recomputedSet2;
    bool matched = false;
};

enum class Verdict { Authentic, Tampered };

const char* verdict_name(Verdict verdict);

struct AuthReport {
    int rows = 0;
    int cols = 0;
    std::vector<MaskAuthResult> results;  // row-major
    double matchFraction = 0.0;
    Verdict verdict = Verdict::Tampered;
    std::vector<std::uint8_t> tamperMap;  // 1 where the mask did not match

    const MaskAuthResult& at(int row, int col) const {
        return results[static_cast<std::size_t>(row * cols + col)];
    }
    bool tampered(int row, int col) const {
        return tamperMap[static_cast<std::size_t>(row * cols + col)] != 0;
    }
    std::size_t matched_count() const;

    // Mask-resolution raster: 0 matched, 255 unmatched.
    Image tamper_map_image() const;
};

// Verifies one tile given its 4x4 samples.
MaskAuthResult authenticate_block(const PixelBlock& pixels, int maskRow, int maskCol,
                                  const EmbedConfig& cfg);

AuthReport authenticate_image(const Image& candidate, const EmbedConfig& cfg);

}  // namespace sadt
