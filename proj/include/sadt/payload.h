#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sadt/wavelet.h"

namespace sadt {

enum class PayloadMode { Set1Only, Set1AndSet2 };

// 2 bits per band when only Set-1 is carried, 4 when Set-2 rides along.
int bits_per_band(PayloadMode mode);

// Secret bytes carried per mask (1 or 2).
int bytes_per_mask(PayloadMode mode);

std::string_view mode_name(PayloadMode mode);  // "set1" / "set1set2"
std::optional<PayloadMode> parse_mode(std::string_view name);

struct SecretPayload {
    std::uint8_t set1 = 0;
    std::optional<std::uint8_t> set2;

    static SecretPayload single(std::uint8_t set1) { return {set1, std::nullopt}; }
    static SecretPayload dual(std::uint8_t set1, std::uint8_t set2) { return {set1, set2}; }

    PayloadMode mode() const {
        return set2 ? PayloadMode::Set1AndSet2 : PayloadMode::Set1Only;
    }

    friend bool operator==(const SecretPayload&, const SecretPayload&) = default;
};

// round(v) mod 256, taken in [0, 255]. Negative values wrap.
std::uint8_t byte_map(double v);

// Mean of all 16 coefficients, byte mapped.
std::uint8_t compute_set1(const CoefficientMask& mask);

// Mean of the AF quadrant, byte mapped.
std::uint8_t compute_set2(const CoefficientMask& mask);

SecretPayload compute_payload(const CoefficientMask& mask, PayloadMode mode);

// ((cellCol + cellRow * 4) + bitsPerBand) mod maxLsbPositions.
// Throws ArgumentError for cells outside the mask, bitsPerBand not in {2, 4},
// or maxLsbPositions < bitsPerBand.
int hash_position(int cellRow, int cellCol, int bitsPerBand, int maxLsbPositions);

// One bit list per band, indexed by Band.
using BandBits = std::array<std::vector<std::uint8_t>, 4>;

// Set-1 bits MSB-first, two per band in AF, HF, VF, DF order. In dual mode
// each band then gets the matching two Set-2 bits, so every band holds
// [set1 pair, set2 pair].
BandBits distribute_bits(const SecretPayload& payload);

// Inverse of distribute_bits. Throws ArgumentError on malformed groups.
SecretPayload assemble_bytes(const BandBits& bits, PayloadMode mode);

struct EmbedSite {
    int maskRow = 0;
    int maskCol = 0;
    int cellRow = 0;
    int cellCol = 0;
    Band band = Band::AF;
    std::vector<int> bitPositions;  // 0 = least significant
};

// In-mask cell of the embedding site: the third coefficient of each band
// (P10, P12, P30, P32).
int site_row(Band band);
int site_col(Band band);

// One site per band. Bit positions run consecutively from the hash position,
// wrapping modulo maxLsbPositions.
std::array<EmbedSite, 4> sites_for_mask(int maskRow, int maskCol, PayloadMode mode,
                                        int maxLsbPositions);

}  // namespace sadt
