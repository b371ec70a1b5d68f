#include "sadt/payload.h"

#include <cmath>
#include <string>

#include "sadt/errors.h"

namespace sadt {

int bits_per_band(PayloadMode mode) {
    return mode == PayloadMode::Set1Only ? 2 : 4;
}

int bytes_per_mask(PayloadMode mode) {
    return mode == PayloadMode::Set1Only ? 1 : 2;
}

std::string_view mode_name(PayloadMode mode) {
    return mode == PayloadMode::Set1Only ? "set1" : "set1set2";
}

std::optional<PayloadMode> parse_mode(std::string_view name) {
    if (name == "set1") return PayloadMode::Set1Only;
    if (name == "set1set2") return PayloadMode::Set1AndSet2;
    return std::nullopt;
}

std::uint8_t byte_map(double v) {
    if (!std::isfinite(v)) throw NumericError("byte_map of a non-finite value");
    const double r = std::fmod(std::round(v), 256.0);
    const double wrapped = r < 0.0 ? r + 256.0 : r;
    return static_cast<std::uint8_t>(wrapped);
}

std::uint8_t compute_set1(const CoefficientMask& mask) {
    return byte_map(mask.sum() / 16.0);
}

std::uint8_t compute_set2(const CoefficientMask& mask) {
    double s = 0.0;
    for (const double v : mask.band(Band::AF)) s += v;
    return byte_map(s / 4.0);
}

SecretPayload compute_payload(const CoefficientMask& mask, PayloadMode mode) {
    if (mode == PayloadMode::Set1Only) return SecretPayload::single(compute_set1(mask));
    return SecretPayload::dual(compute_set1(mask), compute_set2(mask));
}

int hash_position(int cellRow, int cellCol, int bitsPerBand, int maxLsbPositions) {
    if (cellRow < 0 || cellRow > 3 || cellCol < 0 || cellCol > 3) {
        throw ArgumentError("cell (" + std::to_string(cellRow) + "," + std::to_string(cellCol) +
                            ") is outside the 4x4 mask");
    }
    if (bitsPerBand != 2 && bitsPerBand != 4) {
        throw ArgumentError("bits per band must be 2 or 4, got " + std::to_string(bitsPerBand));
    }
    if (maxLsbPositions < bitsPerBand) {
        throw ArgumentError("max LSB positions " + std::to_string(maxLsbPositions) +
                            " cannot hold " + std::to_string(bitsPerBand) + " bits");
    }
    return ((cellCol + cellRow * 4) + bitsPerBand) % maxLsbPositions;
}

BandBits distribute_bits(const SecretPayload& payload) {
    BandBits groups;
    for (std::size_t b = 0; b < 4; ++b) {
        const int hi = 7 - 2 * static_cast<int>(b);
        groups[b].push_back(static_cast<std::uint8_t>((payload.set1 >> hi) & 1));
        groups[b].push_back(static_cast<std::uint8_t>((payload.set1 >> (hi - 1)) & 1));
        if (payload.set2) {
            groups[b].push_back(static_cast<std::uint8_t>((*payload.set2 >> hi) & 1));
            groups[b].push_back(static_cast<std::uint8_t>((*payload.set2 >> (hi - 1)) & 1));
        }
    }
    return groups;
}

SecretPayload assemble_bytes(const BandBits& bits, PayloadMode mode) {
    const auto width = static_cast<std::size_t>(bits_per_band(mode));
    unsigned set1 = 0;
    unsigned set2 = 0;
    for (const auto& group : bits) {
        if (group.size() != width) {
            throw ArgumentError("band group holds " + std::to_string(group.size()) +
                                " bits, mode needs " + std::to_string(width));
        }
        for (const auto bit : group) {
            if (bit > 1) throw ArgumentError("bit value out of range");
        }
        set1 = (set1 << 2) | (static_cast<unsigned>(group[0]) << 1) | group[1];
        if (width == 4) set2 = (set2 << 2) | (static_cast<unsigned>(group[2]) << 1) | group[3];
    }
    if (mode == PayloadMode::Set1Only) return SecretPayload::single(static_cast<std::uint8_t>(set1));
    return SecretPayload::dual(static_cast<std::uint8_t>(set1), static_cast<std::uint8_t>(set2));
}

int site_row(Band band) {
    return CoefficientMask::band_row(band) + 1;
}

int site_col(Band band) {
    return CoefficientMask::band_col(band);
}

std::array<EmbedSite, 4> sites_for_mask(int maskRow, int maskCol, PayloadMode mode,
                                        int maxLsbPositions) {
    const int width = bits_per_band(mode);
    std::array<EmbedSite, 4> sites;
    for (const Band band : kBands) {
        EmbedSite& site = sites[static_cast<std::size_t>(band)];
        site.maskRow = maskRow;
        site.maskCol = maskCol;
        site.cellRow = site_row(band);
        site.cellCol = site_col(band);
        site.band = band;
        const int start = hash_position(site.cellRow, site.cellCol, width, maxLsbPositions);
        for (int i = 0; i < width; ++i) site.bitPositions.push_back((start + i) % maxLsbPositions);
    }
    return sites;
}

}  // namespace sadt
