#include "sadt/codec.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sadt/errors.h"

namespace sadt {
namespace {

constexpr int kMaxPosition = 30;
constexpr int kMaxRefineSteps = 96;

void check_positions(std::span<const int> positions) {
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 0 || positions[i] > kMaxPosition) {
            throw ArgumentError("bit position " + std::to_string(positions[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (positions[i] == positions[j]) throw ArgumentError("bit positions must be distinct");
        }
    }
}

double quantize(double c, double step) {
    if (!std::isfinite(c)) throw NumericError("non-finite coefficient");
    if (!(step > 0.0) || !std::isfinite(step)) throw ArgumentError("quantization step must be positive");
    const double q = round_half_away(c / step);
    if (std::fabs(q) > static_cast<double>(1LL << 52)) throw NumericError("coefficient too large to quantize");
    return q;
}

// Pixel window of one mask. Cells beyond the image edge replicate the last
// row/column, which matches pad_to_blocks.
struct Tile {
    int row0 = 0;
    int col0 = 0;
    int rows = 4;
    int cols = 4;

    static Tile of(const Image& img, int maskRow, int maskCol) {
        Tile t;
        t.row0 = maskRow * kBlockSize;
        t.col0 = maskCol * kBlockSize;
        t.rows = std::min(kBlockSize, img.height - t.row0);
        t.cols = std::min(kBlockSize, img.width - t.col0);
        return t;
    }

    // Tile-local sample index for mask cell (r, c).
    std::size_t source(int r, int c) const {
        return static_cast<std::size_t>(std::min(r, rows - 1) * 4 + std::min(c, cols - 1));
    }
};

using LocalPixels = std::array<int, 16>;

LocalPixels load(const Image& img, const Tile& t) {
    LocalPixels px{};
    for (int r = 0; r < t.rows; ++r) {
        for (int c = 0; c < t.cols; ++c) px[static_cast<std::size_t>(r * 4 + c)] = img.at(t.row0 + r, t.col0 + c);
    }
    return px;
}

void store(Image& img, const Tile& t, const LocalPixels& px) {
    for (int r = 0; r < t.rows; ++r) {
        for (int c = 0; c < t.cols; ++c) {
            img.at(t.row0 + r, t.col0 + c) = static_cast<std::uint8_t>(px[static_cast<std::size_t>(r * 4 + c)]);
        }
    }
}

PixelBlock expand(const LocalPixels& px, const Tile& t) {
    PixelBlock block{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) block[static_cast<std::size_t>(r * 4 + c)] = px[t.source(r, c)];
    }
    return block;
}

double wrapped_real_distance(double value, std::uint8_t byte) {
    double d = std::fmod(std::fabs(value - byte), 256.0);
    return std::min(d, 256.0 - d);
}

// Target state of one mask after coefficient-domain embedding.
struct MaskTarget {
    CoefficientMask coeffs;
    SecretPayload payload;  // unbound bytes the verifier must recompute
};

// Squared miss on the embedding sites plus a penalty once a recomputed
// average drifts near the tolerance edge.
double refine_cost(const PixelBlock& block, const MaskTarget& target, const EmbedConfig& cfg,
                   const FilterBank& fb) {
    const CoefficientMask m = fdt_block(block, fb);
    double cost = 0.0;
    for (const Band band : kBands) {
        const int r = site_row(band);
        const int c = site_col(band);
        const double e = (m.at(r, c) - target.coeffs.at(r, c)) / cfg.quantStep;
        cost += e * e;
    }
    const double slack = static_cast<double>(cfg.tolerance) - 1.0;
    const double d1 = wrapped_real_distance(m.sum() / 16.0, target.payload.set1) - slack;
    if (d1 > 0.0) cost += d1 * d1;
    if (target.payload.set2) {
        double af = 0.0;
        for (const double v : m.band(Band::AF)) af += v;
        const double d2 = wrapped_real_distance(af / 4.0, *target.payload.set2) - slack;
        if (d2 > 0.0) cost += d2 * d2;
    }
    return cost;
}

// Greedy +-1 descent over the tile's real pixels. Returns true once the
// tile verifies.
bool refine_tile(LocalPixels& px, const Tile& t, const MaskTarget& target, int maskRow,
                 int maskCol, const EmbedConfig& cfg, const FilterBank& fb) {
    double current = refine_cost(expand(px, t), target, cfg, fb);
    for (int step = 0; step < kMaxRefineSteps; ++step) {
        std::size_t best_index = 0;
        int best_delta = 0;
        double best_cost = current;
        for (int r = 0; r < t.rows; ++r) {
            for (int c = 0; c < t.cols; ++c) {
                const auto i = static_cast<std::size_t>(r * 4 + c);
                for (const int delta : {-1, 1}) {
                    const int v = px[i] + delta;
                    if (v < 0 || v > kMaxval) continue;
                    px[i] = v;
                    const double cost = refine_cost(expand(px, t), target, cfg, fb);
                    px[i] -= delta;
                    if (cost < best_cost) {
                        best_cost = cost;
                        best_index = i;
                        best_delta = delta;
                    }
                }
            }
        }
        if (best_delta == 0) return false;
        px[best_index] += best_delta;
        current = best_cost;
        if (authenticate_block(expand(px, t), maskRow, maskCol, cfg).matched) return true;
    }
    return false;
}

SecretPayload bind(SecretPayload p, int maskRow, int maskCol) {
    p.set1 ^= binding_byte(maskRow, maskCol, 0);
    if (p.set2) *p.set2 ^= binding_byte(maskRow, maskCol, 1);
    return p;
}

}  // namespace

EmbedConfig EmbedConfig::for_mode(PayloadMode mode) {
    EmbedConfig cfg;
    cfg.mode = mode;
    if (mode == PayloadMode::Set1AndSet2) {
        cfg.maxLsbPositions = 4;
        cfg.quantStep = 0.375;
    }
    return cfg;
}

void EmbedConfig::validate() const {
    if (maxLsbPositions < bits_per_band(mode)) {
        throw ArgumentError("max LSB positions " + std::to_string(maxLsbPositions) +
                            " is below the " + std::to_string(bits_per_band(mode)) +
                            " bits per band of mode " + std::string(mode_name(mode)));
    }
    if (maxLsbPositions > kMaxPosition) throw ArgumentError("max LSB positions too large");
    if (!(quantStep > 0.0) || !std::isfinite(quantStep)) {
        throw ArgumentError("quantization step must be a positive number");
    }
    if (tolerance < 0 || tolerance > 255) throw ArgumentError("tolerance must lie in [0, 255]");
    if (!(verdictThreshold >= 0.0 && verdictThreshold <= 1.0)) {
        throw ArgumentError("verdict threshold must lie in [0, 1]");
    }
}

double embed_in_coefficient(double c, std::span<const std::uint8_t> bits,
                            std::span<const int> positions, double step) {
    if (bits.size() != positions.size()) {
        throw ArgumentError("got " + std::to_string(bits.size()) + " bits for " +
                            std::to_string(positions.size()) + " positions");
    }
    check_positions(positions);
    const double q = quantize(c, step);
    auto magnitude = static_cast<std::uint64_t>(std::fabs(q));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const std::uint64_t mask = std::uint64_t{1} << positions[i];
        magnitude = (magnitude & ~mask) | (bits[i] ? mask : 0);
    }
    const double sign = q < 0.0 ? -1.0 : 1.0;
    return sign * static_cast<double>(magnitude) * step;
}

std::vector<std::uint8_t> extract_from_coefficient(double c, std::span<const int> positions,
                                                   double step) {
    check_positions(positions);
    const auto magnitude = static_cast<std::uint64_t>(std::fabs(quantize(c, step)));
    std::vector<std::uint8_t> bits;
    bits.reserve(positions.size());
    for (const int p : positions) bits.push_back(static_cast<std::uint8_t>((magnitude >> p) & 1));
    return bits;
}

int wrapped_distance(std::uint8_t a, std::uint8_t b) {
    const int d = std::abs(static_cast<int>(a) - static_cast<int>(b));
    return std::min(d, 256 - d);
}

std::uint8_t binding_byte(int maskRow, int maskCol, int set) {
    // splitmix64 finalizer over the packed position.
    std::uint64_t z = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(maskRow)) << 32) |
                      static_cast<std::uint32_t>(maskCol);
    z += 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(set + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return static_cast<std::uint8_t>(z & 0xFF);
}

Image embed_image(const Image& cover, const EmbedConfig& cfg, EmbedStats* stats) {
    cfg.validate();
    if (cover.empty()) throw ArgumentError("cover image is empty");
    const FilterBank fb = FilterBank::daubechies4();
    const int mask_rows = padded_extent(cover.height) / kBlockSize;
    const int mask_cols = padded_extent(cover.width) / kBlockSize;

    EmbedStats local;
    local.coverBytes = cover.size();
    Image stego = cover;

    for (int mr = 0; mr < mask_rows; ++mr) {
        for (int mc = 0; mc < mask_cols; ++mc) {
            const Tile tile = Tile::of(cover, mr, mc);
            LocalPixels px = load(cover, tile);
            const CoefficientMask coeffs = fdt_block(expand(px, tile), fb);

            MaskTarget target{coeffs, compute_payload(coeffs, cfg.mode)};
            const SecretPayload carried =
                cfg.bindPosition ? bind(target.payload, mr, mc) : target.payload;
            const BandBits bits = distribute_bits(carried);
            for (const EmbedSite& site : sites_for_mask(mr, mc, cfg.mode, cfg.maxLsbPositions)) {
                const auto& group = bits[static_cast<std::size_t>(site.band)];
                double& c = target.coeffs.at(site.cellRow, site.cellCol);
                c = embed_in_coefficient(c, group, site.bitPositions, cfg.quantStep);
                local.embeddedBits += group.size();
            }
            local.secretBytes += static_cast<std::size_t>(bytes_per_mask(cfg.mode));
            ++local.masks;

            const PixelBlock spatial = idt_block(target.coeffs, fb);
            for (int r = 0; r < tile.rows; ++r) {
                for (int c = 0; c < tile.cols; ++c) {
                    px[static_cast<std::size_t>(r * 4 + c)] = to_pixel(spatial[static_cast<std::size_t>(r * 4 + c)]);
                }
            }

            if (!authenticate_block(expand(px, tile), mr, mc, cfg).matched) {
                bool fixed = false;
                if (cfg.refine) {
                    ++local.refinedMasks;
                    fixed = refine_tile(px, tile, target, mr, mc, cfg, fb);
                }
                if (!fixed) ++local.unresolvedMasks;
            }
            store(stego, tile, px);
        }
    }
    if (stats) *stats = local;
    return stego;
}

const char* verdict_name(Verdict verdict) {
    return verdict == Verdict::Authentic ? "Authentic" : "Tampered";
}

std::size_t AuthReport::matched_count() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const MaskAuthResult& r) { return r.matched; }));
}

Image AuthReport::tamper_map_image() const {
    Image img(cols, rows);
    for (std::size_t i = 0; i < tamperMap.size(); ++i) img.pixels[i] = tamperMap[i] ? 255 : 0;
    return img;
}

MaskAuthResult authenticate_block(const PixelBlock& pixels, int maskRow, int maskCol,
                                  const EmbedConfig& cfg) {
    static const FilterBank fb = FilterBank::daubechies4();
    const CoefficientMask coeffs = fdt_block(pixels, fb);

    BandBits bits;
    for (const EmbedSite& site : sites_for_mask(maskRow, maskCol, cfg.mode, cfg.maxLsbPositions)) {
        bits[static_cast<std::size_t>(site.band)] =
            extract_from_coefficient(coeffs.at(site.cellRow, site.cellCol), site.bitPositions, cfg.quantStep);
    }
    SecretPayload extracted = assemble_bytes(bits, cfg.mode);
    if (cfg.bindPosition) extracted = bind(extracted, maskRow, maskCol);
    const SecretPayload recomputed = compute_payload(coeffs, cfg.mode);

    MaskAuthResult result;
    result.maskRow = maskRow;
    result.maskCol = maskCol;
    result.extractedSet1 = extracted.set1;
    result.recomputedSet1 = recomputed.set1;
    result.extractedSet2 = extracted.set2;
    result.recomputedSet2 = recomputed.set2;
    result.matched = wrapped_distance(extracted.set1, recomputed.set1) <= cfg.tolerance;
    if (extracted.set2 && recomputed.set2) {
        result.matched = result.matched && wrapped_distance(*extracted.set2, *recomputed.set2) <= cfg.tolerance;
    }
    return result;
}

AuthReport authenticate_image(const Image& candidate, const EmbedConfig& cfg) {
    cfg.validate();
    if (candidate.empty()) throw ArgumentError("candidate image is empty");
    AuthReport report;
    report.rows = padded_extent(candidate.height) / kBlockSize;
    report.cols = padded_extent(candidate.width) / kBlockSize;
    const auto total = static_cast<std::size_t>(report.rows) * static_cast<std::size_t>(report.cols);
    report.results.reserve(total);
    report.tamperMap.reserve(total);

    for (int mr = 0; mr < report.rows; ++mr) {
        for (int mc = 0; mc < report.cols; ++mc) {
            const Tile tile = Tile::of(candidate, mr, mc);
            report.results.push_back(authenticate_block(expand(load(candidate, tile), tile), mr, mc, cfg));
            report.tamperMap.push_back(report.results.back().matched ? 0 : 1);
        }
    }
    report.matchFraction = static_cast<double>(report.matched_count()) / static_cast<double>(total);
    report.verdict = report.matchFraction >= cfg.verdictThreshold ? Verdict::Authentic : Verdict::Tampered;
    return report;
}

}  // namespace sadt
