#include "commands.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "sadt/errors.h"
#include "sadt/metrics.h"
#include "sadt/pgm.h"

namespace sadt::cli {
namespace fs = std::filesystem;

std::string format_real(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

EmbedConfig CodecOptions::config() const {
    EmbedConfig cfg = EmbedConfig::for_mode(mode);
    if (maxLsb) cfg.maxLsbPositions = *maxLsb;
    if (quantStep) cfg.quantStep = *quantStep;
    if (tolerance) cfg.tolerance = *tolerance;
    if (threshold) cfg.verdictThreshold = *threshold;
    cfg.validate();
    return cfg;
}

const std::vector<BaselineEntry>& baselines() {
    static const std::vector<BaselineEntry> table = {
        // Radon transform plus 2-D wavelet watermarking.
        {"Li's method", 1089, "257x257", 0.13, 28.68},
        // Multidimensional Fourier colour watermarking.
        {"SCDFT", 3840, "512x512", 0.12, 30.10},
        // Colour self-authentication in the DCT domain.
        {"SADCT", 8192, "512x512", 0.08, 56.63},
        // Region-based spatial watermarking.
        {"Region-Based", 16384, "512x512", 0.5, 40.79},
        // Hough-transform self signature in the DCT domain.
        {"IAHTSSDCT", 16384, "512x512", 0.5, 47.48},
        // Wavelet-domain authentication with a Hough signature.
        {"AWTDHDS", 16384, "512x512", 0.5, 44.87},
        // Colour self-authentication with wavelets.
        {"SAWT", 131072, "512x512", 1.3, 36.62},
    };
    return table;
}

BenchRow average_row(const std::vector<BenchRow>& rows) {
    BenchRow avg;
    avg.imageName = "Average";
    if (rows.empty()) return avg;
    avg.mode = rows.front().mode;
    for (const auto& r : rows) {
        avg.mse += r.mse;
        avg.psnr += r.psnr;
        avg.imageFidelity += r.imageFidelity;
        avg.matchFraction += r.matchFraction;
    }
    const auto n = static_cast<double>(rows.size());
    avg.mse /= n;
    avg.psnr /= n;
    avg.imageFidelity /= n;
    avg.matchFraction /= n;
    return avg;
}

std::string csv_line(const BenchRow& row) {
    return row.imageName + "," + std::string(mode_name(row.mode)) + "," + format_real(row.mse) + "," +
           format_real(row.psnr) + "," + format_real(row.imageFidelity) + "," +
           format_real(row.matchFraction);
}

namespace {

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + path.string());
    f << text;
    if (!f) throw Error("write failed for " + path.string());
}

BenchRow evaluate(const std::string& name, const Image& cover, const EmbedConfig& cfg,
                  Image* stego_out = nullptr, EmbedStats* stats = nullptr) {
    const Image stego = embed_image(cover, cfg, stats);
    const QualityMetrics q = measure(cover, stego);
    const AuthReport report = authenticate_image(stego, cfg);
    if (stego_out) *stego_out = stego;
    return {name, cfg.mode, q.mse, q.psnr, q.imageFidelity, report.matchFraction};
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace

int cmd_embed(const EmbedOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const EmbedConfig cfg = opts.codec.config();
        const Image cover = load_pgm(opts.input);
        Image stego;
        EmbedStats stats;
        const BenchRow row = evaluate(opts.input.filename().string(), cover, cfg, &stego, &stats);
        save_pgm(opts.output, stego);

        out << "embedded " << stats.secretBytes << " secret bytes into " << cover.width << "x"
            << cover.height << " (" << stats.masks << " masks, " << format_real(stats.bits_per_byte())
            << " bpB, mode " << mode_name(cfg.mode) << ")\n";
        out << "MSE " << format_real(row.mse) << "  PSNR " << format_real(row.psnr) << " dB  IF "
            << format_real(row.imageFidelity) << "  match " << format_real(row.matchFraction) << "\n";
        if (stats.unresolvedMasks > 0) {
            out << stats.unresolvedMasks << " masks could not be made to verify\n";
        }
        if (opts.report) write_text(*opts.report, std::string(kCsvHeader) + "\n" + csv_line(row) + "\n");
        return kExitOk;
    });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const EmbedConfig cfg = opts.codec.config();
        const Image candidate = load_pgm(opts.input);
        const AuthReport report = authenticate_image(candidate, cfg);
        if (opts.tamperMap) save_pgm(*opts.tamperMap, report.tamper_map_image());
        const std::size_t total = report.results.size();
        out << "masks " << total << "  matched " << report.matched_count() << "  unmatched "
            << total - report.matched_count() << "\n";
        out << "match_fraction " << format_real(report.matchFraction) << "\n";
        out << "verdict " << verdict_name(report.verdict) << "\n";
        return report.verdict == Verdict::Authentic ? kExitOk : kExitTampered;
    });
}

int cmd_metrics(const fs::path& a, const fs::path& b, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Image first = load_pgm(a);
        const Image second = load_pgm(b);
        const QualityMetrics q = measure(first, second);
        out << "name,mse,psnr,if\n";
        out << b.filename().string() << "," << format_real(q.mse) << "," << format_real(q.psnr) << ","
            << format_real(q.imageFidelity) << "\n";
        return kExitOk;
    });
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const EmbedConfig cfg = opts.codec.config();
        if (!fs::is_directory(opts.corpus)) throw Error("not a directory: " + opts.corpus.string());
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(opts.corpus)) {
            if (entry.is_regular_file() && entry.path().extension() == ".pgm") files.push_back(entry.path());
        }
        if (files.empty()) throw Error("no .pgm images in " + opts.corpus.string());
        std::sort(files.begin(), files.end());

        std::vector<BenchRow> rows;
        std::size_t secret_bytes = 0;
        std::size_t embedded_bits = 0;
        std::size_t cover_bytes = 0;
        for (const auto& path : files) {
            EmbedStats stats;
            rows.push_back(evaluate(path.filename().string(), load_pgm(path), cfg, nullptr, &stats));
            secret_bytes += stats.secretBytes;
            embedded_bits += stats.embeddedBits;
            cover_bytes += stats.coverBytes;
            out << csv_line(rows.back()) << "\n";
        }
        const BenchRow avg = average_row(rows);

        std::ostringstream csv;
        csv << kCsvHeader << "\n";
        for (const auto& r : rows) csv << csv_line(r) << "\n";
        csv << csv_line(avg) << "\n";
        csv << "\n";
        csv << "technique,capacity_bytes,cover_size,bpb,psnr_db\n";
        for (const auto& b : baselines()) {
            csv << b.technique << "," << b.capacityBytes << "," << b.coverSize << ","
                << format_real(b.bpB) << "," << format_real(b.psnrDb) << "\n";
        }
        const double bpb = static_cast<double>(embedded_bits) / static_cast<double>(cover_bytes);
        csv << "SADT " << mode_name(cfg.mode) << " (measured)," << secret_bytes / rows.size() << ","
            << "per-image mean," << format_real(bpb) << "," << format_real(avg.psnr) << "\n";
        write_text(opts.outCsv, csv.str());

        out << csv_line(avg) << "\n";
        out << rows.size() << " images, " << format_real(bpb) << " bpB, report written to "
            << opts.outCsv.string() << "\n";
        return kExitOk;
    });
}

int cmd_attack(const AttackOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Image img = load_pgm(opts.input);
        if (opts.x < 0 || opts.y < 0 || opts.w < 0 || opts.h < 0 || opts.x + opts.w > img.width ||
            opts.y + opts.h > img.height) {
            throw ArgumentError("region " + std::to_string(opts.w) + "x" + std::to_string(opts.h) + "+" +
                                std::to_string(opts.x) + "+" + std::to_string(opts.y) +
                                " is outside the " + std::to_string(img.width) + "x" +
                                std::to_string(img.height) + " image");
        }
        std::mt19937_64 engine(opts.seed);
        std::size_t changed = 0;
        for (int r = opts.y; r < opts.y + opts.h; ++r) {
            for (int c = opts.x; c < opts.x + opts.w; ++c) {
                auto& px = img.at(r, c);
                int v = 0;
                if (opts.kind == AttackKind::Noise) {
                    const int delta = static_cast<int>(engine() % 17) - 8;
                    v = std::clamp(static_cast<int>(px) + delta, 0, kMaxval);
                }
                if (v != px) ++changed;
                px = static_cast<std::uint8_t>(v);
            }
        }
        save_pgm(opts.output, img);
        out << "changed " << changed << " pixels\n";
        return kExitOk;
    });
}

namespace {

void add_codec_options(CLI::App* cmd, CodecOptions& codec, std::string& mode, bool verify_flags) {
    cmd->add_option("--mode", mode, "Payload mode")
        ->check(CLI::IsMember({"set1", "set1set2"}))
        ->capture_default_str();
    cmd->add_option("--max-lsb", codec.maxLsb, "Embedding bit positions counted from the LSB (default 2 for set1, 4 for set1set2)")
        ->check(CLI::Range(1, 30));
    cmd->add_option("--quant-step", codec.quantStep,
                    "Coefficient quantization step (default 1 for set1, 0.375 for set1set2)")
        ->check(CLI::PositiveNumber);
    if (verify_flags) {
        cmd->add_option("--tolerance", codec.tolerance, "Accepted wrapped byte distance (default 4)")
            ->check(CLI::Range(0, 255));
        cmd->add_option("--threshold", codec.threshold, "Matched fraction needed for Authentic (default 0.95)")
            ->check(CLI::Range(0.0, 1.0));
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Self-authentication of grayscale images in the 4x4 Daubechies domain"};
    app.require_subcommand(1);

    std::string mode = "set1";
    EmbedOptions embed;
    VerifyOptions verify;
    BenchOptions bench;
    AttackOptions attack;
    std::string report;
    std::string tamper_map;
    std::string metrics_a;
    std::string metrics_b;
    std::string attack_kind = "zero-region";

    auto* embed_cmd = app.add_subcommand("embed", "Embed the self signature into a cover PGM");
    embed_cmd->add_option("input", embed.input, "Cover image")->required();
    embed_cmd->add_option("output", embed.output, "Stego image to write")->required();
    add_codec_options(embed_cmd, embed.codec, mode, false);
    embed_cmd->add_option("--report", report, "Write a CSV line with MSE/PSNR/IF");

    auto* verify_cmd = app.add_subcommand("verify", "Authenticate a stego PGM (exit 0 Authentic, 1 Tampered)");
    verify_cmd->add_option("input", verify.input, "Image to check")->required();
    add_codec_options(verify_cmd, verify.codec, mode, true);
    verify_cmd->add_option("--tamper-map", tamper_map, "Write the mask-resolution tamper map as PGM");

    auto* metrics_cmd = app.add_subcommand("metrics", "Print MSE, PSNR and IF of two images");
    metrics_cmd->add_option("reference", metrics_a, "Reference (cover) image")->required();
    metrics_cmd->add_option("test", metrics_b, "Test image")->required();

    auto* bench_cmd = app.add_subcommand("bench", "Embed, measure and verify every PGM of a corpus");
    bench_cmd->add_option("corpus", bench.corpus, "Directory of .pgm images")->required();
    bench_cmd->add_option("output", bench.outCsv, "CSV report to write")->required();
    add_codec_options(bench_cmd, bench.codec, mode, true);

    auto* attack_cmd = app.add_subcommand("attack", "Tamper with a rectangle of an image");
    attack_cmd->add_option("input", attack.input, "Image to tamper")->required();
    attack_cmd->add_option("output", attack.output, "Tampered image to write")->required();
    attack_cmd->add_option("--kind", attack_kind, "zero-region or noise")
        ->check(CLI::IsMember({"zero-region", "noise"}))
        ->capture_default_str();
    attack_cmd->add_option("--x", attack.x, "Left edge")->required();
    attack_cmd->add_option("--y", attack.y, "Top edge")->required();
    attack_cmd->add_option("--width", attack.w, "Region width")->required();
    attack_cmd->add_option("--height", attack.h, "Region height")->required();
    attack_cmd->add_option("--seed", attack.seed, "Noise seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    const PayloadMode parsed_mode = *parse_mode(mode);
    if (*embed_cmd) {
        embed.codec.mode = parsed_mode;
        if (!report.empty()) embed.report = report;
        return cmd_embed(embed, out, err);
    }
    if (*verify_cmd) {
        verify.codec.mode = parsed_mode;
        if (!tamper_map.empty()) verify.tamperMap = tamper_map;
        return cmd_verify(verify, out, err);
    }
    if (*metrics_cmd) return cmd_metrics(metrics_a, metrics_b, out, err);
    if (*bench_cmd) {
        bench.codec.mode = parsed_mode;
        return cmd_bench(bench, out, err);
    }
    attack.kind = attack_kind == "noise" ? AttackKind::Noise : AttackKind::ZeroRegion;
    return cmd_attack(attack, out, err);
}

}  // namespace sadt::cli
