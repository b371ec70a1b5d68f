#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sadt/codec.h"
#include "sadt/payload.h"

namespace sadt::cli {

// Process exit codes. Scripts branch on these.
enum ExitCode : int {
    kExitOk = 0,        // success / Authentic
    kExitTampered = 1,  // verify: Tampered
    kExitError = 2,     // I/O, format or argument failure
};

inline constexpr const char* kCsvHeader = "image,mode,mse,psnr_db,if,match_fraction";

// Shortest round-trip decimal; "inf" for infinity.
std::string format_real(double v);

struct CodecOptions {
    PayloadMode mode = PayloadMode::Set1Only;
    std::optional<int> maxLsb;
    std::optional<double> quantStep;
    std::optional<int> tolerance;
    std::optional<double> threshold;

    // Mode defaults overridden by whatever was given.
    EmbedConfig config() const;
};

struct EmbedOptions {
    std::filesystem::path input;
    std::filesystem::path output;
    CodecOptions codec;
    std::optional<std::filesystem::path> report;
};

struct VerifyOptions {
    std::filesystem::path input;
    CodecOptions codec;
    std::optional<std::filesystem::path> tamperMap;
};

struct BenchOptions {
    std::filesystem::path corpus;
    std::filesystem::path outCsv;
    CodecOptions codec;
};

enum class AttackKind { ZeroRegion, Noise };

struct AttackOptions {
    std::filesystem::path input;
    std::filesystem::path output;
    AttackKind kind = AttackKind::ZeroRegion;
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
    unsigned long long seed = 1;
};

struct BenchRow {
    std::string imageName;
    PayloadMode mode = PayloadMode::Set1Only;
    double mse = 0.0;
    double psnr = 0.0;
    double imageFidelity = 0.0;
    double matchFraction = 0.0;
};

// Published figures of competing schemes, reported next to measured results.
struct BaselineEntry {
    const char* technique;
    long capacityBytes;
    const char* coverSize;
    double bpB;
    double psnrDb;
};

const std::vector<BaselineEntry>& baselines();

// Arithmetic mean of the rows, named "Average".
BenchRow average_row(const std::vector<BenchRow>& rows);

std::string csv_line(const BenchRow& row);

int cmd_embed(const EmbedOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_metrics(const std::filesystem::path& a, const std::filesystem::path& b, std::ostream& out,
                std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_attack(const AttackOptions& opts, std::ostream& out, std::ostream& err);

// Full command line front end; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sadt::cli
