#include "sadt/pgm.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>

#include "sadt/errors.h"

namespace sadt {
namespace {

// Tokenizer over the Netpbm header and the P2 raster.
class Scanner {
public:
    explicit Scanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    // Skips whitespace and '#' comments (comment runs to end of line).
    void skip_space() {
        while (pos_ < bytes_.size()) {
            const auto ch = bytes_[pos_];
            if (ch == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else if (std::isspace(ch)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    // Reads an unsigned decimal. Returns nullopt at end of input.
    std::optional<long> number(const char* what) {
        skip_space();
        if (pos_ >= bytes_.size()) return std::nullopt;
        const std::size_t start = pos_;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) ++pos_;
        if (pos_ == start) {
            throw FormatError(std::string("expected a number for ") + what + " at byte " +
                              std::to_string(start));
        }
        if (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
            throw FormatError(std::string("junk after ") + what + " at byte " + std::to_string(pos_));
        }
        long value = 0;
        const auto* first = reinterpret_cast<const char*>(bytes_.data() + start);
        const auto* last = reinterpret_cast<const char*>(bytes_.data() + pos_);
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
            throw FormatError(std::string("number out of range for ") + what);
        }
        return value;
    }

    long header_number(const char* what) {
        auto v = number(what);
        if (!v) throw FormatError(std::string("header ends before ") + what);
        return *v;
    }

    // After maxval exactly one whitespace byte precedes the binary raster.
    void consume_single_space() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw FormatError("missing whitespace after maxval");
        }
        ++pos_;
    }

    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return bytes_.size() - pos_; }
    void advance(std::size_t n) { pos_ += n; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

constexpr long kMaxDimension = 1L << 20;

}  // namespace

Image read_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
        throw FormatError("not a PGM file: expected magic P5 or P2");
    }
    const bool binary = bytes[1] == '5';
    Scanner scan(bytes);
    scan.advance(2);
    if (scan.remaining() == 0 || (!std::isspace(bytes[2]) && bytes[2] != '#')) {
        throw FormatError("malformed magic number");
    }

    const long width = scan.header_number("width");
    const long height = scan.header_number("height");
    const long maxval = scan.header_number("maxval");
    if (width <= 0 || height <= 0 || width > kMaxDimension || height > kMaxDimension) {
        throw FormatError("invalid dimensions " + std::to_string(width) + "x" +
                          std::to_string(height));
    }
    if (maxval <= 0) throw FormatError("maxval must be positive");
    if (maxval > kMaxval) {
        throw UnsupportedError("maxval " + std::to_string(maxval) + " exceeds 255");
    }

    const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<std::uint8_t> pixels;
    pixels.reserve(count);

    if (binary) {
        scan.consume_single_space();
        if (scan.remaining() < count) {
            throw TruncatedError("raster has " + std::to_string(scan.remaining()) +
                                 " bytes, header declares " + std::to_string(count));
        }
        const auto raster = bytes.subspan(scan.pos(), count);
        for (const auto v : raster) {
            if (v > maxval) throw FormatError("sample exceeds maxval");
            pixels.push_back(v);
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const auto v = scan.number("sample");
            if (!v) {
                throw TruncatedError("raster has " + std::to_string(i) +
                                     " samples, header declares " + std::to_string(count));
            }
            if (*v > maxval) throw FormatError("sample exceeds maxval");
            pixels.push_back(static_cast<std::uint8_t>(*v));
        }
    }
    if (maxval != kMaxval) {
        for (auto& v : pixels) {
            v = static_cast<std::uint8_t>((v * kMaxval + maxval / 2) / maxval);
        }
    }
    return Image(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::vector<std::uint8_t> write_pgm(const Image& img, PgmEncoding encoding) {
    const bool binary = encoding == PgmEncoding::Binary;
    const std::string header = std::string(binary ? "P5" : "P2") + "\n" +
                               std::to_string(img.width) + " " + std::to_string(img.height) +
                               "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    if (binary) {
        out.insert(out.end(), img.pixels.begin(), img.pixels.end());
        return out;
    }
    // Plain format lines should stay under 70 characters.
    std::string line;
    for (int r = 0; r < img.height; ++r) {
        line.clear();
        for (int c = 0; c < img.width; ++c) {
            std::string token = std::to_string(img.at(r, c));
            if (!line.empty() && line.size() + 1 + token.size() > 69) {
                line += '\n';
                out.insert(out.end(), line.begin(), line.end());
                line.clear();
            }
            if (!line.empty()) line += ' ';
            line += token;
        }
        line += '\n';
        out.insert(out.end(), line.begin(), line.end());
    }
    return out;
}

Image load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                          std::istreambuf_iterator<char>());
    return read_pgm(bytes);
}

void save_pgm(const std::filesystem::path& path, const Image& img, PgmEncoding encoding) {
    const auto bytes = write_pgm(img, encoding);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed for " + path.string());
}

}  // namespace sadt
