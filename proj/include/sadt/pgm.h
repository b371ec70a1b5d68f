#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "sadt/image.h"

namespace sadt {

enum class PgmEncoding { Binary /* P5 */, Ascii /* P2 */ };

// Parses a P5 or P2 graymap. Header comments are skipped wherever they
// appear. Rasters with maxval below 255 are rescaled to 0..255. Throws
// FormatError, TruncatedError or UnsupportedError.
Image read_pgm(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> write_pgm(const Image& img, PgmEncoding encoding = PgmEncoding::Binary);

Image load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const Image& img,
              PgmEncoding encoding = PgmEncoding::Binary);

}  // namespace sadt
