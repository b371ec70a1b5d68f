#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sadt {

inline constexpr int kMaxval = 255;
inline constexpr int kBlockSize = 4;

// 8-bit grayscale raster, row-major.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    Image() = default;
    Image(int w, int h, std::uint8_t fill = 0);
    Image(int w, int h, std::vector<std::uint8_t> data);

    std::uint8_t& at(int row, int col) { return pixels[index(row, col)]; }
    std::uint8_t at(int row, int col) const { return pixels[index(row, col)]; }

    std::size_t size() const { return pixels.size(); }
    bool empty() const { return pixels.empty(); }

    friend bool operator==(const Image&, const Image&) = default;

private:
    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(col);
    }
};

// Smallest multiple of the 4x4 mask size that holds n.
int padded_extent(int n);

bool is_block_aligned(const Image& img);

// Extends the image right/bottom by edge replication up to a multiple of 4.
// Aligned images are returned unchanged.
Image pad_to_blocks(const Image& img);

// Top-left width x height window of img.
Image crop(const Image& img, int width, int height);

}  // namespace sadt
