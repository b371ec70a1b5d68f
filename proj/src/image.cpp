#include "sadt/image.h"

#include <algorithm>
#include <string>

#include "sadt/errors.h"

namespace sadt {

Image::Image(int w, int h, std::uint8_t fill) : width(w), height(h) {
    if (w <= 0 || h <= 0) {
        throw ArgumentError("image dimensions must be positive, got " + std::to_string(w) + "x" +
                            std::to_string(h));
    }
    pixels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill);
}

Image::Image(int w, int h, std::vector<std::uint8_t> data)
    : width(w), height(h), pixels(std::move(data)) {
    if (w <= 0 || h <= 0) {
        throw ArgumentError("image dimensions must be positive, got " + std::to_string(w) + "x" +
                            std::to_string(h));
    }
    if (pixels.size() != static_cast<std::size_t>(w) * static_cast<std::size_t>(h)) {
        throw ArgumentError("pixel count " + std::to_string(pixels.size()) +
                            " does not match " + std::to_string(w) + "x" + std::to_string(h));
    }
}

int padded_extent(int n) {
    return (n + kBlockSize - 1) / kBlockSize * kBlockSize;
}

bool is_block_aligned(const Image& img) {
    return img.width % kBlockSize == 0 && img.height % kBlockSize == 0;
}

Image pad_to_blocks(const Image& img) {
    if (is_block_aligned(img)) return img;
    Image out(padded_extent(img.width), padded_extent(img.height));
    for (int r = 0; r < out.height; ++r) {
        const int sr = std::min(r, img.height - 1);
        for (int c = 0; c < out.width; ++c) {
            out.at(r, c) = img.at(sr, std::min(c, img.width - 1));
        }
    }
    return out;
}

Image crop(const Image& img, int width, int height) {
    if (width > img.width || height > img.height) {
        throw ArgumentError("crop window larger than image");
    }
    if (width == img.width && height == img.height) return img;
    Image out(width, height);
    for (int r = 0; r < height; ++r) {
        std::copy_n(img.pixels.begin() + static_cast<std::ptrdiff_t>(r) * img.width, width,
                    out.pixels.begin() + static_cast<std::ptrdiff_t>(r) * width);
    }
    return out;
}

}  // namespace sadt
