#pragma once

#include <string>
#include <vector>

#include "sadt/image.h"

namespace sadt::synthetic {

struct NamedImage {
    std::string name;
    Image image;
};

// Deterministic natural-looking test image: fractal value noise, soft-edged
// shapes, occasional stripe texture and sensor grain. Each index gives a
// different scene.
Image generate(int index, int width = 512, int height = 512);

// "synthetic_00" .. in index order.
std::vector<NamedImage> corpus(int count = 10, int width = 512, int height = 512);

}  // namespace sadt::synthetic
