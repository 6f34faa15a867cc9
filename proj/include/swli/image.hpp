#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swli/errors.hpp"
#include "swli/hashing.hpp"

namespace swli {

// 8-bit RGB image, row-major, interleaved channels.
struct Image {
    int width    = 0;
    int height   = 0;
    int channels = 3;
    std::vector<uint8_t> pixels;

    Image() = default;
    Image(int w, int h, int c = 3) : width(w), height(h), channels(c), pixels(static_cast<size_t>(w) * h * c, 0) {}

    uint8_t& at(int y, int x, int c) { return pixels[(static_cast<size_t>(y) * width + x) * channels + c]; }
    uint8_t at(int y, int x, int c) const { return pixels[(static_cast<size_t>(y) * width + x) * channels + c]; }
    size_t size() const { return pixels.size(); }
    bool same_shape(const Image& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }

    uint64_t content_hash() const {
        uint64_t h = fnv1a_value(width);
        h          = fnv1a_value(height, h);
        h          = fnv1a_value(channels, h);
        return fnv1a(pixels.data(), pixels.size(), h);
    }
};

}  // namespace swli
