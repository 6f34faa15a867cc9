#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "swli/errors.hpp"

namespace swli {

// Row-major 2-D float array. Small sizes throughout (token counts x hidden
// widths), so no BLAS: plain storage with double accumulation at use sites.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<float> data;

    Mat() = default;
    Mat(int r, int c, float fill = 0.0f) : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {}

    float& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    float at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
    size_t size() const { return data.size(); }
    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

inline bool all_finite(const std::vector<float>& v) {
    for (float x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline bool all_finite(const Mat& m) { return all_finite(m.data); }

inline void require_same_size(size_t a, size_t b, const std::string& what) {
    if (a != b)
        throw ContractError(what + ": size mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace swli
