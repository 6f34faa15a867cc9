#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

namespace swli {

// FNV-1a, 64 bit. Used for cache checksums, fingerprints and the named
// weight streams of the toy backend.
inline constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ull;
inline constexpr uint64_t kFnvPrime  = 0x100000001b3ull;

inline uint64_t fnv1a(const void* data, size_t len, uint64_t h = kFnvOffset) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

inline uint64_t fnv1a(std::string_view s, uint64_t h = kFnvOffset) {
    return fnv1a(s.data(), s.size(), h);
}

template <typename T>
uint64_t fnv1a_value(const T& v, uint64_t h = kFnvOffset) {
    static_assert(std::is_trivially_copyable_v<T>);
    return fnv1a(&v, sizeof(T), h);
}

template <typename T>
uint64_t fnv1a_range(const std::vector<T>& v, uint64_t h = kFnvOffset) {
    static_assert(std::is_trivially_copyable_v<T>);
    return v.empty() ? h : fnv1a(v.data(), v.size() * sizeof(T), h);
}

inline std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

// Deterministic counter-based PRNG (splitmix64). Unlike std distributions its
// output sequence is pinned by this header on every platform, which keeps
// seeded toy-backend weights and tests bit-reproducible.
class StreamRng {
public:
    StreamRng(uint64_t seed, std::string_view stream_name)
        : state_(fnv1a(stream_name, fnv1a_value(seed))) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in (0, 1)
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal via Box-Muller (one value per call, pair cached)
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double r  = std::sqrt(-2.0 * std::log(u1));
        double a  = 2.0 * 3.14159265358979323846 * u2;
        spare_      = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_    = 0.0;
};

}  // namespace swli
