#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hms {

// Error kinds map onto CLI exit codes: usage -> 1, data/io -> 2, divergence -> 3.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};
struct ConfigError : UsageError {
    explicit ConfigError(const std::string& msg) : UsageError(msg) {}
};
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};
struct IoError : DataError {
    explicit IoError(const std::string& msg) : DataError(msg) {}
};
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Counter-based splitmix64. Portable across platforms, unlike the standard
// library distributions. The whole game sim draws from this.
struct Rng {
    uint64_t state = 0;

    explicit Rng(uint64_t seed = 0) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0; modulo bias is irrelevant at our bounds
    uint64_t bounded(uint64_t bound) { return next() % bound; }

    // uniform in [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(bounded(static_cast<uint64_t>(hi - lo + 1)));
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Stateless mix for deriving per-game / per-step seeds from a master seed.
inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// FNV-1a 64-bit, used for state and replay digests.
struct Fnv1a {
    uint64_t h = 0xcbf29ce484222325ULL;

    void update(const void* data, size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 0x100000001b3ULL;
        }
    }
    void update_u64(uint64_t v) {
        unsigned char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
        update(b, 8);
    }
    void update_i64(int64_t v) { update_u64(static_cast<uint64_t>(v)); }
    uint64_t digest() const { return h; }
};

inline uint64_t fnv1a(const void* data, size_t n) {
    Fnv1a f;
    f.update(data, n);
    return f.digest();
}

struct Vec2 {
    int32_t x = 0;
    int32_t y = 0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
};

// integer sqrt (floor), for distances in world units
inline int64_t isqrt(int64_t v) {
    if (v <= 0) return 0;
    int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

inline int64_t dist2(Vec2 a, Vec2 b) {
    int64_t dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline int64_t dist(Vec2 a, Vec2 b) { return isqrt(dist2(a, b)); }

inline bool within(Vec2 a, Vec2 b, int64_t r) { return dist2(a, b) <= r * r; }

}  // namespace hms
