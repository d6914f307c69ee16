#ifndef HGCOLOR_PRF_HPP
#define HGCOLOR_PRF_HPP

#include <cstdint>
#include <limits>
#include <vector>

namespace hgcolor {

// Counter-based deterministic pseudorandomness. Everything randomized in this
// library derives from a 64-bit seed through these functions, so runs are
// reproducible bit-for-bit regardless of platform or arrival order.

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ull;

// SplitMix64 finalizer (bijective mixer).
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += kGoldenGamma;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t prf(std::uint64_t key, std::uint64_t a) {
    return mix64(mix64(key) ^ a);
}

constexpr std::uint64_t prf(std::uint64_t key, std::uint64_t a, std::uint64_t b) {
    return mix64(prf(key, a) ^ b);
}

constexpr std::uint64_t prf(std::uint64_t key, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) {
    return mix64(prf(key, a, b) ^ c);
}

// 53-bit mantissa draw in [0, 1).
constexpr double unit_interval(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Stateless-keyed counter stream; satisfies uniform_random_bit_generator.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix64(seed) ^ mix64(stream + kGoldenGamma)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix64(key_ ^ counter_++); }

    double next_unit() { return unit_interval((*this)()); }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Unbiased draw in [0, bound) by rejection.
inline std::uint64_t uniform_below(CounterRng& rng, std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

// Fisher-Yates shuffle of 1..count, identical on every platform.
inline std::vector<std::uint64_t> shuffled_identity(std::uint64_t count, CounterRng& rng) {
    std::vector<std::uint64_t> out(count);
    for (std::uint64_t i = 0; i < count; ++i) out[i] = i + 1;
    for (std::uint64_t i = count; i > 1; --i) {
        std::uint64_t j = uniform_below(rng, i);
        std::swap(out[i - 1], out[j]);
    }
    return out;
}

}  // namespace hgcolor

#endif  // HGCOLOR_PRF_HPP
