#ifndef PG3XRAY_RNG_HPP
#define PG3XRAY_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace pg3xray {

/// Deterministic random source: mt19937_64 with rejection-sampled bounded
/// draws. std::uniform_int_distribution is implementation-defined, so it is
/// avoided; sequences from this class are identical across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    /// Uniform draw in [0, n).
    uint64_t bounded(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[bounded(i)]);
    }

    /// Sorted uniform k-subset of {0, ..., n-1} by partial shuffle.
    std::vector<int> subset(int n, int k);

    static constexpr const char* name() { return "mt19937_64"; }

private:
    std::mt19937_64 gen_;
};

} // namespace pg3xray

#endif
