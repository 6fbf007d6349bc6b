#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace yardstack {

// Deterministic random stream. All draws go through our own bounded-int and
// real01 reductions so that identical seeds give identical sequences on every
// platform, independent of the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi], inclusive. Unbiased (Lemire reduction).
    int uniform_int(int lo, int hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * range;
        auto low = static_cast<std::uint64_t>(m);
        if (low < range) {
            const std::uint64_t threshold = (0 - range) % range;
            while (low < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * range;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return lo + static_cast<int>(m >> 64);
    }

    bool bernoulli(double p) { return real01() < p; }

    /// Fisher-Yates shuffle driven by this stream.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            std::swap(v[static_cast<std::size_t>(i)],
                      v[static_cast<std::size_t>(uniform_int(0, i))]);
        }
    }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform_int(0, static_cast<int>(v.size()) - 1))];
    }

    /// Independent stream derived from the original seed and a tag; does not
    /// consume state from this stream.
    Rng split(std::uint64_t tag) const {
        return Rng(splitmix64(seed_ ^ (0x9E3779B97F4A7C15ULL * (tag + 1))));
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace yardstack
