#ifndef GS_RNG_HPP
#define GS_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace gs {

// splitmix64 step (Steele/Lea/Flood). Used both as a seed mixer and as the
// seed-derivation scheme for independent sub-streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Derives the seed of sub-stream `stream` from a master seed. Chaining calls
// derives nested streams: derive_seed(derive_seed(master, a), b). Any cell of
// a seeded computation can be replayed in isolation from its derived seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(master, a), b);
}

// Deterministic random stream. mt19937_64 output is pinned by the standard,
// and the bound draw below avoids std::uniform_int_distribution, whose
// mapping is implementation-defined; together they make every draw
// bit-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    // Unbiased draw from [0, bound) via rejection of the wrap-around region.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    // Fisher-Yates of the first `take` positions; items[0..take) become a
    // uniform random sample without replacement of the whole vector.
    template <typename T>
    void partial_shuffle(std::vector<T>& items, std::size_t take) {
        const std::size_t n = items.size();
        for (std::size_t i = 0; i < take && i + 1 < n; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(items[i], items[j]);
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        partial_shuffle(items, items.size());
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace gs

#endif
