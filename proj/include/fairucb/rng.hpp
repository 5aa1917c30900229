#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace fairucb {

// Seedable generator every sampling site in the library goes through, so
// that a (config, seed) pair pins the whole run. The engine is
// std::mt19937_64, whose output stream is fixed by the standard; the
// distributions are hand-rolled because the std:: ones are
// implementation-defined and would break byte-level reproducibility
// across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0,1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n), n > 0. Fixed-point multiply keeps it
    // branch-free and deterministic.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Box-Muller; draws exactly two uniforms per call.
    double normal(double mean = 0.0, double stddev = 1.0);

    // Draws an index according to non-negative weights.
    std::size_t weighted_index(const std::vector<double>& weights);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Independent stream for a named concern, derived from the original
    // seed. Draw order in one concern cannot disturb another.
    Rng child(std::string_view purpose) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

inline double Rng::normal(double mean, double stddev) {
    // Guard the log against a zero uniform.
    double u1 = 0.0;
    do {
        u1 = uniform01();
    } while (u1 <= 0.0);
    double u2 = uniform01();
    double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(6.283185307179586476925286766559 * u2);
}

inline std::size_t Rng::weighted_index(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double pick = uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        acc += weights[i];
        if (pick < acc) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
}

inline Rng Rng::child(std::string_view purpose) const {
    // FNV-1a over the purpose, then a splitmix64 finalizer to spread bits.
    std::uint64_t h = 14695981039346656037ull;
    for (char c : purpose) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ull + h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return Rng(z ^ (z >> 31));
}

}  // namespace fairucb
