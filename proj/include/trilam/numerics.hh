////////////////////////////////////////////////////////////////////////////////
// numerics.hh
////////////////////////////////////////////////////////////////////////////////
// Small deterministic numeric helpers: golden-section maximization on a
// bracket, bisection root finding, and a seeded counter-based RNG whose
// stream is identical across platforms (std distributions are not).
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <cstdint>
#include <functional>

namespace trilam {

struct GoldenResult {
    double x;
    double f;
};

// Maximize f on [a, b] down to |interval| <= xtol. The function need not be
// smooth; unimodality on the bracket is enough.
GoldenResult golden_max(const std::function<double(double)> &f, double a, double b, double xtol);

// Root of f on [a, b]; requires f(a) and f(b) of opposite (or zero) sign.
double bisect_root(const std::function<double(double)> &f, double a, double b, double xtol);

// splitmix64 stream; uniform() is exactly (x >> 11) * 2^-53.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace trilam
