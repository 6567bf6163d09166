#pragma once

#include <cstdint>
#include <random>

#include "cvx/linalg.hpp"

namespace cvx {

enum class SampleMethod { rejection, hit_and_run };

/// Everything an estimator needs to be reproducible. Identical config
/// implies an identical sample stream, independent of thread count.
struct SampleConfig {
    std::uint64_t seed = 0;
    std::size_t n_samples = 100000;
    std::size_t burn_in = 0;  // 0 = use the 10*n^2 default
    SampleMethod method = SampleMethod::rejection;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seeded engine for substream `chunk` of stream `seed`. Chunk-indexed
/// seeding is what makes parallel fan-out reproduce the serial stream.
inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t chunk = 0) {
    std::uint64_t s = seed ^ (0x1234567899abcdefULL + chunk * 0x2545f4914f6cdd1dULL);
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return std::mt19937_64(seq);
}

inline Vec random_gaussian(std::mt19937_64& eng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = g(eng);
    return v;
}

/// Uniform direction on S^{n-1}.
inline Vec random_direction(std::mt19937_64& eng, int n) {
    Vec v = random_gaussian(eng, n);
    double nrm = v.norm();
    while (nrm < 1e-12) {
        v = random_gaussian(eng, n);
        nrm = v.norm();
    }
    return v / nrm;
}

/// Uniform point in the unit ball.
inline Vec random_in_ball(std::mt19937_64& eng, int n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return random_direction(eng, n) * std::pow(u(eng), 1.0 / n);
}

/// Deterministic quasi-uniform grid of m directions on S^{n-1}: golden-angle
/// circle for n = 2, Kronecker lattice pushed through the normal quantile
/// for n >= 3 (Fibonacci-style; ordering fixed by index).
Mat sphere_grid(int n, int m);

}  // namespace cvx
