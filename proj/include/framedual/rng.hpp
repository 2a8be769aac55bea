#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>

#include "framedual/numeric.hpp"

namespace framedual::rng {

// splitmix64 step; used to fold several integers into one seed so that
// (L, lattice, window-index) streams never collide.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (std::uint64_t p : parts) h = splitmix64(h ^ p);
    return h;
}

// Deterministic random stream. mt19937_64 output is fixed by the standard;
// doubles and normals are derived from raw bits (not std distributions, whose
// output is implementation-defined), so identical seeds give identical
// vectors on any platform.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; second value of each pair is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0,1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Complex standard normal: E|z|^2 = 1.
    cd complex_normal() {
        const double re = normal();
        const double im = normal();
        return cd(re, im) / std::numbers::sqrt2;
    }

    ComplexVector complex_normal_vector(Index n) {
        ComplexVector v(n);
        for (Index i = 0; i < n; ++i) v(i) = complex_normal();
        return v;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace framedual::rng
