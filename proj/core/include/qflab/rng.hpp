#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <vector>

namespace qf {

/// Deterministic 64-bit generator (splitmix64). Used everywhere a random
/// draw appears so that identical seeds give byte-identical outputs;
/// std:: distributions are avoided because their sequences are
/// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [a,b).
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Uniform point in the unit ball of dimension d (rejection from cube).
    std::vector<double> in_unit_ball(int d) {
        std::vector<double> v(static_cast<std::size_t>(d));
        for (;;) {
            double s = 0.0;
            for (auto& x : v) {
                x = uniform(-1.0, 1.0);
                s += x * x;
            }
            if (s <= 1.0) return v;
        }
    }

    /// Uniform direction on the unit sphere of dimension d.
    std::vector<double> unit_vector(int d) {
        for (;;) {
            auto v = in_unit_ball(d);
            double s = 0.0;
            for (double x : v) s += x * x;
            if (s > 1e-12) {
                double inv = 1.0 / std::sqrt(s);
                for (auto& x : v) x *= inv;
                return v;
            }
        }
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// FNV-1a over raw bytes; seeds the projection generator in mod2_linking
/// from its input so repeated calls are reproducible without a user seed.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ULL) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t hash_doubles(const std::vector<double>& v, std::uint64_t h = 0xcbf29ce484222325ULL) {
    return v.empty() ? h : fnv1a(v.data(), v.size() * sizeof(double), h);
}

} // namespace qf
