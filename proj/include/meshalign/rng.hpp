// rng.hpp — deterministic random generation. All sampling goes through this
// generator instead of <random> distributions, whose sequences differ across
// standard library implementations. Streams derived from (seed, index) make
// parallel sampling order-independent.
#pragma once

#include <cmath>
#include <cstdint>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace meshalign {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** seeded via splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    // Independent stream for a (seed, index) pair, e.g. one per RANSAC trial.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t sm = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
        return Rng(splitmix64(sm));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). Rejection keeps the mapping unbiased.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = n * ((~0ULL) / n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller; one value per call keeps streams simple.
    double normal() {
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    Eigen::Vector3d normal3() { return {normal(), normal(), normal()}; }

    Eigen::VectorXd normal_vector(int dim) {
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i) v[i] = normal();
        return v;
    }

    Eigen::Vector3d unit_vector3() {
        Eigen::Vector3d v;
        do {
            v = normal3();
        } while (v.norm() < 1e-12);
        return v.normalized();
    }

    Eigen::VectorXd unit_vector(int dim) {
        Eigen::VectorXd v;
        do {
            v = normal_vector(dim);
        } while (v.norm() < 1e-12);
        return v.normalized();
    }

    // Uniform rotation from a normalized quaternion of four normals.
    Eigen::Matrix3d rotation() {
        Eigen::Quaterniond q(normal(), normal(), normal(), normal());
        while (q.norm() < 1e-12) q = Eigen::Quaterniond(normal(), normal(), normal(), normal());
        q.normalize();
        return q.toRotationMatrix();
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

} // namespace meshalign
