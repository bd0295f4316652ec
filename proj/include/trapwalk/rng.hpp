#pragma once

// Reproducible random streams.
//
// Every consumer of randomness takes an explicit stream; there is no global
// RNG. Streams are derived from a master seed and a path of integer ids
// (replica index, site, particle index, ...) by a SplitMix64 chain, so adding
// workers or reordering loops never perturbs other streams.

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace trapwalk {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Hash-combines a master seed with a path of stream ids.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    for (std::uint64_t id : path) {
        s = h ^ (id + 0x9e3779b97f4a7c15ULL);
        h = splitmix64(s);
    }
    return h;
}

// xoshiro256++ (Blackman & Vigna), seeded via SplitMix64.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    Rng(std::uint64_t master, std::initializer_list<std::uint64_t> path)
        : Rng(derive_seed(master, path)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on (0,1]; never returns 0 so -log is safe.
    double u01() {
        return (static_cast<double>((*this)() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Uniform on [a,b).
    double uniform(double a, double b) {
        return a + (b - a) * (static_cast<double>((*this)() >> 11) * 0x1.0p-53);
    }

    double exponential(double mean = 1.0) { return -mean * std::log(u01()); }

    bool bernoulli(double p) { return u01() <= p; }

    // Pareto with tail P(Y > t) = (t/floor)^(-kappa) for t >= floor.
    double pareto(double floor, double kappa) {
        return floor * std::pow(u01(), -1.0 / kappa);
    }

    double normal() {
        // Marsaglia polar method; cache the spare deviate.
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = uniform(-1.0, 1.0);
            v = uniform(-1.0, 1.0);
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    // Poisson; Knuth multiplication for small means, PTRS rejection
    // (Hoermann 1993) for large ones.
    long long poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean < 30.0) {
            double limit = std::exp(-mean);
            long long k = 0;
            double prod = u01();
            while (prod > limit) {
                ++k;
                prod *= u01();
            }
            return k;
        }
        return poisson_ptrs(mean);
    }

    // Binomial(n, p); inversion for small n*min(p,1-p), BTRS otherwise.
    long long binomial(long long n, double p) {
        if (n <= 0 || p <= 0.0) return 0;
        if (p >= 1.0) return n;
        bool flipped = p > 0.5;
        double q = flipped ? 1.0 - p : p;
        long long k;
        if (static_cast<double>(n) * q < 30.0) {
            k = binomial_inversion(n, q);
        } else {
            k = binomial_btrs(n, q);
        }
        return flipped ? n - k : k;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    long long poisson_ptrs(double mean) {
        const double b = 0.931 + 2.53 * std::sqrt(mean);
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double v_r = 0.9277 - 3.6224 / (b - 2.0);
        for (;;) {
            double u = u01() - 0.5;
            double v = u01();
            double us = 0.5 - std::abs(u);
            double kd = std::floor((2.0 * a / us + b) * u + mean + 0.43);
            if (us >= 0.07 && v <= v_r) return static_cast<long long>(kd);
            if (kd < 0.0 || (us < 0.013 && v > us)) continue;
            double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
            double rhs = -mean + kd * std::log(mean) - std::lgamma(kd + 1.0);
            if (lhs <= rhs) return static_cast<long long>(kd);
        }
    }

    long long binomial_inversion(long long n, double p) {
        double q = 1.0 - p;
        double s = p / q;
        double a = static_cast<double>(n + 1) * s;
        double r = std::pow(q, static_cast<double>(n));
        double u = u01();
        long long x = 0;
        while (u > r) {
            u -= r;
            ++x;
            if (x > n) return n;  // numerical tail guard
            r *= (a / static_cast<double>(x) - s);
        }
        return x;
    }

    // BTRS transformed rejection (Hoermann 1993), valid for n*p >= 10.
    long long binomial_btrs(long long n, double p) {
        const double nd = static_cast<double>(n);
        const double np = nd * p;
        const double q = 1.0 - p;
        const double spq = std::sqrt(np * q);
        const double b = 1.15 + 2.53 * spq;
        const double a = -0.0873 + 0.0248 * b + 0.01 * p;
        const double c = np + 0.5;
        const double alpha = (2.83 + 5.1 / b) * spq;
        const double v_r = 0.92 - 4.2 / b;
        const double urvr = 0.86 * v_r;
        const double lpq = std::log(p / q);
        const long long m = static_cast<long long>(std::floor((nd + 1.0) * p));
        const double h = std::lgamma(m + 1.0) + std::lgamma(nd - m + 1.0);
        for (;;) {
            double v = u01();
            double u;
            if (v <= urvr) {
                u = v / v_r - 0.43;
                return static_cast<long long>(std::floor((2.0 * a / (0.5 - std::abs(u)) + b) * u + c));
            }
            if (v >= v_r) {
                u = u01() - 0.5;
            } else {
                u = v / v_r - 0.93;
                u = (u < 0 ? -0.5 : 0.5) - u;
                v = u01() * v_r;
            }
            double us = 0.5 - std::abs(u);
            double kd = std::floor((2.0 * a / us + b) * u + c);
            if (kd < 0.0 || kd > nd) continue;
            long long k = static_cast<long long>(kd);
            v = v * alpha / (a / (us * us) + b);
            if (std::log(v) <= h - std::lgamma(k + 1.0) - std::lgamma(nd - k + 1.0) +
                                    (k - m) * lpq) {
                return k;
            }
        }
    }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace trapwalk
