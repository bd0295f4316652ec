#pragma once

// Shared error types and small utilities.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace trapwalk {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Environment distribution violates E[log rho] < 0.
struct AssumptionViolated : Error {
    using Error::Error;
};

// E[rho^kappa] = 1 has no root in the search interval.
struct NoRoot : Error {
    using Error::Error;
};

// A single rejection block exceeded the configured cap.
struct BlockOverflow : Error {
    using Error::Error;
};

// A series or quenched statistic did not converge inside the window.
struct BufferExhausted : Error {
    using Error::Error;
};

// A path operation ran off the edge of a finite trap window.
struct WindowExit : Error {
    using Error::Error;
};

// The trap set does not cover the support of the profile function.
struct SupportNotCovered : Error {
    using Error::Error;
};

struct DegenerateWindow : Error {
    using Error::Error;
};

struct InsufficientSamples : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

inline bool nearly_equal(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

inline bool rel_close(double a, double b, double rel_tol) {
    double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return true;
    return std::abs(a - b) <= rel_tol * scale;
}

// Runs fn(i) for i in [0, n) on `workers` threads. Work is dealt in
// contiguous chunks by a shared counter; fn must derive any randomness
// from i so results do not depend on the schedule.
inline void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    std::mutex err_mtx;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mtx);
                    if (!failed.exchange(true)) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(first_error);
}

}  // namespace trapwalk
