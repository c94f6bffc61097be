// common.hpp — error types and the deterministic parallel-for used across meshalign.
#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace meshalign {

enum class ErrorCode {
    InvalidInput,       // malformed files, contract violations, bad configuration
    DegenerateGeometry, // singular systems, collinear samples, parallel rays
    PartialFailure      // some items of a batch failed, see per-item records
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail_input(const std::string& what) {
    throw Error(ErrorCode::InvalidInput, what);
}

[[noreturn]] inline void fail_degenerate(const std::string& what) {
    throw Error(ErrorCode::DegenerateGeometry, what);
}

// Global worker count for parallel sections. 0 means hardware concurrency.
inline int& thread_count() {
    static int n = 0;
    return n;
}

inline int effective_threads() {
    int n = thread_count();
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    return n < 1 ? 1 : n;
}

// Runs fn(i) for i in [0, n). Work is split into contiguous blocks; every
// result must be written to a slot indexed by i so the outcome is identical
// for any worker count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const int workers = effective_threads();
    if (workers == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t block = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (int w = 0; w < workers; ++w) {
        const std::size_t begin = static_cast<std::size_t>(w) * block;
        if (begin >= n) break;
        const std::size_t end = std::min(n, begin + block);
        pool.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace meshalign
