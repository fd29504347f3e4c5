#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "regulus/quat.hpp"

namespace regulus {

struct Box4 {
    Vec4 lo{-2.0, -2.0, -2.0, -2.0};
    Vec4 hi{2.0, 2.0, 2.0, 2.0};

    static Box4 symmetric(double r) { return {{-r, -r, -r, -r}, {r, r, r, r}}; }
};

// Halton low-discrepancy sequence in [0,1)^4, bases 2/3/5/7. Fully
// deterministic; the seed offsets the start index so different seeds give
// different (still well-spread) point sets.
class Halton4 {
public:
    explicit Halton4(std::uint64_t seed) : index_(1 + seed * 100003ULL) {}

    Vec4 next();

private:
    std::uint64_t index_;
};

struct SampleStats {
    std::size_t proposed = 0;
    std::size_t rejected_domain = 0;
    std::size_t rejected_axis_tube = 0;
};

// Draw `n` quasi-random points from `box`, rejecting points that fail
// `accept` (when given) or lie within the real-axis tube rho < min_rho.
// Returns fewer than `n` points only when the proposal budget runs out,
// which callers treat as an effectively empty region.
std::vector<Vec4> sample_box(const Box4& box, std::size_t n, std::uint64_t seed,
                             const std::function<bool(const Vec4&)>& accept, double min_rho,
                             SampleStats* stats = nullptr, std::size_t max_proposals = 0);

// Run fn(0..n-1) across hardware threads. Results must be written to
// per-index slots; merge order is the index order, so output is identical
// to the serial run. The first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_for_indexed(std::size_t n, Fn&& fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace regulus
