#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace topomirror {

// Counter-based splittable generator (splitmix64). Each (seed, stream)
// pair yields an independent deterministic sequence, so ensemble
// realizations can be drawn concurrently in any order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 a(seed);
        SplitMix64 b(stream + 0x9E3779B97F4A7C15ull);
        return SplitMix64(a.next() ^ b.next());
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1)
    double next_symmetric() { return 2.0 * next_uniform() - 1.0; }

private:
    std::uint64_t state_;
};

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    for (int i = 0; i < n; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return v;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must be
// written to pre-sized storage indexed by i so reduction order is fixed.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int nt = static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(jobs)));
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace topomirror
