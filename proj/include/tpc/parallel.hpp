#ifndef TPC_PARALLEL_HPP
#define TPC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace tpc {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream for (master, a, b); the same key always yields the same
// generator regardless of which thread asks for it.
inline Rng streamRng(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) noexcept
{
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ (a + 0x632be59bd9b4e019ULL));
    s = splitmix64(s ^ (b + 0x8cb92ba72f3d8dd7ULL));
    return Rng{s};
}

inline unsigned defaultWorkers() noexcept
{
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(i) for i in [0, count) on up to `workers` threads. Results must be
// written to per-index slots; the first exception is rethrown after joining.
template <typename Fn>
void parallelFor(std::size_t count, unsigned workers, Fn&& fn)
{
    const std::size_t threads = std::min<std::size_t>(std::max(1u, workers), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failureLock;
    auto body = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failureLock);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (std::size_t t = 1; t < threads; ++t)
        pool.emplace_back(body);
    body();
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace tpc

#endif // TPC_PARALLEL_HPP
