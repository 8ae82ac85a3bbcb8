#include "lambda3/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>

namespace lambda3 {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LAMBDA3_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace {

// Runs workers and rethrows the first exception (by worker index).
void run_workers(unsigned count, const std::function<void(unsigned)>& body) {
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (unsigned w = 0; w < count; ++w) {
        pool.emplace_back([&, w] {
            try {
                body(w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace

void parallel_blocks(std::uint64_t items, unsigned threads,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn) {
    threads = static_cast<unsigned>(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads),
                                                           items ? items : 1)));
    if (threads == 1) {
        fn(0, items, 0);
        return;
    }
    const std::uint64_t chunk = (items + threads - 1) / threads;
    run_workers(threads, [&](unsigned w) {
        const std::uint64_t begin = std::min<std::uint64_t>(items, w * chunk);
        const std::uint64_t end = std::min<std::uint64_t>(items, begin + chunk);
        if (begin < end) fn(begin, end, w);
    });
}

void parallel_items(std::uint64_t items, unsigned threads,
                    const std::function<void(std::uint64_t)>& fn) {
    threads = static_cast<unsigned>(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads),
                                                           items ? items : 1)));
    if (threads == 1) {
        for (std::uint64_t i = 0; i < items; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    run_workers(threads, [&](unsigned) {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= items) break;
            fn(i);
        }
    });
}

}  // namespace lambda3
