#pragma once

// Minimal deterministic work distribution. Callers write per-item or
// per-worker results into preallocated slots and combine them in a fixed
// order afterwards, so outcomes never depend on the worker count.

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace lambda3 {

/// 0 -> LAMBDA3_THREADS env var if set, else hardware concurrency (min 1).
unsigned resolve_threads(unsigned requested = 0);

/// Contiguous block per worker: fn(begin, end, worker_index).
void parallel_blocks(std::uint64_t items, unsigned threads,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn);

/// Dynamic scheduling for uneven items: fn(item_index).
void parallel_items(std::uint64_t items, unsigned threads,
                    const std::function<void(std::uint64_t)>& fn);

}  // namespace lambda3
