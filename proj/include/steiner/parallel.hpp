#pragma once

#include <cstdint>
#include <functional>

namespace steiner {

// 0 means hardware concurrency (at least 1).
unsigned resolve_thread_count(unsigned requested);

// Runs fn(slot) for every slot in [0, slots), distributing slots across up
// to `threads` workers. Callers get determinism by writing results into
// per-slot storage and combining in slot order afterwards. The first
// exception thrown by any worker is rethrown.
void for_each_slot(std::uint64_t slots, unsigned threads,
                   const std::function<void(std::uint64_t)>& fn);

}  // namespace steiner
