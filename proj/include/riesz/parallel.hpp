#pragma once

#include <cstddef>
#include <functional>

namespace riesz {

/// Worker count used by parallel loops; 0 restores the hardware default.
void set_thread_count(unsigned count);
unsigned thread_count();

/// Calls body(i) for i in [0, count), distributing indices over the
/// worker threads. Each index is processed exactly once; callers write
/// results into per-index slots and reduce them in index order, which
/// keeps sums independent of the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace riesz
