#pragma once

#include <cstddef>
#include <functional>

namespace starring {

/// 0 means one worker per hardware thread.
unsigned resolve_jobs(unsigned requested);

/// Runs body(begin, end) over a static partition of [0, count). Each index is
/// visited by exactly one worker, so writes into per-index slots need no
/// synchronization and results do not depend on the schedule. The first
/// exception thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t begin, std::size_t end)>& body);

}  // namespace starring
