#pragma once

#include <cstddef>
#include <functional>

namespace fockport::detail {

/// Runs fn(i) for i in [0, count) on `threads` workers (0 = hardware
/// concurrency). Each index is visited exactly once; the first exception is
/// rethrown on the calling thread after all workers stop.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace fockport::detail
