#ifndef GPS_PARALLEL_HPP
#define GPS_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace gps {

/// Worker cap: min(hardware_concurrency, GPS_THREADS) with GPS_THREADS read
/// once per process; at most one worker per work item.
unsigned worker_count(std::size_t items);

/// Static-chunked parallel loop over [0, n). `body(chunk, begin, end)` runs
/// on one worker per chunk; chunk ids are dense so callers can merge
/// per-chunk results in order and keep output deterministic. Falls back to
/// inline execution for small n.
void parallel_chunks(std::size_t n,
                     const std::function<void(unsigned chunk, std::size_t begin,
                                              std::size_t end)>& body);

}  // namespace gps

#endif
