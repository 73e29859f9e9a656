#pragma once

#include <functional>

namespace propcalc {

// Worker count from PROPCALC_THREADS (default 1).
int thread_count();

// Splits [0, n) into per-thread chunks and runs fn(begin, end, chunk) on each.
// Chunk boundaries depend only on n and the thread count; callers that write
// per-chunk results and merge them in chunk order stay deterministic. With a
// single thread everything runs inline.
void parallel_chunks(long long n,
                     const std::function<void(long long, long long, int)>& fn);

}  // namespace propcalc
