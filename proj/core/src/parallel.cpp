#include "propcalc/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace propcalc {

int thread_count() {
    const char* env = std::getenv("PROPCALC_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n >= 1 ? n : 1;
}

void parallel_chunks(long long n, const std::function<void(long long, long long, int)>& fn) {
    if (n <= 0) return;
    int workers = std::min<long long>(thread_count(), n);
    if (workers <= 1) {
        fn(0, n, 0);
        return;
    }
    long long per = (n + workers - 1) / workers;
    std::vector<std::thread> threads;
    for (int c = 0; c < workers; ++c) {
        long long b = c * per;
        long long e = std::min(n, b + per);
        if (b >= e) break;
        threads.emplace_back([&fn, b, e, c] { fn(b, e, c); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace propcalc
