#include "hazelab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hazelab {

int worker_count() {
    int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("HAZELAB_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0) {
            n = std::min(n, static_cast<int>(cap));
        }
    }
    return n;
}

void parallel_for(int n, const std::function<void(int)>& body) {
    if (n <= 0) {
        return;
    }
    const int workers = std::min(worker_count(), n);
    // Small jobs are not worth a thread start.
    if (workers <= 1 || n < 64) {
        for (int i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * chunk;
        const int end = std::min(n, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&body, begin, end] {
            for (int i = begin; i < end; ++i) {
                body(i);
            }
        });
    }
}

}  // namespace hazelab
