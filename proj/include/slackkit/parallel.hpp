#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace slackkit {

// Worker count: hardware concurrency capped by SLACKKIT_THREADS.
inline unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("SLACKKIT_THREADS")) {
        unsigned cap = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

// Index-space parallel map with deterministic output: f(i) must only
// write to slot i of whatever it fills.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
    unsigned workers = worker_count();
    if (workers <= 1 || n < 32) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mu;
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace slackkit
