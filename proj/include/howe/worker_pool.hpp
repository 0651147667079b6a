#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <mutex>
#include <thread>
#include <vector>

namespace howe {

// Deterministic parallel map: items are claimed from a shared queue by up to
// `jobs` workers and results are merged in item order, so the output is
// independent of scheduling and of the worker count.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, unsigned jobs, Fn&& fn) {
    std::vector<R> out;
    if (n == 0) return out;
    if (jobs <= 1 || n == 1) {
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
        return out;
    }
    std::vector<std::optional<R>> slots(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    unsigned nw = std::min<std::size_t>(jobs, n);
    std::vector<std::thread> workers;
    workers.reserve(nw);
    for (unsigned w = 0; w < nw; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    slots[i].emplace(fn(i));
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

unsigned default_jobs();

} // namespace howe
