#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace prelie {

/// Splits [0, count) into `workers` contiguous chunks, runs fn(begin, end) on
/// each (concurrently when workers > 1) and returns the results in chunk
/// order, so merged output never depends on scheduling.
template <class Fn>
auto map_chunks(std::uint64_t count, unsigned workers, Fn fn) {
    using Result = decltype(fn(std::uint64_t{}, std::uint64_t{}));
    workers = std::max(1u, workers);
    if (count < workers) {
        workers = static_cast<unsigned>(std::max<std::uint64_t>(1, count));
    }
    std::vector<Result> results(workers);
    const std::uint64_t step = count / workers;
    const std::uint64_t extra = count % workers;
    auto bounds = [&](unsigned w) {
        std::uint64_t begin = w * step + std::min<std::uint64_t>(w, extra);
        std::uint64_t end = begin + step + (w < extra ? 1 : 0);
        return std::pair{begin, end};
    };
    if (workers == 1) {
        results[0] = fn(std::uint64_t{0}, count);
        return results;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    auto [b, e] = bounds(w);
                    results[w] = fn(b, e);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

} // namespace prelie
