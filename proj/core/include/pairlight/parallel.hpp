#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace pairlight {

/// Number of worker threads used by k-space reductions. Zero means
/// "hardware concurrency". Changing it affects speed only: every reduction
/// splits its range into chunks of a fixed size and combines the partial
/// results in chunk order, so values are bit-identical for any worker count.
void set_worker_count(unsigned workers);
unsigned worker_count();

inline constexpr std::size_t kReductionChunk = 2048;

namespace detail {
// Runs task(c) for every c in [0, chunks), possibly on several threads.
void for_each_chunk(std::size_t chunks, const std::function<void(std::size_t)>& task);
}  // namespace detail

/// Deterministic map-reduce over [0, count).
///
/// `body(begin, end, acc)` accumulates indices [begin, end) into `acc`
/// sequentially. Partials of consecutive chunks are combined pairwise
/// (a balanced tree in chunk order) with `combine(lhs, rhs)` which must
/// fold rhs into lhs.
template <class T, class Body, class Combine>
T chunked_reduce(std::size_t count, T zero, Body&& body, Combine&& combine) {
    const std::size_t chunks = (count + kReductionChunk - 1) / kReductionChunk;
    if (chunks == 0) return zero;
    std::vector<T> partial(chunks, zero);
    detail::for_each_chunk(chunks, [&](std::size_t c) {
        const std::size_t begin = c * kReductionChunk;
        const std::size_t end = begin + kReductionChunk < count ? begin + kReductionChunk : count;
        body(begin, end, partial[c]);
    });
    for (std::size_t stride = 1; stride < chunks; stride *= 2) {
        for (std::size_t i = 0; i + stride < chunks; i += 2 * stride) {
            combine(partial[i], partial[i + stride]);
        }
    }
    return std::move(partial[0]);
}

/// Scalar convenience wrapper: sum of term(i) over [0, count).
template <class Term>
double chunked_sum(std::size_t count, Term&& term) {
    return chunked_reduce(
        count, 0.0,
        [&](std::size_t begin, std::size_t end, double& acc) {
            for (std::size_t i = begin; i < end; ++i) acc += term(i);
        },
        [](double& lhs, double rhs) { lhs += rhs; });
}

}  // namespace pairlight
