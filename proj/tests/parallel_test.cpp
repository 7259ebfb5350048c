#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "pairlight/parallel.hpp"

namespace {

using namespace pairlight;

class WorkerGuard {
public:
    WorkerGuard() : saved_(worker_count()) {}
    ~WorkerGuard() { set_worker_count(saved_); }

private:
    unsigned saved_;
};

double awkward_term(std::size_t i) { return std::sin(0.37 * static_cast<double>(i)) * 1e-3 + 1.0 / (1.0 + i); }

TEST(ChunkedSum, EmptyRangeReturnsZero) {
    EXPECT_EQ(chunked_sum(0, awkward_term), 0.0);
}

TEST(ChunkedSum, MatchesSerialSumClosely) {
    const std::size_t count = 3 * kReductionChunk + 17;
    double serial = 0.0;
    for (std::size_t i = 0; i < count; ++i) serial += awkward_term(i);
    EXPECT_NEAR(chunked_sum(count, awkward_term), serial, 1e-12);
}

TEST(ChunkedSum, BitIdenticalForAnyWorkerCount) {
    WorkerGuard guard;
    const std::size_t count = 11 * kReductionChunk + 5;
    set_worker_count(1);
    const double one = chunked_sum(count, awkward_term);
    for (unsigned workers : {2u, 3u, 4u, 8u}) {
        set_worker_count(workers);
        EXPECT_EQ(chunked_sum(count, awkward_term), one) << workers << " workers";
    }
}

TEST(ChunkedSum, ExceptionsPropagate) {
    WorkerGuard guard;
    for (unsigned workers : {1u, 4u}) {
        set_worker_count(workers);
        EXPECT_THROW(chunked_sum(5 * kReductionChunk,
                                 [](std::size_t i) -> double {
                                     if (i == 3 * kReductionChunk + 1) throw std::runtime_error("boom");
                                     return 1.0;
                                 }),
                     std::runtime_error);
    }
}

TEST(ChunkedReduce, CombinesInChunkOrder) {
    WorkerGuard guard;
    set_worker_count(4);
    const std::size_t count = 5 * kReductionChunk;
    const auto order = chunked_reduce(
        count, std::vector<std::size_t>{},
        [](std::size_t begin, std::size_t, std::vector<std::size_t>& acc) { acc.push_back(begin / kReductionChunk); },
        [](std::vector<std::size_t>& lhs, const std::vector<std::size_t>& rhs) {
            lhs.insert(lhs.end(), rhs.begin(), rhs.end());
        });
    EXPECT_EQ(order, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

}  // namespace
