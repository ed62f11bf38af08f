#include <listminor/parallel.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace listminor;

TEST(Seeds, DerivedStreamsDiffer)
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t m = 0 ; m < 20 ; ++m)
        for (std::uint64_t i = 0 ; i < 200 ; ++i)
            seen.insert(derive_seed(m, i));
    EXPECT_EQ(seen.size(), 4000u);
    EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Random, UniformRanges)
{
    std::mt19937_64 rng(1);
    double sum = 0;
    for (int i = 0 ; i < 100000 ; ++i) {
        double u = uniform01(rng);
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 100000, 0.5, 0.01);
    std::vector<int> counts(7, 0);
    for (int i = 0 ; i < 70000 ; ++i)
        ++counts[uniform_below(rng, 7)];
    for (int c : counts)
        EXPECT_NEAR(c, 10000, 500);
}

TEST(OrderedSearch, LowestSuccessWinsInDeterministicMode)
{
    for (unsigned threads : { 1u, 2u, 8u }) {
        auto out = ordered_search(100, unlimited, ParallelOptions{ threads, true }, [](std::size_t i, std::uint64_t, const CancelToken &) {
            return TaskOutcome{ (i == 37 || i == 80) ? TaskStatus::success : TaskStatus::exhausted_search, 5 };
        });
        ASSERT_TRUE(out.winner.has_value());
        EXPECT_EQ(*out.winner, 37u);
        EXPECT_EQ(out.nodes, 38u * 5);
        EXPECT_FALSE(out.out_of_budget);
    }
}

TEST(OrderedSearch, BudgetReplay)
{
    for (unsigned threads : { 1u, 4u }) {
        auto out = ordered_search(10, 22, ParallelOptions{ threads, true }, [](std::size_t, std::uint64_t cap, const CancelToken &) {
            if (cap < 5)
                return TaskOutcome{ TaskStatus::out_of_budget, cap };
            return TaskOutcome{ TaskStatus::exhausted_search, 5 };
        });
        EXPECT_TRUE(out.out_of_budget);
        EXPECT_FALSE(out.winner.has_value());
        EXPECT_EQ(out.nodes, 22u);
    }
}

TEST(OrderedSearch, ExhaustedWithoutWinner)
{
    auto out = ordered_search(5, unlimited, ParallelOptions{ 3, false }, [](std::size_t, std::uint64_t, const CancelToken &) {
        return TaskOutcome{ TaskStatus::exhausted_search, 1 };
    });
    EXPECT_FALSE(out.winner.has_value());
    EXPECT_EQ(out.nodes, 5u);
}

TEST(ParallelFor, VisitsEveryIndexOnce)
{
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 6, [&](std::size_t i) { ++hits[i]; });
    for (int h : hits)
        EXPECT_EQ(h, 1);
}
