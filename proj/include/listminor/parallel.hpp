#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <thread>
#include <vector>

namespace listminor {

inline constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

struct ParallelOptions
{
    unsigned threads = 1;
    /// Forces the outcome (and any witness) to be the one a sequential run
    /// over the same task list would produce.
    bool deterministic = true;
};

/// splitmix64 finaliser.  Child streams are derived as mix(master, index), so
/// a stream depends only on its index and never on which thread runs it.
inline auto derive_seed(std::uint64_t master, std::uint64_t index) -> std::uint64_t
{
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits; independent of the
/// standard library's distribution implementations.
inline auto uniform01(std::mt19937_64 & rng) -> double
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline auto uniform_below(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t
{
    // Rejection sampling keeps the result unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % bound;
}

/// Runs body(i) for every i in [0, count) on up to `threads` workers.
/// Indices are claimed dynamically; body must write only to slot i.
template <typename Body>
auto parallel_for(std::size_t count, unsigned threads, Body && body) -> void
{
    threads = std::max(1u, threads);
    if (threads == 1 || count <= 1) {
        for (std::size_t i = 0 ; i < count ; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{ 0 };
    std::vector<std::jthread> pool;
    for (unsigned t = 0 ; t < std::min<std::size_t>(threads, count) ; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1) ; i < count ; i = next.fetch_add(1))
                body(i);
        });
}

enum class TaskStatus { exhausted_search, success, out_of_budget, cancelled };

struct TaskOutcome
{
    TaskStatus status = TaskStatus::exhausted_search;
    std::uint64_t nodes = 0;
};

struct OrderedSearchOutcome
{
    /// Index of the winning task, if any task succeeded.
    std::optional<std::size_t> winner;
    bool out_of_budget = false;
    std::uint64_t nodes = 0;
};

/// Polled by long-running tasks; true once the task's result can no longer
/// matter.
class CancelToken
{
public:
    CancelToken(const std::atomic<bool> & stop, const std::atomic<std::size_t> & best, std::size_t index, bool deterministic)
        : _stop(&stop), _best(&best), _index(index), _deterministic(deterministic)
    {
    }

    auto cancelled() const -> bool
    {
        return _stop->load(std::memory_order_relaxed) || (_deterministic && _index > _best->load(std::memory_order_relaxed));
    }

private:
    const std::atomic<bool> * _stop;
    const std::atomic<std::size_t> * _best;
    std::size_t _index;
    bool _deterministic;
};

/// Runs task(i, node_cap, cancel) for i in [0, count).  A task either
/// exhausts its subtree, succeeds, or stops at node_cap.  The result is
/// replayed in task order: with deterministic set it matches a sequential
/// run exactly, including node accounting against the budget.
template <typename Task>
auto ordered_search(std::size_t count, std::uint64_t budget, const ParallelOptions & opts, Task && task) -> OrderedSearchOutcome
{
    std::atomic<bool> stop{ false };
    std::atomic<std::size_t> best_success{ count };
    OrderedSearchOutcome result;

    const unsigned threads = std::max(1u, opts.threads);
    if (threads == 1 || count <= 1) {
        for (std::size_t i = 0 ; i < count ; ++i) {
            std::uint64_t remaining = budget == unlimited ? unlimited : budget - result.nodes;
            auto out = task(i, remaining, CancelToken(stop, best_success, i, true));
            result.nodes += out.nodes;
            if (out.status == TaskStatus::out_of_budget || (budget != unlimited && result.nodes > budget)) {
                result.out_of_budget = true;
                result.nodes = budget;
                return result;
            }
            if (out.status == TaskStatus::success) {
                result.winner = i;
                return result;
            }
        }
        return result;
    }

    std::vector<TaskOutcome> outcomes(count, TaskOutcome{ TaskStatus::cancelled, 0 });
    std::atomic<std::size_t> next{ 0 };

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || stop.load())
                return;
            if (opts.deterministic && i > best_success.load())
                continue;
            auto out = task(i, budget, CancelToken(stop, best_success, i, opts.deterministic));
            outcomes[i] = out;
            if (out.status == TaskStatus::success) {
                std::size_t cur = best_success.load();
                while (i < cur && ! best_success.compare_exchange_weak(cur, i))
                    ;
                if (! opts.deterministic)
                    stop.store(true);
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0 ; t < std::min<std::size_t>(threads, count) ; ++t)
            pool.emplace_back(worker);
    }

    if (! opts.deterministic) {
        for (const auto & o : outcomes) {
            result.nodes += o.nodes;
            if (o.status == TaskStatus::out_of_budget)
                result.out_of_budget = true;
        }
        if (best_success.load() < count) {
            result.winner = best_success.load();
            result.out_of_budget = false;
        }
        else if (budget != unlimited && result.nodes > budget)
            result.out_of_budget = true;
        return result;
    }

    // Deterministic replay in task order.
    for (std::size_t i = 0 ; i < count ; ++i) {
        const auto & o = outcomes[i];
        result.nodes += o.nodes;
        if (o.status == TaskStatus::out_of_budget || (budget != unlimited && result.nodes > budget)) {
            result.out_of_budget = true;
            result.nodes = budget;
            return result;
        }
        if (o.status == TaskStatus::success) {
            result.winner = i;
            return result;
        }
    }
    return result;
}

}
