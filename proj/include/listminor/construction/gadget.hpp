#pragma once

#include <listminor/construction/sampling.hpp>
#include <listminor/graph.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace listminor {

struct BuildHOptions
{
    int max_retries = 32;
    BlockCheckOptions block{};
    /// Replaces eps^2/(4C^2) as the edge-probability exponent.  At desk scale
    /// the derived delta makes p so close to 1 that the degree property
    /// essentially never holds.
    std::optional<Rational> delta_override;
};

struct HBuilt
{
    /// A on [0, m), B on [m, m + n); both labelled.
    Graph h;
    SampleReport report;
};

struct HGaveUp {};

struct BuildHResult
{
    std::variant<HBuilt, HGaveUp> outcome;
    /// One report per attempt, in order; the last is the accepted sample
    /// when built.
    std::vector<SampleReport> attempts;

    auto built() const -> bool { return std::holds_alternative<HBuilt>(outcome); }
    auto graph() const -> const Graph & { return std::get<HBuilt>(outcome).h; }
};

/// Complement of G'[A u B], where A is the first m vertices of the sampled
/// side A' and B = B'.
inline auto assemble_h(const Graph & sampled, std::int64_t m) -> Graph
{
    const auto a_prime = sampled.vertices_labelled(Label::a).members();
    if (m > static_cast<std::int64_t>(a_prime.size()))
        throw std::invalid_argument("m exceeds the sampled A side");
    std::vector<Vertex> keep(a_prime.begin(), a_prime.begin() + static_cast<std::ptrdiff_t>(m));
    for (Vertex b : sampled.vertices_labelled(Label::b).members())
        keep.push_back(b);
    return complement(induced_subgraph(sampled, VertexSet(std::move(keep))).graph);
}

inline auto build_h(std::int64_t m, std::int64_t n, const Lemma3Params & params, std::uint64_t seed, const BuildHOptions & opts = {}) -> BuildHResult
{
    if (n < 2)
        throw std::invalid_argument("n must be at least 2");
    if (m < n || m > floor_of(params.c_const * Rational(n)))
        throw std::invalid_argument("need n <= m <= floor(C n), got m=" + std::to_string(m) + " n=" + std::to_string(n)
                + " floor(C n)=" + std::to_string(floor_of(params.c_const * Rational(n))));
    const Rational delta = opts.delta_override.value_or(params.delta);
    if (delta <= 0 || delta >= 1)
        throw std::invalid_argument("delta must lie in (0, 1)");

    BuildHResult result;
    result.outcome = HGaveUp{};
    for (int attempt = 0 ; attempt < std::max(1, opts.max_retries) ; ++attempt) {
        auto [sampled, report] = sample_and_check(n, params, delta, derive_seed(seed, static_cast<std::uint64_t>(attempt)), opts.block);
        result.attempts.push_back(report);
        if (report.degree.pass && report.blocks.status != BlockStatus::falsified) {
            result.outcome = HBuilt{ assemble_h(sampled, m), report };
            return result;
        }
    }
    return result;
}

}
