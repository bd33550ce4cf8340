#pragma once

#include <array>
#include <cstdint>

#include "epr/constraints.hpp"
#include "epr/distribution.hpp"
#include "epr/rng.hpp"
#include "epr/scenario.hpp"

namespace epr {

enum class SamplerMethod { rejection_atomic, metropolis_batch };

struct SamplerConfig {
    /// Number of accepted samples to collect (N).
    std::uint64_t target_accepted = 50000;
    std::uint64_t seed = 1;
    SamplerMethod method = SamplerMethod::rejection_atomic;
    /// Proposals generated per chain batch (metropolis only).
    std::uint64_t batch_size = 1000;
    /// Workers > 1 split the target across independent sub-streams
    /// seeded by stream_seed(seed, k) and merge the tallies. workers = 1
    /// is the reproducibility reference.
    int workers = 1;
    /// Chain steps discarded before tallying (metropolis only).
    std::uint64_t burn_in = 0;
    /// Abort once proposed > cap * max(accepted, 1). 0 disables.
    std::uint64_t max_proposed_factor = 1000000;
};

/// Raw accepted-sample counts per vertex plus the accumulated counts of
/// every hyperedge containing each accepted vertex.
struct Tally {
    std::array<std::uint64_t, 16> vertex_counts{};
    std::array<std::uint64_t, 12> edge_counts{};
    std::uint64_t accepted = 0;
    std::uint64_t proposed = 0;
};

/// Rejection sampler. Each proposal draws a, b, x, y ~ Bernoulli(0.5)
/// and u ~ Uniform[0,1), in that order, and accepts iff
/// u < c(a, b | x, y); an accepted vertex increments its count and the
/// counts of all three hyperedges containing it. Runs until exactly
/// cfg.target_accepted samples are accepted.
///
/// Throws std::invalid_argument if the scenario is not the 16-vertex,
/// 12-edge composite, and std::runtime_error if acceptance is
/// impossible (all table entries zero) or the proposal cap trips.
Tally rejection_sample_run(const ConstraintTable& c, const SamplerConfig& cfg,
                           const Scenario& scenario);

/// Single-stream rejection core that continues an existing rng stream;
/// used for worker shards and resumable runs. Same contract as
/// rejection_sample_run for the given stream.
Tally rejection_sample_chunk(const ConstraintTable& c, std::uint64_t target_accepted,
                             SplitMix64& rng, const Scenario& scenario,
                             std::uint64_t max_proposed_factor = 1000000);

/// Metropolis sampler over the five variables (A, B, X, Y, C). The
/// chain starts from a fresh draw of all five, and each step resamples
/// one uniformly chosen variable (bit flip for A/B/X/Y, uniform redraw
/// for C); the symmetric proposal over the product target is always
/// accepted. Proposals are generated in batches of cfg.batch_size and
/// filtered by the same test c_state < c(a, b | x, y); tallying stops
/// once exactly cfg.target_accepted samples are accepted, discarding
/// the remainder of the final batch. Errors as rejection_sample_run,
/// plus the proposal cap reports non-convergence.
Tally metropolis_batch_run(const ConstraintTable& c, const SamplerConfig& cfg,
                           const Scenario& scenario);

/// Run cfg.method.
Tally sample_run(const ConstraintTable& c, const SamplerConfig& cfg,
                 const Scenario& scenario);

/// Componentwise sum; associative and commutative. Both tallies must
/// come from the same scenario.
Tally merge_tallies(const Tally& t1, const Tally& t2);

/// Hyperedge normalization: p[v] = 3 * vertex_counts[v] / sum of the
/// counts of the three hyperedges containing v. Requires every edge
/// count positive; throws std::domain_error naming the starved edge
/// otherwise. Counts stay integral until this final division.
GlobalDistribution normalize(const Tally& t, const Scenario& scenario);

} // namespace epr
