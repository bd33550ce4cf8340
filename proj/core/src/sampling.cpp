#include "epr/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace epr {

namespace {

// Vertex -> the 3 hyperedges containing it, in edge order.
using EdgeMap = std::array<std::array<int, 3>, 16>;

EdgeMap build_edge_map(const Scenario& scenario) {
    if (scenario.vertex_count != 16 || scenario.edges.size() != 12)
        throw std::invalid_argument(
            "sampler: scenario must be the 16-vertex, 12-edge composite");
    EdgeMap map{};
    std::array<int, 16> found{};
    for (std::size_t e = 0; e < scenario.edges.size(); ++e) {
        for (int v : scenario.edges[e].vertices) {
            if (v < 0 || v >= 16 || found[static_cast<std::size_t>(v)] >= 3)
                throw std::invalid_argument(
                    "sampler: scenario is not a valid composite (vertex " +
                    std::to_string(v) + ")");
            map[static_cast<std::size_t>(v)][static_cast<std::size_t>(
                found[static_cast<std::size_t>(v)]++)] = static_cast<int>(e);
        }
    }
    for (int v = 0; v < 16; ++v)
        if (found[static_cast<std::size_t>(v)] != 3)
            throw std::invalid_argument("sampler: vertex " + std::to_string(v) +
                                        " is not in exactly 3 hyperedges");
    return map;
}

void require_acceptance_possible(const ConstraintTable& c) {
    for (double v : c.flat())
        if (v > 0.0)
            return;
    throw std::runtime_error(
        "sampler: acceptance impossible, every constraint entry is zero");
}

void check_proposal_cap(std::uint64_t proposed, std::uint64_t accepted,
                        std::uint64_t cap, const char* what) {
    if (cap != 0 && proposed > cap * std::max<std::uint64_t>(accepted, 1))
        throw std::runtime_error(std::string(what) + ": proposal cap exceeded (" +
                                 std::to_string(proposed) + " proposals for " +
                                 std::to_string(accepted) + " accepted)");
}

void record(Tally& t, const EdgeMap& map, int v) {
    ++t.vertex_counts[static_cast<std::size_t>(v)];
    for (int e : map[static_cast<std::size_t>(v)])
        ++t.edge_counts[static_cast<std::size_t>(e)];
    ++t.accepted;
}

Tally rejection_chunk(const ConstraintTable& c, std::uint64_t target,
                      SplitMix64& rng, const EdgeMap& map, std::uint64_t cap) {
    Tally t;
    while (t.accepted < target) {
        const int a = sample_bernoulli(rng, 0.5);
        const int b = sample_bernoulli(rng, 0.5);
        const int x = sample_bernoulli(rng, 0.5);
        const int y = sample_bernoulli(rng, 0.5);
        const double u = sample_uniform(rng);
        ++t.proposed;
        if (u < c.at(x, y, a, b))
            record(t, map, vertex_index(a, b, x, y));
        check_proposal_cap(t.proposed, t.accepted, cap, "rejection sampler");
    }
    return t;
}

Tally metropolis_chunk(const ConstraintTable& c, std::uint64_t target,
                       SplitMix64& rng, const EdgeMap& map,
                       std::uint64_t batch_size, std::uint64_t burn_in,
                       std::uint64_t cap) {
    Tally t;
    int a = sample_bernoulli(rng, 0.5);
    int b = sample_bernoulli(rng, 0.5);
    int x = sample_bernoulli(rng, 0.5);
    int y = sample_bernoulli(rng, 0.5);
    double cv = sample_uniform(rng);

    const auto step = [&] {
        switch (rng.next_u64() % 5) {
        case 0: a ^= 1; break;
        case 1: b ^= 1; break;
        case 2: x ^= 1; break;
        case 3: y ^= 1; break;
        default: cv = sample_uniform(rng); break;
        }
    };

    for (std::uint64_t i = 0; i < burn_in; ++i)
        step();

    while (t.accepted < target) {
        for (std::uint64_t i = 0; i < batch_size && t.accepted < target; ++i) {
            step();
            ++t.proposed;
            if (cv < c.at(x, y, a, b))
                record(t, map, vertex_index(a, b, x, y));
            check_proposal_cap(t.proposed, t.accepted, cap, "metropolis sampler");
        }
    }
    return t;
}

template <typename Chunk>
Tally run_workers(const SamplerConfig& cfg, const Chunk& chunk) {
    const int workers = std::max(cfg.workers, 1);
    if (workers == 1) {
        SplitMix64 rng(cfg.seed);
        return chunk(cfg.target_accepted, rng);
    }

    // Each worker owns a private rng and tally; the fold at the end is
    // exact integer addition, so results do not depend on scheduling.
    std::vector<Tally> parts(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    const std::uint64_t base = cfg.target_accepted / static_cast<std::uint64_t>(workers);
    const std::uint64_t rem = cfg.target_accepted % static_cast<std::uint64_t>(workers);

    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int k = 0; k < workers; ++k) {
        threads.emplace_back([&, k] {
            try {
                const std::uint64_t share =
                    base + (static_cast<std::uint64_t>(k) < rem ? 1 : 0);
                SplitMix64 rng(stream_seed(cfg.seed, static_cast<std::uint64_t>(k)));
                parts[static_cast<std::size_t>(k)] = chunk(share, rng);
            } catch (...) {
                errors[static_cast<std::size_t>(k)] = std::current_exception();
            }
        });
    }
    for (auto& th : threads)
        th.join();
    for (const auto& err : errors)
        if (err)
            std::rethrow_exception(err);

    Tally total;
    for (const auto& part : parts)
        total = merge_tallies(total, part);
    return total;
}

} // namespace

Tally rejection_sample_chunk(const ConstraintTable& c, std::uint64_t target_accepted,
                             SplitMix64& rng, const Scenario& scenario,
                             std::uint64_t max_proposed_factor) {
    const EdgeMap map = build_edge_map(scenario);
    require_acceptance_possible(c);
    return rejection_chunk(c, target_accepted, rng, map, max_proposed_factor);
}

Tally rejection_sample_run(const ConstraintTable& c, const SamplerConfig& cfg,
                           const Scenario& scenario) {
    if (cfg.method != SamplerMethod::rejection_atomic)
        throw std::invalid_argument("rejection_sample_run: config method mismatch");
    const EdgeMap map = build_edge_map(scenario);
    require_acceptance_possible(c);
    return run_workers(cfg, [&](std::uint64_t target, SplitMix64& rng) {
        return rejection_chunk(c, target, rng, map, cfg.max_proposed_factor);
    });
}

Tally metropolis_batch_run(const ConstraintTable& c, const SamplerConfig& cfg,
                           const Scenario& scenario) {
    if (cfg.method != SamplerMethod::metropolis_batch)
        throw std::invalid_argument("metropolis_batch_run: config method mismatch");
    if (cfg.batch_size < 1)
        throw std::invalid_argument("metropolis_batch_run: batch_size must be >= 1");
    const EdgeMap map = build_edge_map(scenario);
    require_acceptance_possible(c);
    return run_workers(cfg, [&](std::uint64_t target, SplitMix64& rng) {
        return metropolis_chunk(c, target, rng, map, cfg.batch_size, cfg.burn_in,
                                cfg.max_proposed_factor);
    });
}

Tally sample_run(const ConstraintTable& c, const SamplerConfig& cfg,
                 const Scenario& scenario) {
    return cfg.method == SamplerMethod::rejection_atomic
               ? rejection_sample_run(c, cfg, scenario)
               : metropolis_batch_run(c, cfg, scenario);
}

Tally merge_tallies(const Tally& t1, const Tally& t2) {
    Tally out;
    for (std::size_t i = 0; i < out.vertex_counts.size(); ++i)
        out.vertex_counts[i] = t1.vertex_counts[i] + t2.vertex_counts[i];
    for (std::size_t i = 0; i < out.edge_counts.size(); ++i)
        out.edge_counts[i] = t1.edge_counts[i] + t2.edge_counts[i];
    out.accepted = t1.accepted + t2.accepted;
    out.proposed = t1.proposed + t2.proposed;
    return out;
}

GlobalDistribution normalize(const Tally& t, const Scenario& scenario) {
    const EdgeMap map = build_edge_map(scenario);
    for (std::size_t e = 0; e < t.edge_counts.size(); ++e)
        if (t.edge_counts[e] == 0)
            throw std::domain_error(
                "normalize: hyperedge " + std::to_string(e) + " (" +
                (scenario.edges[e].kind == EdgeKind::context ? "context" : "nosignal") +
                ") has a zero tally; weights in it are undefined");

    GlobalDistribution d;
    for (int v = 0; v < 16; ++v) {
        std::uint64_t denom = 0;
        for (int e : map[static_cast<std::size_t>(v)])
            denom += t.edge_counts[static_cast<std::size_t>(e)];
        d[v] = 3.0 * static_cast<double>(t.vertex_counts[static_cast<std::size_t>(v)]) /
               static_cast<double>(denom);
    }
    return d;
}

} // namespace epr
