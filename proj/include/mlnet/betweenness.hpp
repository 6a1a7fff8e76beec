#pragma once

#include <cstdint>
#include <vector>

#include "mlnet/core.hpp"
#include "mlnet/pareto.hpp"

namespace mlnet {

/// Freeman/Brandes betweenness over unordered pairs, endpoints excluded,
/// as the sum of pair fractions sigma_st(v)/sigma_st.
std::vector<double> classic_betweenness_fractional(const FlattenedGraph& graph);

/// Same pair sum but with raw shortest-path counts sigma_st(v).
std::vector<std::uint64_t> classic_betweenness_count(const FlattenedGraph& graph);

/// Multi-layer betweenness: for each actor v, the number of efficient
/// paths over all unordered pairs {s,t} that contain v as an interior
/// node. Computed combinatorially from per-source Pareto fronts: an
/// efficient path splits at v into efficient halves, and a pair of
/// half-vectors whose sum lies on front(s,t) always concatenates into a
/// simple efficient path.
std::vector<std::uint64_t> ml_betweenness_all(const MultilayerNetwork& net);

struct BetweennessScore {
    ActorId actor = 0;
    std::uint64_t ml_count = 0;
    double classic_fractional = 0.0;
    std::uint64_t classic_count = 0;
};

/// All three measures on the all-layers flattened network, by actor.
std::vector<BetweennessScore> betweenness_scores(const MultilayerNetwork& net);

struct RankDelta {
    ActorId actor = 0;
    int classic_rank = 0;  // 1-based, classic fractional descending
    int ml_rank = 0;       // 1-based, multi-layer count descending
    int delta = 0;         // classic_rank - ml_rank
};

/// Ranking comparison of the two measures, ordered by classic rank.
/// Ties break by ascending actor id in both rankings.
std::vector<RankDelta> rank_delta_report(const MultilayerNetwork& net);

}  // namespace mlnet
