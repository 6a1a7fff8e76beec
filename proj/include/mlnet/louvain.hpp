#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mlnet/core.hpp"

namespace mlnet {

struct CommunityAssignment {
    /// Community index per actor; nullopt for isolated actors, which are
    /// excluded from the modularity graph. Indices are dense from 0,
    /// ordered by smallest member actor id.
    std::vector<std::optional<std::uint32_t>> membership;
    Ratio modularity{0, 1};
    std::size_t cluster_count = 0;
};

/// Newman modularity of a partition, exact: Q = (4m*sum_in - sum_tot^2)/(4m^2)
/// summed per community. Every actor with degree >= 1 must be assigned.
Ratio modularity(const FlattenedGraph& graph,
                 const std::vector<std::optional<std::uint32_t>>& membership);

/// Multilevel greedy modularity optimization: local moves to the
/// neighboring community with maximal positive gain, then aggregation,
/// repeated until no gain. Node visit order is a seed-determined
/// permutation, so a fixed seed reproduces the same partition.
CommunityAssignment louvain(const FlattenedGraph& graph, std::uint64_t seed);

struct ClusterabilityRow {
    LayerSet combination;
    std::size_t cluster_count = 0;
    std::optional<Ratio> modularity;  // absent for edgeless combinations
};

/// One louvain run per nonempty layer combination, in combinations() order.
std::vector<ClusterabilityRow> clusterability_sweep(const MultilayerNetwork& net,
                                                    std::uint64_t seed);

}  // namespace mlnet
