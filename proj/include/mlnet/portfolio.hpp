#pragma once

#include <optional>
#include <vector>

#include "mlnet/core.hpp"

namespace mlnet {

/// All nonempty subsets of the network's layers, minus the excluded one,
/// ordered by cardinality and then lexicographically by layer index.
std::vector<LayerSet> combinations(const MultilayerNetwork& net,
                                   std::optional<LayerId> exclude = std::nullopt);

struct CoverageResult {
    LayerId target = 0;
    LayerSet combination;
    Ratio probability{0, 1};  // |E_target ∩ E_flat(combination)| / |E_target|
};

/// Conditional probability that an edge of the target layer also appears
/// in the flattened combination. The target must not be in the combination
/// and must have at least one edge.
CoverageResult coverage(const MultilayerNetwork& net, LayerId target, const LayerSet& combo);

/// Best coverage over all nonempty combinations of the other layers;
/// ties prefer smaller cardinality, then lexicographic order.
CoverageResult best_cover(const MultilayerNetwork& net, LayerId target);

/// Record-breaking coverage per cardinality bound: for each k the best
/// combination of at most k other layers, kept only where it strictly
/// improves on the previous bound. The last entry equals best_cover.
std::vector<CoverageResult> coverage_frontier(const MultilayerNetwork& net, LayerId target);

struct JaccardResult {
    LayerSet left;
    LayerSet right;
    Ratio index{0, 1};  // |E_left ∩ E_right| / |E_left ∪ E_right|
};

/// Jaccard similarity of the flattened edge sets of two combinations.
/// Undefined (error) when both edge sets are empty.
JaccardResult jaccard(const MultilayerNetwork& net, const LayerSet& a, const LayerSet& b);

/// Most similar combination of other layers to the single target layer;
/// ties as in best_cover.
JaccardResult most_similar(const MultilayerNetwork& net, LayerId target);

/// Pair of disjoint nonempty combinations with maximal Jaccard index,
/// oriented with the lexicographically smaller side first. Ties prefer
/// the smaller combined cardinality, then lexicographic order.
JaccardResult best_disjoint_pair(const MultilayerNetwork& net);

}  // namespace mlnet
