#pragma once

#include <cstdint>
#include <vector>

#include "mlnet/core.hpp"

namespace mlnet {

/// Per-layer count of edges traversed by a path; the multi-layer path cost.
struct LengthVector {
    std::vector<std::uint32_t> counts;

    std::uint32_t total() const {
        std::uint32_t sum = 0;
        for (auto c : counts) sum += c;
        return sum;
    }

    friend bool operator==(const LengthVector&, const LengthVector&) = default;
};

/// True iff a[i] <= b[i] for all i and a != b. Equal dimensionality required.
bool dominates(const LengthVector& a, const LengthVector& b);

/// Ordering used everywhere fronts or paths are emitted: by total first,
/// then lexicographic on the counts.
bool front_order_less(const LengthVector& a, const LengthVector& b);

/// One non-dominated length vector together with the exact number of
/// distinct layer-annotated simple paths from the source realizing it.
struct Label {
    LengthVector vector;
    std::uint64_t path_count = 0;
};

class SourceFronts;
SourceFronts single_source_fronts(const MultilayerNetwork& net, ActorId source);

/// Set of mutually incomparable length vectors with their path counts.
class ParetoFront {
public:
    ParetoFront() = default;
    explicit ParetoFront(std::vector<Label> labels) : labels_(std::move(labels)) {}

    bool empty() const { return labels_.empty(); }
    std::size_t size() const { return labels_.size(); }
    const std::vector<Label>& labels() const { return labels_; }

    /// nullptr when the vector is not on the front.
    const Label* find(const LengthVector& v) const;

    std::uint64_t total_path_count() const;

    friend bool operator==(const ParetoFront& a, const ParetoFront& b);

private:
    friend SourceFronts single_source_fronts(const MultilayerNetwork&, ActorId);
    std::vector<Label> labels_;  // sorted by front_order_less
};

/// All established labels from one source actor, computed by
/// multi-objective label-setting with unit costs: labels are processed in
/// nondecreasing total, equal vectors merge their path counts, and a new
/// vector is kept only if no established vector at that node dominates
/// it. Pure value; independent sources can be processed in parallel.
class SourceFronts {
public:
    ActorId source() const { return source_; }
    const ParetoFront& at(ActorId v) const { return fronts_[v]; }

private:
    friend SourceFronts single_source_fronts(const MultilayerNetwork&, ActorId);
    ActorId source_ = 0;
    std::vector<ParetoFront> fronts_;
};

/// Pareto front between two distinct actors. Empty iff t is unreachable
/// from s in the flattened all-layers graph.
ParetoFront pareto_front(const MultilayerNetwork& net, ActorId s, ActorId t);

/// A simple path whose consecutive steps are annotated with the layer
/// traversed, e.g. A -[lunch]- C -[lunch]- D.
struct LayeredPath {
    std::vector<ActorId> nodes;
    std::vector<LayerId> steps;  // steps.size() == nodes.size() - 1

    LengthVector vector(std::size_t layer_count) const;

    friend bool operator==(const LayeredPath&, const LayeredPath&) = default;
};

/// Materializes every efficient path between s and t, sorted by
/// (vector, nodes, steps). Throws CapExceededError before enumerating
/// when the total count exceeds `cap`.
std::vector<LayeredPath> enumerate_efficient_paths(const MultilayerNetwork& net, ActorId s,
                                                   ActorId t, std::uint64_t cap);

}  // namespace mlnet
