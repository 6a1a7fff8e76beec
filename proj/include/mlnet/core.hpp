#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mlnet {

using ActorId = std::uint32_t;
using LayerId = std::uint32_t;

inline constexpr std::size_t kDefaultLayerCap = 16;

/// Machine-readable error categories surfaced by the CLI.
enum class errc {
    self_loop,
    unknown_actor,
    unknown_layer,
    empty_layer_set,
    empty_layer,
    dimension_mismatch,
    undefined_value,
    layer_cap,
    path_cap,
    parse,
    invalid_argument,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* category() const noexcept { return errc_name(code_); }

private:
    errc code_;
};

/// Raised when enumerating paths would exceed the configured cap;
/// carries the count that would have been produced.
class CapExceededError : public Error {
public:
    CapExceededError(std::uint64_t count, const std::string& message)
        : Error(errc::path_cap, message), path_count_(count) {}

    std::uint64_t path_count() const noexcept { return path_count_; }

private:
    std::uint64_t path_count_;
};

/// Exact nonnegative rational. Probabilities, similarity indices and
/// modularity values are carried exactly and rounded only for display.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }

    /// Half-up rounding to two decimals, e.g. {194*2, 60} -> "6.47".
    std::string str2() const;

    Ratio reduced() const;

    friend bool operator==(const Ratio& a, const Ratio& b);
};

/// Exact comparison; both denominators must be positive.
bool ratio_less(const Ratio& a, const Ratio& b);

/// Subset of a network's layers, bit-indexed by LayerId.
class LayerSet {
public:
    LayerSet() = default;
    explicit LayerSet(std::uint64_t bits) : bits_(bits) {}

    static LayerSet of(std::initializer_list<LayerId> layers) {
        LayerSet s;
        for (LayerId l : layers) s.insert(l);
        return s;
    }

    static LayerSet all(std::size_t layer_count) {
        return LayerSet(layer_count >= 64 ? ~0ULL : (1ULL << layer_count) - 1);
    }

    void insert(LayerId l) { bits_ |= (1ULL << l); }
    void erase(LayerId l) { bits_ &= ~(1ULL << l); }
    bool contains(LayerId l) const { return (bits_ >> l) & 1ULL; }
    bool empty() const { return bits_ == 0; }
    std::size_t size() const { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }
    std::uint64_t bits() const { return bits_; }

    bool intersects(const LayerSet& other) const { return (bits_ & other.bits_) != 0; }

    std::vector<LayerId> to_vector() const {
        std::vector<LayerId> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<LayerId>(__builtin_ctzll(b)));
        return out;
    }

    friend bool operator==(const LayerSet&, const LayerSet&) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Ascending member-index order: {0,1} < {0,2} < {1,2}.
bool lex_less(const LayerSet& a, const LayerSet& b);

/// Canonical enumeration order: cardinality first, then lexicographic.
bool combo_order_less(const LayerSet& a, const LayerSet& b);

class FlattenedGraph;

/// A fixed actor set with one undirected simple graph per layer.
/// Single-writer construction; all analyses treat the network as
/// immutable and are safe to run concurrently once it is built.
class MultilayerNetwork {
public:
    explicit MultilayerNetwork(std::size_t layer_cap = kDefaultLayerCap)
        : layer_cap_(layer_cap) {}

    /// Returns the existing id when the label is already present.
    ActorId add_actor(std::string_view label);

    /// Returns the existing id when the name is already present;
    /// adding a new layer beyond the cap is a configuration error.
    LayerId add_layer(std::string_view name);

    /// Undirected, idempotent. Self-loops and unknown ids are rejected.
    void add_edge(LayerId layer, ActorId u, ActorId v);

    std::size_t actor_count() const { return actor_labels_.size(); }
    std::size_t layer_count() const { return layer_names_.size(); }
    std::size_t layer_cap() const { return layer_cap_; }

    const std::string& actor_label(ActorId a) const;
    const std::string& layer_name(LayerId l) const;
    std::optional<ActorId> find_actor(std::string_view label) const;
    std::optional<LayerId> find_layer(std::string_view name) const;

    /// Sorted neighbor list of `a` within `layer`.
    const std::vector<ActorId>& neighbors(LayerId layer, ActorId a) const;
    bool has_edge(LayerId layer, ActorId u, ActorId v) const;
    std::size_t degree(LayerId layer, ActorId a) const { return neighbors(layer, a).size(); }
    std::size_t edge_count(LayerId layer) const;

    LayerSet all_layers() const { return LayerSet::all(layer_count()); }

    /// Union of the member layers' edge sets. Empty sets are rejected.
    FlattenedGraph flatten(const LayerSet& layers) const;

private:
    void check_layer(LayerId l) const;
    void check_actor(ActorId a) const;

    std::size_t layer_cap_;
    std::vector<std::string> actor_labels_;
    std::unordered_map<std::string, ActorId> actor_index_;
    std::vector<std::string> layer_names_;
    // adjacency_[layer][actor] = sorted neighbor ids
    std::vector<std::vector<std::vector<ActorId>>> adjacency_;
    std::vector<std::size_t> edge_counts_;
};

/// Single undirected graph obtained by merging a layer combination.
class FlattenedGraph {
public:
    FlattenedGraph(std::size_t actor_count, LayerSet origin,
                   std::vector<std::vector<ActorId>> adjacency);

    std::size_t actor_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    const LayerSet& origin() const { return origin_; }

    const std::vector<ActorId>& neighbors(ActorId a) const { return adjacency_[a]; }
    std::size_t degree(ActorId a) const { return adjacency_[a].size(); }
    bool has_edge(ActorId u, ActorId v) const;

    /// All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<ActorId, ActorId>> edges() const;

    std::size_t active_actor_count() const;

private:
    LayerSet origin_;
    std::vector<std::vector<ActorId>> adjacency_;
    std::size_t edge_count_ = 0;
};

struct LayerStats {
    std::size_t edge_count = 0;
    std::size_t component_count = 0;   // among active actors
    Ratio avg_degree_active{0, 1};     // 2*edges / active actors
    std::size_t active_actor_count = 0;
};

struct FlatStats {
    std::size_t actor_count = 0;       // all actors of the network
    std::size_t edge_count = 0;        // distinct undirected edges
    Ratio avg_degree_all{0, 1};        // 2*edges / all actors
    std::size_t diameter = 0;          // max eccentricity in the largest component
    std::size_t component_count = 0;   // among active actors
};

/// Per-layer descriptive statistics. Components and average degree are
/// computed over the actors active in that layer (degree >= 1).
LayerStats layer_stats(const MultilayerNetwork& net, LayerId layer);

/// Statistics of the merged combination. The average degree divides by
/// the full actor set, unlike the per-layer convention.
FlatStats flatten_stats(const MultilayerNetwork& net, const LayerSet& layers);

/// Partition of the full actor set (isolated actors become singletons).
/// Components are ordered by smallest member id; members ascending.
std::vector<std::vector<ActorId>> connected_components(const FlattenedGraph& graph);

}  // namespace mlnet
