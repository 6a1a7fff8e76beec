#include "mlnet/core.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace mlnet {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::self_loop: return "self-loop";
        case errc::unknown_actor: return "unknown-actor";
        case errc::unknown_layer: return "unknown-layer";
        case errc::empty_layer_set: return "empty-layer-set";
        case errc::empty_layer: return "empty-layer";
        case errc::dimension_mismatch: return "dimension-mismatch";
        case errc::undefined_value: return "undefined";
        case errc::layer_cap: return "layer-cap";
        case errc::path_cap: return "path-cap";
        case errc::parse: return "parse";
        case errc::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

std::string Ratio::str2() const {
    if (den == 0) return "0.00";
    // half-up at the second decimal, exact integer arithmetic
    std::int64_t n = num, d = den;
    if (d < 0) { n = -n; d = -d; }
    bool neg = n < 0;
    if (neg) n = -n;
    std::int64_t cents = (200 * n + d) / (2 * d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%lld.%02lld", neg ? "-" : "",
                  static_cast<long long>(cents / 100), static_cast<long long>(cents % 100));
    return buf;
}

Ratio Ratio::reduced() const {
    if (num == 0) return {0, 1};
    std::int64_t g = std::gcd(num < 0 ? -num : num, den < 0 ? -den : den);
    if (g == 0) return *this;
    Ratio r{num / g, den / g};
    if (r.den < 0) { r.num = -r.num; r.den = -r.den; }
    return r;
}

bool operator==(const Ratio& a, const Ratio& b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
}

bool ratio_less(const Ratio& a, const Ratio& b) {
    // cross-multiplication; denominators positive by construction
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

bool lex_less(const LayerSet& a, const LayerSet& b) {
    std::uint64_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
        int i = __builtin_ctzll(x), j = __builtin_ctzll(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

bool combo_order_less(const LayerSet& a, const LayerSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

ActorId MultilayerNetwork::add_actor(std::string_view label) {
    if (label.empty()) throw Error(errc::invalid_argument, "actor label must be non-empty");
    if (auto existing = find_actor(label)) return *existing;
    actor_labels_.emplace_back(label);
    auto id = static_cast<ActorId>(actor_labels_.size() - 1);
    actor_index_.emplace(actor_labels_.back(), id);
    for (auto& layer_adj : adjacency_) layer_adj.emplace_back();
    return id;
}

LayerId MultilayerNetwork::add_layer(std::string_view name) {
    if (name.empty()) throw Error(errc::invalid_argument, "layer name must be non-empty");
    if (auto existing = find_layer(name)) return *existing;
    if (layer_names_.size() >= layer_cap_)
        throw Error(errc::layer_cap,
                    "layer count would exceed the cap of " + std::to_string(layer_cap_));
    layer_names_.emplace_back(name);
    adjacency_.emplace_back(actor_count());
    edge_counts_.push_back(0);
    return static_cast<LayerId>(layer_names_.size() - 1);
}

void MultilayerNetwork::check_layer(LayerId l) const {
    if (l >= layer_count())
        throw Error(errc::unknown_layer, "unknown layer id " + std::to_string(l));
}

void MultilayerNetwork::check_actor(ActorId a) const {
    if (a >= actor_count())
        throw Error(errc::unknown_actor, "unknown actor id " + std::to_string(a));
}

void MultilayerNetwork::add_edge(LayerId layer, ActorId u, ActorId v) {
    check_layer(layer);
    check_actor(u);
    check_actor(v);
    if (u == v)
        throw Error(errc::self_loop,
                    "self-loop on actor '" + actor_labels_[u] + "' rejected");
    auto& adj_u = adjacency_[layer][u];
    auto it = std::lower_bound(adj_u.begin(), adj_u.end(), v);
    if (it != adj_u.end() && *it == v) return;  // duplicate, no-op
    adj_u.insert(it, v);
    auto& adj_v = adjacency_[layer][v];
    adj_v.insert(std::lower_bound(adj_v.begin(), adj_v.end(), u), u);
    ++edge_counts_[layer];
}

const std::string& MultilayerNetwork::actor_label(ActorId a) const {
    check_actor(a);
    return actor_labels_[a];
}

const std::string& MultilayerNetwork::layer_name(LayerId l) const {
    check_layer(l);
    return layer_names_[l];
}

std::optional<ActorId> MultilayerNetwork::find_actor(std::string_view label) const {
    auto it = actor_index_.find(std::string(label));
    if (it == actor_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<LayerId> MultilayerNetwork::find_layer(std::string_view name) const {
    for (std::size_t i = 0; i < layer_names_.size(); ++i)
        if (layer_names_[i] == name) return static_cast<LayerId>(i);
    return std::nullopt;
}

const std::vector<ActorId>& MultilayerNetwork::neighbors(LayerId layer, ActorId a) const {
    check_layer(layer);
    check_actor(a);
    return adjacency_[layer][a];
}

bool MultilayerNetwork::has_edge(LayerId layer, ActorId u, ActorId v) const {
    const auto& adj = neighbors(layer, u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::size_t MultilayerNetwork::edge_count(LayerId layer) const {
    check_layer(layer);
    return edge_counts_[layer];
}

FlattenedGraph MultilayerNetwork::flatten(const LayerSet& layers) const {
    if (layers.empty())
        throw Error(errc::empty_layer_set, "cannot flatten an empty layer combination");
    for (LayerId l : layers.to_vector()) check_layer(l);

    std::vector<std::vector<ActorId>> merged(actor_count());
    for (ActorId a = 0; a < actor_count(); ++a) {
        auto& out = merged[a];
        for (LayerId l : layers.to_vector()) {
            const auto& adj = adjacency_[l][a];
            out.insert(out.end(), adj.begin(), adj.end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return FlattenedGraph(actor_count(), layers, std::move(merged));
}

FlattenedGraph::FlattenedGraph(std::size_t actor_count, LayerSet origin,
                               std::vector<std::vector<ActorId>> adjacency)
    : origin_(origin), adjacency_(std::move(adjacency)) {
    (void)actor_count;
    std::size_t degree_sum = 0;
    for (const auto& adj : adjacency_) degree_sum += adj.size();
    edge_count_ = degree_sum / 2;
}

bool FlattenedGraph::has_edge(ActorId u, ActorId v) const {
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<ActorId, ActorId>> FlattenedGraph::edges() const {
    std::vector<std::pair<ActorId, ActorId>> out;
    out.reserve(edge_count_);
    for (ActorId u = 0; u < adjacency_.size(); ++u)
        for (ActorId v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::size_t FlattenedGraph::active_actor_count() const {
    std::size_t n = 0;
    for (const auto& adj : adjacency_)
        if (!adj.empty()) ++n;
    return n;
}

namespace {

// Component labels over the given adjacency; -1 for skipped (inactive) actors
// when active_only is set. Labels are assigned in order of smallest member.
std::vector<int> component_labels(const std::vector<std::vector<ActorId>>& adj,
                                  bool active_only, std::size_t& count_out) {
    const std::size_t n = adj.size();
    std::vector<int> label(n, -1);
    int next = 0;
    for (ActorId start = 0; start < n; ++start) {
        if (label[start] != -1) continue;
        if (active_only && adj[start].empty()) continue;
        label[start] = next;
        std::queue<ActorId> q;
        q.push(start);
        while (!q.empty()) {
            ActorId u = q.front();
            q.pop();
            for (ActorId v : adj[u]) {
                if (label[v] == -1) {
                    label[v] = next;
                    q.push(v);
                }
            }
        }
        ++next;
    }
    count_out = static_cast<std::size_t>(next);
    return label;
}

std::vector<std::vector<ActorId>> layer_adjacency(const MultilayerNetwork& net, LayerId layer) {
    std::vector<std::vector<ActorId>> adj(net.actor_count());
    for (ActorId a = 0; a < net.actor_count(); ++a) adj[a] = net.neighbors(layer, a);
    return adj;
}

// Eccentricity of `start` restricted to its component; plain BFS.
std::size_t eccentricity(const std::vector<std::vector<ActorId>>& adj, ActorId start) {
    std::vector<int> dist(adj.size(), -1);
    dist[start] = 0;
    std::queue<ActorId> q;
    q.push(start);
    std::size_t ecc = 0;
    while (!q.empty()) {
        ActorId u = q.front();
        q.pop();
        for (ActorId v : adj[u]) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                ecc = std::max(ecc, static_cast<std::size_t>(dist[v]));
                q.push(v);
            }
        }
    }
    return ecc;
}

}  // namespace

LayerStats layer_stats(const MultilayerNetwork& net, LayerId layer) {
    LayerStats stats;
    stats.edge_count = net.edge_count(layer);
    auto adj = layer_adjacency(net, layer);
    for (const auto& nbrs : adj)
        if (!nbrs.empty()) ++stats.active_actor_count;
    std::size_t comps = 0;
    component_labels(adj, /*active_only=*/true, comps);
    stats.component_count = comps;
    if (stats.active_actor_count > 0)
        stats.avg_degree_active = Ratio{static_cast<std::int64_t>(2 * stats.edge_count),
                                        static_cast<std::int64_t>(stats.active_actor_count)};
    return stats;
}

FlatStats flatten_stats(const MultilayerNetwork& net, const LayerSet& layers) {
    FlattenedGraph flat = net.flatten(layers);
    FlatStats stats;
    stats.actor_count = net.actor_count();
    stats.edge_count = flat.edge_count();
    if (stats.actor_count > 0)
        stats.avg_degree_all = Ratio{static_cast<std::int64_t>(2 * stats.edge_count),
                                     static_cast<std::int64_t>(stats.actor_count)};

    std::vector<std::vector<ActorId>> adj(net.actor_count());
    for (ActorId a = 0; a < net.actor_count(); ++a) adj[a] = flat.neighbors(a);
    std::size_t comps = 0;
    auto labels = component_labels(adj, /*active_only=*/true, comps);
    stats.component_count = comps;

    if (comps > 0) {
        // largest component; ties resolved toward the smallest member id
        std::vector<std::size_t> sizes(comps, 0);
        for (ActorId a = 0; a < adj.size(); ++a)
            if (labels[a] != -1) ++sizes[labels[a]];
        int best = 0;
        for (std::size_t c = 1; c < comps; ++c)
            if (sizes[c] > sizes[best]) best = static_cast<int>(c);
        std::size_t diameter = 0;
        for (ActorId a = 0; a < adj.size(); ++a)
            if (labels[a] == best) diameter = std::max(diameter, eccentricity(adj, a));
        stats.diameter = diameter;
    }
    return stats;
}

std::vector<std::vector<ActorId>> connected_components(const FlattenedGraph& graph) {
    std::vector<std::vector<ActorId>> adj(graph.actor_count());
    for (ActorId a = 0; a < graph.actor_count(); ++a) adj[a] = graph.neighbors(a);
    std::size_t comps = 0;
    auto labels = component_labels(adj, /*active_only=*/false, comps);
    std::vector<std::vector<ActorId>> out(comps);
    for (ActorId a = 0; a < adj.size(); ++a) out[labels[a]].push_back(a);
    return out;
}

}  // namespace mlnet
