#include "mlnet/louvain.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "mlnet/portfolio.hpp"

namespace mlnet {

namespace {

// splitmix64; stable shuffles across platforms and standard libraries
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }
};

void shuffle(std::vector<std::uint32_t>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng.below(static_cast<std::uint32_t>(i))]);
}

// weighted undirected graph for the aggregation levels
struct LevelGraph {
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;  // both directions, no loops
    std::vector<double> loop_weight;  // k_i includes 2 * loop_weight[i]
    double total_weight = 0;          // m: sum of edge weights + loop weights

    std::size_t size() const { return adj.size(); }

    double strength(std::uint32_t i) const {
        double k = 2 * loop_weight[i];
        for (const auto& [j, w] : adj[i]) {
            (void)j;
            k += w;
        }
        return k;
    }
};

// One level of the standard method: iteratively move nodes to the
// neighboring community with maximal positive modularity gain until a
// full pass makes no move.
std::vector<std::uint32_t> local_moves(const LevelGraph& g, Rng& rng, bool& changed) {
    const std::size_t n = g.size();
    const double m2 = 2 * g.total_weight;
    std::vector<std::uint32_t> comm(n);
    std::iota(comm.begin(), comm.end(), 0);
    std::vector<double> strength(n), tot(n);
    for (std::uint32_t i = 0; i < n; ++i) tot[i] = strength[i] = g.strength(i);

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    shuffle(order, rng);

    // scratch: edge weight from the current node into each community
    std::vector<double> to_comm(n, 0.0);
    std::vector<std::uint32_t> touched;

    changed = false;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::uint32_t i : order) {
            const std::uint32_t own = comm[i];
            touched.clear();
            touched.push_back(own);
            for (const auto& [j, w] : g.adj[i]) {
                const std::uint32_t c = comm[j];
                if (to_comm[c] == 0.0 && c != own) touched.push_back(c);
                to_comm[c] += w;
            }
            tot[own] -= strength[i];
            // gain of joining C, up to a shared constant: k_iC - tot_C*k_i/2m
            std::uint32_t best = own;
            double best_gain = to_comm[own] - tot[own] * strength[i] / m2;
            for (std::uint32_t c : touched) {
                if (c == own) continue;
                const double gain = to_comm[c] - tot[c] * strength[i] / m2;
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            tot[best] += strength[i];
            for (std::uint32_t c : touched) to_comm[c] = 0.0;
            if (best != own) {
                comm[i] = best;
                moved = true;
                changed = true;
            }
        }
    }
    return comm;
}

// densify community ids in order of first appearance
std::size_t renumber(std::vector<std::uint32_t>& comm) {
    std::vector<std::uint32_t> remap(comm.size(), UINT32_MAX);
    std::uint32_t next = 0;
    for (auto& c : comm) {
        if (remap[c] == UINT32_MAX) remap[c] = next++;
        c = remap[c];
    }
    return next;
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<std::uint32_t>& comm,
                     std::size_t n_comm) {
    LevelGraph out;
    out.adj.resize(n_comm);
    out.loop_weight.assign(n_comm, 0.0);
    out.total_weight = g.total_weight;

    std::unordered_map<std::uint64_t, double> between;
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        out.loop_weight[comm[i]] += g.loop_weight[i];
        for (const auto& [j, w] : g.adj[i]) {
            if (j < i) continue;  // visit each undirected edge once
            const std::uint32_t cu = std::min(comm[i], comm[j]);
            const std::uint32_t cv = std::max(comm[i], comm[j]);
            if (cu == cv)
                out.loop_weight[cu] += w;
            else
                between[(static_cast<std::uint64_t>(cu) << 32) | cv] += w;
        }
    }
    for (const auto& [key, w] : between) {
        const auto cu = static_cast<std::uint32_t>(key >> 32);
        const auto cv = static_cast<std::uint32_t>(key & 0xFFFFFFFFULL);
        out.adj[cu].emplace_back(cv, w);
        out.adj[cv].emplace_back(cu, w);
    }
    for (auto& nbrs : out.adj)
        std::sort(nbrs.begin(), nbrs.end());
    return out;
}

}  // namespace

Ratio modularity(const FlattenedGraph& graph,
                 const std::vector<std::optional<std::uint32_t>>& membership) {
    const auto m = static_cast<std::int64_t>(graph.edge_count());
    if (m == 0)
        throw Error(errc::undefined_value, "modularity undefined on an edgeless graph");
    if (membership.size() != graph.actor_count())
        throw Error(errc::invalid_argument, "membership size does not match the actor count");

    std::uint32_t n_comm = 0;
    for (ActorId a = 0; a < graph.actor_count(); ++a) {
        if (graph.degree(a) > 0 && !membership[a])
            throw Error(errc::invalid_argument,
                        "every actor with an edge must be assigned to a community");
        if (membership[a]) n_comm = std::max(n_comm, *membership[a] + 1);
    }

    std::vector<std::int64_t> inside(n_comm, 0), degree_sum(n_comm, 0);
    for (ActorId u = 0; u < graph.actor_count(); ++u) {
        if (!membership[u]) continue;
        degree_sum[*membership[u]] += static_cast<std::int64_t>(graph.degree(u));
        for (ActorId v : graph.neighbors(u))
            if (u < v && membership[v] == membership[u]) ++inside[*membership[u]];
    }
    std::int64_t num = 0;
    for (std::uint32_t c = 0; c < n_comm; ++c)
        num += 4 * m * inside[c] - degree_sum[c] * degree_sum[c];
    return Ratio{num, 4 * m * m}.reduced();
}

CommunityAssignment louvain(const FlattenedGraph& graph, std::uint64_t seed) {
    if (graph.edge_count() == 0)
        throw Error(errc::undefined_value, "modularity undefined on an edgeless graph");

    // isolated actors stay unassigned; the optimizer runs on active actors
    std::vector<ActorId> active;
    std::vector<std::uint32_t> compact(graph.actor_count(), UINT32_MAX);
    for (ActorId a = 0; a < graph.actor_count(); ++a) {
        if (graph.degree(a) > 0) {
            compact[a] = static_cast<std::uint32_t>(active.size());
            active.push_back(a);
        }
    }

    LevelGraph level;
    level.adj.resize(active.size());
    level.loop_weight.assign(active.size(), 0.0);
    level.total_weight = static_cast<double>(graph.edge_count());
    for (std::uint32_t i = 0; i < active.size(); ++i)
        for (ActorId v : graph.neighbors(active[i]))
            level.adj[i].emplace_back(compact[v], 1.0);

    Rng rng(seed);
    // assign[i]: current level node holding active actor i
    std::vector<std::uint32_t> assign(active.size());
    std::iota(assign.begin(), assign.end(), 0);

    while (true) {
        bool changed = false;
        std::vector<std::uint32_t> comm = local_moves(level, rng, changed);
        const std::size_t n_comm = renumber(comm);
        for (auto& a : assign) a = comm[a];
        if (!changed || n_comm == level.size()) break;
        level = aggregate(level, comm, n_comm);
    }

    CommunityAssignment result;
    result.membership.assign(graph.actor_count(), std::nullopt);
    // densify community indices in order of smallest member actor id
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < active.size(); ++i) {
        auto [it, fresh] = remap.emplace(assign[i], next);
        if (fresh) ++next;
        result.membership[active[i]] = it->second;
    }
    result.cluster_count = next;
    result.modularity = modularity(graph, result.membership);

    // a partition worse than the trivial one is never returned
    if (ratio_less(result.modularity, Ratio{0, 1})) {
        for (ActorId a : active) result.membership[a] = 0;
        result.cluster_count = 1;
        result.modularity = modularity(graph, result.membership);
    }
    return result;
}

std::vector<ClusterabilityRow> clusterability_sweep(const MultilayerNetwork& net,
                                                    std::uint64_t seed) {
    std::vector<ClusterabilityRow> rows;
    for (const LayerSet& combo : combinations(net)) {
        FlattenedGraph flat = net.flatten(combo);
        if (flat.edge_count() == 0) {
            rows.push_back({combo, 0, std::nullopt});
        } else {
            CommunityAssignment ca = louvain(flat, seed);
            rows.push_back({combo, ca.cluster_count, ca.modularity});
        }
    }
    return rows;
}

}  // namespace mlnet
