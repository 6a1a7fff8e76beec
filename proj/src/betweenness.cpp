#include "mlnet/betweenness.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace mlnet {

namespace {

struct BfsDag {
    std::vector<int> dist;
    std::vector<std::uint64_t> sigma;
    std::vector<std::vector<ActorId>> preds;
    std::vector<ActorId> order;  // nondecreasing distance
};

BfsDag bfs_dag(const FlattenedGraph& g, ActorId s) {
    const std::size_t n = g.actor_count();
    BfsDag d{std::vector<int>(n, -1), std::vector<std::uint64_t>(n, 0),
             std::vector<std::vector<ActorId>>(n), {}};
    d.dist[s] = 0;
    d.sigma[s] = 1;
    std::queue<ActorId> q;
    q.push(s);
    while (!q.empty()) {
        ActorId u = q.front();
        q.pop();
        d.order.push_back(u);
        for (ActorId v : g.neighbors(u)) {
            if (d.dist[v] == -1) {
                d.dist[v] = d.dist[u] + 1;
                q.push(v);
            }
            if (d.dist[v] == d.dist[u] + 1) {
                d.sigma[v] += d.sigma[u];
                d.preds[v].push_back(u);
            }
        }
    }
    return d;
}

}  // namespace

std::vector<double> classic_betweenness_fractional(const FlattenedGraph& graph) {
    const std::size_t n = graph.actor_count();
    std::vector<double> bc(n, 0.0);
    for (ActorId s = 0; s < n; ++s) {
        BfsDag d = bfs_dag(graph, s);
        std::vector<double> delta(n, 0.0);
        for (auto it = d.order.rbegin(); it != d.order.rend(); ++it) {
            ActorId w = *it;
            for (ActorId v : d.preds[w])
                delta[v] += static_cast<double>(d.sigma[v]) / static_cast<double>(d.sigma[w]) *
                            (1.0 + delta[w]);
            if (w != s) bc[w] += delta[w];
        }
    }
    // every unordered pair was accumulated from both endpoints
    for (auto& x : bc) x /= 2.0;
    return bc;
}

std::vector<std::uint64_t> classic_betweenness_count(const FlattenedGraph& graph) {
    const std::size_t n = graph.actor_count();
    std::vector<std::uint64_t> acc(n, 0);
    for (ActorId s = 0; s < n; ++s) {
        BfsDag d = bfs_dag(graph, s);
        // phi[v] = sum over targets t downstream of v of sigma_vt;
        // every geodesic from v to such a t starts with a DAG successor
        std::vector<std::uint64_t> phi(n, 0);
        for (auto it = d.order.rbegin(); it != d.order.rend(); ++it) {
            ActorId w = *it;
            for (ActorId v : d.preds[w]) phi[v] += 1 + phi[w];
            if (w != s) acc[w] += d.sigma[w] * phi[w];
        }
    }
    for (auto& x : acc) x /= 2;
    return acc;
}

std::vector<std::uint64_t> ml_betweenness_all(const MultilayerNetwork& net) {
    const std::size_t n = net.actor_count();
    std::vector<std::uint64_t> score(n, 0);
    if (n < 3) return score;

    std::vector<SourceFronts> fronts;
    fronts.reserve(n);
    for (ActorId v = 0; v < n; ++v) fronts.push_back(single_source_fronts(net, v));

    const std::size_t L = net.layer_count();
    LengthVector sum{std::vector<std::uint32_t>(L, 0)};

    for (ActorId s = 0; s < n; ++s) {
        for (ActorId t = s + 1; t < n; ++t) {
            const ParetoFront& through = fronts[s].at(t);
            if (through.empty()) continue;
            const std::uint32_t max_total = through.labels().back().vector.total();
            for (ActorId v = 0; v < n; ++v) {
                if (v == s || v == t) continue;
                const auto& first = fronts[s].at(v).labels();
                if (first.empty()) continue;
                const auto& second = fronts[t].at(v).labels();
                if (second.empty()) continue;
                for (const Label& a : first) {
                    const std::uint32_t ta = a.vector.total();
                    if (ta + second.front().vector.total() > max_total) break;
                    for (const Label& b : second) {
                        if (ta + b.vector.total() > max_total) break;
                        for (std::size_t i = 0; i < L; ++i)
                            sum.counts[i] = a.vector.counts[i] + b.vector.counts[i];
                        if (through.find(sum) != nullptr)
                            score[v] += a.path_count * b.path_count;
                    }
                }
            }
        }
    }
    return score;
}

std::vector<BetweennessScore> betweenness_scores(const MultilayerNetwork& net) {
    FlattenedGraph flat = net.flatten(net.all_layers());
    auto fractional = classic_betweenness_fractional(flat);
    auto counts = classic_betweenness_count(flat);
    auto ml = ml_betweenness_all(net);
    std::vector<BetweennessScore> out(net.actor_count());
    for (ActorId a = 0; a < net.actor_count(); ++a)
        out[a] = {a, ml[a], fractional[a], counts[a]};
    return out;
}

namespace {

// 1-based ranks by descending score, ties by ascending actor id
template <typename Score>
std::vector<int> ranks_desc(const std::vector<Score>& scores) {
    std::vector<ActorId> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](ActorId a, ActorId b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    std::vector<int> rank(scores.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i) + 1;
    return rank;
}

}  // namespace

std::vector<RankDelta> rank_delta_report(const MultilayerNetwork& net) {
    FlattenedGraph flat = net.flatten(net.all_layers());
    auto classic = classic_betweenness_fractional(flat);
    auto ml = ml_betweenness_all(net);
    auto classic_rank = ranks_desc(classic);
    auto ml_rank = ranks_desc(ml);

    std::vector<RankDelta> rows(net.actor_count());
    for (ActorId a = 0; a < net.actor_count(); ++a)
        rows[a] = {a, classic_rank[a], ml_rank[a], classic_rank[a] - ml_rank[a]};
    std::sort(rows.begin(), rows.end(),
              [](const RankDelta& a, const RankDelta& b) { return a.classic_rank < b.classic_rank; });
    return rows;
}

}  // namespace mlnet
