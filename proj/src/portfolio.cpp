#include "mlnet/portfolio.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace mlnet {

namespace {

std::uint64_t edge_key(ActorId u, ActorId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

// sorted edge keys of one layer
std::vector<std::uint64_t> layer_edges(const MultilayerNetwork& net, LayerId l) {
    std::vector<std::uint64_t> out;
    out.reserve(net.edge_count(l));
    for (ActorId u = 0; u < net.actor_count(); ++u)
        for (ActorId v : net.neighbors(l, u))
            if (u < v) out.push_back(edge_key(u, v));
    return out;
}

// sorted edge keys of a flattened combination
std::vector<std::uint64_t> combo_edges(const MultilayerNetwork& net, const LayerSet& combo) {
    std::vector<std::uint64_t> out;
    for (LayerId l : combo.to_vector()) {
        auto e = layer_edges(net, l);
        out.insert(out.end(), e.begin(), e.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t intersection_size(const std::vector<std::uint64_t>& a,
                              const std::vector<std::uint64_t>& b) {
    std::size_t count = 0;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

void check_combo_layers(const MultilayerNetwork& net, const LayerSet& combo) {
    for (LayerId l : combo.to_vector())
        if (l >= net.layer_count())
            throw Error(errc::unknown_layer, "unknown layer id " + std::to_string(l));
}

}  // namespace

std::vector<LayerSet> combinations(const MultilayerNetwork& net, std::optional<LayerId> exclude) {
    std::vector<LayerId> pool;
    for (LayerId l = 0; l < net.layer_count(); ++l)
        if (!exclude || *exclude != l) pool.push_back(l);

    std::vector<LayerSet> out;
    const std::uint64_t limit = 1ULL << pool.size();
    out.reserve(limit > 0 ? limit - 1 : 0);
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        LayerSet s;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if ((mask >> i) & 1ULL) s.insert(pool[i]);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), combo_order_less);
    return out;
}

CoverageResult coverage(const MultilayerNetwork& net, LayerId target, const LayerSet& combo) {
    if (target >= net.layer_count())
        throw Error(errc::unknown_layer, "unknown layer id " + std::to_string(target));
    check_combo_layers(net, combo);
    if (combo.empty())
        throw Error(errc::empty_layer_set, "coverage requires a nonempty combination");
    if (combo.contains(target))
        throw Error(errc::invalid_argument,
                    "combination must not contain the target layer '" +
                        net.layer_name(target) + "'");
    const std::size_t target_edges = net.edge_count(target);
    if (target_edges == 0)
        throw Error(errc::empty_layer, "coverage of the empty layer '" + net.layer_name(target) +
                                           "' is an undefined conditional");

    std::size_t covered = 0;
    for (ActorId u = 0; u < net.actor_count(); ++u) {
        for (ActorId v : net.neighbors(target, u)) {
            if (u >= v) continue;
            for (LayerId l : combo.to_vector()) {
                if (net.has_edge(l, u, v)) {
                    ++covered;
                    break;
                }
            }
        }
    }
    return {target, combo,
            Ratio{static_cast<std::int64_t>(covered), static_cast<std::int64_t>(target_edges)}};
}

CoverageResult best_cover(const MultilayerNetwork& net, LayerId target) {
    auto combos = combinations(net, target);
    if (combos.empty())
        throw Error(errc::empty_layer_set, "no other layers to cover '" +
                                               net.layer_name(target) + "' with");
    // enumeration order is (cardinality, lex), so keeping strict
    // improvements realizes the documented tie-break
    std::optional<CoverageResult> best;
    for (const LayerSet& combo : combos) {
        CoverageResult r = coverage(net, target, combo);
        if (!best || ratio_less(best->probability, r.probability)) best = r;
    }
    return *best;
}

std::vector<CoverageResult> coverage_frontier(const MultilayerNetwork& net, LayerId target) {
    auto combos = combinations(net, target);
    if (combos.empty())
        throw Error(errc::empty_layer_set, "no other layers to cover '" +
                                               net.layer_name(target) + "' with");
    std::vector<CoverageResult> frontier;
    std::optional<CoverageResult> best;
    std::size_t card = 0;
    auto flush = [&]() {
        if (best && (frontier.empty() ||
                     ratio_less(frontier.back().probability, best->probability)))
            frontier.push_back(*best);
    };
    for (const LayerSet& combo : combos) {
        if (combo.size() != card) {
            flush();
            card = combo.size();
        }
        CoverageResult r = coverage(net, target, combo);
        if (!best || ratio_less(best->probability, r.probability)) best = r;
    }
    flush();
    return frontier;
}

JaccardResult jaccard(const MultilayerNetwork& net, const LayerSet& a, const LayerSet& b) {
    check_combo_layers(net, a);
    check_combo_layers(net, b);
    if (a.empty() || b.empty())
        throw Error(errc::empty_layer_set, "jaccard requires nonempty combinations");
    auto ea = combo_edges(net, a);
    auto eb = combo_edges(net, b);
    const std::size_t inter = intersection_size(ea, eb);
    const std::size_t uni = ea.size() + eb.size() - inter;
    if (uni == 0)
        throw Error(errc::undefined_value,
                    "jaccard of two edgeless combinations is undefined");
    return {a, b, Ratio{static_cast<std::int64_t>(inter), static_cast<std::int64_t>(uni)}};
}

JaccardResult most_similar(const MultilayerNetwork& net, LayerId target) {
    if (target >= net.layer_count())
        throw Error(errc::unknown_layer, "unknown layer id " + std::to_string(target));
    if (net.edge_count(target) == 0)
        throw Error(errc::empty_layer, "most similar combination to the empty layer '" +
                                           net.layer_name(target) + "' is undefined");
    auto combos = combinations(net, target);
    if (combos.empty())
        throw Error(errc::empty_layer_set, "no other layers to compare '" +
                                               net.layer_name(target) + "' against");
    LayerSet single = LayerSet::of({target});
    std::optional<JaccardResult> best;
    for (const LayerSet& combo : combos) {
        JaccardResult r = jaccard(net, single, combo);
        if (!best || ratio_less(best->index, r.index)) best = r;
    }
    return *best;
}

JaccardResult best_disjoint_pair(const MultilayerNetwork& net) {
    const std::size_t L = net.layer_count();
    if (L < 2)
        throw Error(errc::invalid_argument,
                    "disjoint pair search requires at least two layers");

    // flattened edge sets per mask, filled on demand
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> cache;
    auto edges_of = [&](const LayerSet& s) -> const std::vector<std::uint64_t>& {
        auto it = cache.find(s.bits());
        if (it == cache.end()) it = cache.emplace(s.bits(), combo_edges(net, s)).first;
        return it->second;
    };

    auto better = [&](const JaccardResult& a, const JaccardResult& b) {
        // higher index, then fewer layers in total, then lexicographic
        if (a.index == b.index) {
            std::size_t ca = a.left.size() + a.right.size();
            std::size_t cb = b.left.size() + b.right.size();
            if (ca != cb) return ca < cb;
            if (!(a.left == b.left)) return lex_less(a.left, b.left);
            return lex_less(a.right, b.right);
        }
        return ratio_less(b.index, a.index);
    };

    std::optional<JaccardResult> best;
    const std::uint64_t full = (1ULL << L) - 1;
    for (std::uint64_t am = 1; am <= full; ++am) {
        const std::uint64_t rest = full & ~am;
        // nonempty submasks of the complement
        for (std::uint64_t bm = rest; bm != 0; bm = (bm - 1) & rest) {
            LayerSet a(am), b(bm);
            // canonical orientation: smaller lexicographic side first
            if (lex_less(b, a)) continue;
            const auto& ea = edges_of(a);
            const auto& eb = edges_of(b);
            const std::size_t inter = intersection_size(ea, eb);
            const std::size_t uni = ea.size() + eb.size() - inter;
            JaccardResult r{a, b,
                            uni == 0 ? Ratio{0, 1}
                                     : Ratio{static_cast<std::int64_t>(inter),
                                             static_cast<std::int64_t>(uni)}};
            if (!best || better(r, *best)) best = r;
        }
    }
    return *best;
}

}  // namespace mlnet
