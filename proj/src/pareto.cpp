#include "mlnet/pareto.hpp"

#include <algorithm>
#include <cassert>

namespace mlnet {

bool dominates(const LengthVector& a, const LengthVector& b) {
    if (a.counts.size() != b.counts.size())
        throw Error(errc::dimension_mismatch,
                    "length vectors of dimension " + std::to_string(a.counts.size()) + " and " +
                        std::to_string(b.counts.size()) + " are not comparable");
    bool equal = true;
    for (std::size_t i = 0; i < a.counts.size(); ++i) {
        if (a.counts[i] > b.counts[i]) return false;
        if (a.counts[i] != b.counts[i]) equal = false;
    }
    return !equal;
}

bool front_order_less(const LengthVector& a, const LengthVector& b) {
    auto ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.counts < b.counts;
}

namespace {

// componentwise a <= b; callers guarantee a != b via distinct totals
bool leq_all(const LengthVector& a, const LengthVector& b) {
    for (std::size_t i = 0; i < a.counts.size(); ++i)
        if (a.counts[i] > b.counts[i]) return false;
    return true;
}

}  // namespace

const Label* ParetoFront::find(const LengthVector& v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v,
                               [](const Label& l, const LengthVector& x) {
                                   return front_order_less(l.vector, x);
                               });
    if (it != labels_.end() && it->vector == v) return &*it;
    return nullptr;
}

std::uint64_t ParetoFront::total_path_count() const {
    std::uint64_t sum = 0;
    for (const auto& l : labels_) sum += l.path_count;
    return sum;
}

bool operator==(const ParetoFront& a, const ParetoFront& b) {
    if (a.labels_.size() != b.labels_.size()) return false;
    for (std::size_t i = 0; i < a.labels_.size(); ++i)
        if (a.labels_[i].vector != b.labels_[i].vector ||
            a.labels_[i].path_count != b.labels_[i].path_count)
            return false;
    return true;
}

SourceFronts single_source_fronts(const MultilayerNetwork& net, ActorId source) {
    const std::size_t n = net.actor_count();
    const std::size_t L = net.layer_count();
    if (source >= n)
        throw Error(errc::unknown_actor, "unknown actor id " + std::to_string(source));

    SourceFronts result;
    result.source_ = source;
    result.fronts_.assign(n, ParetoFront{});

    struct Arrival {
        ActorId node;
        LengthVector vector;
        std::uint64_t count;
    };

    LengthVector zero{std::vector<std::uint32_t>(L, 0)};
    result.fronts_[source].labels_.push_back({zero, 1});

    // frontier holds the labels established at the current total
    std::vector<Arrival> frontier{{source, zero, 1}};
    std::vector<Arrival> arrivals;

    while (!frontier.empty()) {
        arrivals.clear();
        for (const Arrival& cur : frontier) {
            for (LayerId l = 0; l < L; ++l) {
                for (ActorId w : net.neighbors(l, cur.node)) {
                    LengthVector next = cur.vector;
                    ++next.counts[l];
                    arrivals.push_back({w, std::move(next), cur.count});
                }
            }
        }

        // merge equal (node, vector) arrivals, summing path counts
        std::sort(arrivals.begin(), arrivals.end(), [](const Arrival& a, const Arrival& b) {
            if (a.node != b.node) return a.node < b.node;
            return a.vector.counts < b.vector.counts;
        });

        frontier.clear();
        for (std::size_t i = 0; i < arrivals.size();) {
            std::size_t j = i + 1;
            std::uint64_t count = arrivals[i].count;
            while (j < arrivals.size() && arrivals[j].node == arrivals[i].node &&
                   arrivals[j].vector == arrivals[i].vector) {
                count += arrivals[j].count;
                ++j;
            }
            // established vectors all have strictly smaller totals, so
            // componentwise <= here means proper dominance
            auto& front = result.fronts_[arrivals[i].node].labels_;
            bool dominated = std::any_of(front.begin(), front.end(), [&](const Label& est) {
                return leq_all(est.vector, arrivals[i].vector);
            });
            if (!dominated) {
                front.push_back({arrivals[i].vector, count});
                frontier.push_back({arrivals[i].node, std::move(arrivals[i].vector), count});
            }
            i = j;
        }
    }

    // fronts are built in nondecreasing total with lexicographic order at
    // each level, which is exactly front_order_less
    return result;
}

ParetoFront pareto_front(const MultilayerNetwork& net, ActorId s, ActorId t) {
    if (s == t)
        throw Error(errc::invalid_argument, "pareto front requires two distinct actors");
    if (t >= net.actor_count())
        throw Error(errc::unknown_actor, "unknown actor id " + std::to_string(t));
    return single_source_fronts(net, s).at(t);
}

LengthVector LayeredPath::vector(std::size_t layer_count) const {
    LengthVector v{std::vector<std::uint32_t>(layer_count, 0)};
    for (LayerId l : steps) ++v.counts[l];
    return v;
}

namespace {

// Walks backward from (t, target vector): every predecessor label that is
// established extends to efficient paths only, so the traversal never
// explores a dead branch.
void reconstruct(const MultilayerNetwork& net, const SourceFronts& fronts, ActorId s,
                 ActorId node, const LengthVector& vec, std::vector<ActorId>& rev_nodes,
                 std::vector<LayerId>& rev_steps, std::vector<LayeredPath>& out) {
    if (node == s && vec.total() == 0) {
        LayeredPath path;
        path.nodes.assign(rev_nodes.rbegin(), rev_nodes.rend());
        path.steps.assign(rev_steps.rbegin(), rev_steps.rend());
        out.push_back(std::move(path));
        return;
    }
    for (LayerId l = 0; l < net.layer_count(); ++l) {
        if (vec.counts[l] == 0) continue;
        LengthVector prev = vec;
        --prev.counts[l];
        for (ActorId u : net.neighbors(l, node)) {
            if (fronts.at(u).find(prev) == nullptr) continue;
            rev_nodes.push_back(u);
            rev_steps.push_back(l);
            reconstruct(net, fronts, s, u, prev, rev_nodes, rev_steps, out);
            rev_nodes.pop_back();
            rev_steps.pop_back();
        }
    }
}

}  // namespace

std::vector<LayeredPath> enumerate_efficient_paths(const MultilayerNetwork& net, ActorId s,
                                                   ActorId t, std::uint64_t cap) {
    if (cap < 1) throw Error(errc::invalid_argument, "path cap must be at least 1");
    if (s == t)
        throw Error(errc::invalid_argument, "path enumeration requires two distinct actors");

    SourceFronts fronts = single_source_fronts(net, s);
    const ParetoFront& front = fronts.at(t);
    std::uint64_t total = front.total_path_count();
    if (total > cap)
        throw CapExceededError(total, "efficient path count " + std::to_string(total) +
                                          " exceeds cap " + std::to_string(cap));

    std::vector<LayeredPath> out;
    out.reserve(total);
    std::vector<ActorId> rev_nodes{t};
    std::vector<LayerId> rev_steps;
    for (const Label& label : front.labels())
        reconstruct(net, fronts, s, t, label.vector, rev_nodes, rev_steps, out);
    assert(out.size() == total);

    std::sort(out.begin(), out.end(), [&](const LayeredPath& a, const LayeredPath& b) {
        auto va = a.vector(net.layer_count()), vb = b.vector(net.layer_count());
        if (va != vb) return front_order_less(va, vb);
        if (a.nodes != b.nodes) return a.nodes < b.nodes;
        return a.steps < b.steps;
    });
    return out;
}

}  // namespace mlnet
