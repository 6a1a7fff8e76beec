#include <doctest.h>

#include <algorithm>

#include "mlnet/pareto.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace mlnet;
using namespace mlnet::testing;

namespace {

LengthVector lv(std::initializer_list<std::uint32_t> counts) {
    return LengthVector{std::vector<std::uint32_t>(counts)};
}

}  // namespace

TEST_SUITE("pareto") {

TEST_CASE("dominance basics") {
    CHECK(dominates(lv({1, 0}), lv({1, 1})));
    CHECK_FALSE(dominates(lv({2, 0}), lv({1, 1})));
    CHECK_FALSE(dominates(lv({1, 1}), lv({2, 0})));
    CHECK_FALSE(dominates(lv({1, 1}), lv({1, 1})));
    CHECK_THROWS_AS(dominates(lv({1}), lv({1, 1})), Error);
}

TEST_CASE("dominance is a strict partial order") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        auto rand_vec = [&] {
            LengthVector v{std::vector<std::uint32_t>(3)};
            for (auto& c : v.counts) c = rng.below(4);
            return v;
        };
        LengthVector a = rand_vec(), b = rand_vec(), c = rand_vec();
        CHECK_FALSE(dominates(a, a));                            // irreflexive
        if (dominates(a, b)) CHECK_FALSE(dominates(b, a));       // antisymmetric
        if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));  // transitive
    }
}

TEST_CASE("toy network front between A and D") {
    auto net = toy_network();
    ParetoFront front = pareto_front(net, 0, 3);  // A, D
    REQUIRE(front.size() == 3);
    const Label* l20 = front.find(lv({2, 0}));
    const Label* l11 = front.find(lv({1, 1}));
    const Label* l02 = front.find(lv({0, 2}));
    REQUIRE(l20 != nullptr);
    REQUIRE(l11 != nullptr);
    REQUIRE(l02 != nullptr);
    CHECK(l20->path_count == 1);
    CHECK(l11->path_count == 2);
    CHECK(l02->path_count == 1);
    CHECK(front.total_path_count() == 4);
}

TEST_CASE("front of two isolated actors is empty") {
    MultilayerNetwork net;
    net.add_actor("A");
    net.add_actor("B");
    net.add_layer("L");
    CHECK(pareto_front(net, 0, 1).empty());
}

TEST_CASE("identical endpoints are rejected") {
    auto net = toy_network();
    CHECK_THROWS_AS(pareto_front(net, 1, 1), Error);
    CHECK_THROWS_AS(enumerate_efficient_paths(net, 1, 1, 10), Error);
}

TEST_CASE("single layer reduces to distance and geodesic count") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto net = random_network(seed, 10, 1, 0.25);
        FlattenedGraph flat = net.flatten(net.all_layers());
        std::vector<int> dist;
        std::vector<std::uint64_t> sigma;
        for (ActorId s = 0; s < net.actor_count(); ++s) {
            bfs_dist_sigma(flat, s, dist, sigma);
            SourceFronts fronts = single_source_fronts(net, s);
            for (ActorId t = 0; t < net.actor_count(); ++t) {
                if (t == s) continue;
                const ParetoFront& f = fronts.at(t);
                if (dist[t] == -1) {
                    CHECK(f.empty());
                } else {
                    REQUIRE(f.size() == 1);
                    CHECK(f.labels()[0].vector.total() == static_cast<std::uint32_t>(dist[t]));
                    CHECK(f.labels()[0].path_count == sigma[t]);
                }
            }
        }
    }
}

TEST_CASE("fronts match exhaustive enumeration on random networks") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto net = random_network(seed * 977, 2 + seed % 7, 1 + seed % 3, 0.3);
        for (ActorId s = 0; s < net.actor_count(); ++s) {
            SourceFronts fronts = single_source_fronts(net, s);
            for (ActorId t = 0; t < net.actor_count(); ++t) {
                if (t == s) continue;
                CHECK(fronts.at(t) == ParetoFront{brute_force_front(net, s, t)});
            }
        }
    }
}

TEST_CASE("fronts are symmetric on undirected networks") {
    for (std::uint64_t seed = 3; seed <= 12; ++seed) {
        auto net = random_network(seed * 31, 7, 2, 0.3);
        for (ActorId s = 0; s < net.actor_count(); ++s)
            for (ActorId t = s + 1; t < net.actor_count(); ++t)
                CHECK(pareto_front(net, s, t) == pareto_front(net, t, s));
    }
}

TEST_CASE("identical layers reduce every front vector to the BFS distance") {
    auto base = random_network(5, 8, 1, 0.3);
    MultilayerNetwork net;
    for (ActorId a = 0; a < base.actor_count(); ++a) net.add_actor(base.actor_label(a));
    LayerId l0 = net.add_layer("one"), l1 = net.add_layer("two");
    for (ActorId u = 0; u < base.actor_count(); ++u)
        for (ActorId v : base.neighbors(0, u))
            if (u < v) {
                net.add_edge(l0, u, v);
                net.add_edge(l1, u, v);
            }
    FlattenedGraph flat = net.flatten(net.all_layers());
    std::vector<int> dist;
    std::vector<std::uint64_t> sigma;
    for (ActorId s = 0; s < net.actor_count(); ++s) {
        bfs_dist_sigma(flat, s, dist, sigma);
        SourceFronts fronts = single_source_fronts(net, s);
        for (ActorId t = 0; t < net.actor_count(); ++t) {
            if (t == s || dist[t] == -1) continue;
            for (const Label& label : fronts.at(t).labels())
                CHECK(label.vector.total() == static_cast<std::uint32_t>(dist[t]));
        }
    }
}

TEST_CASE("toy path enumeration lists the four efficient paths") {
    auto net = toy_network();
    auto paths = enumerate_efficient_paths(net, 0, 3, 100);
    REQUIRE(paths.size() == 4);
    for (const LayeredPath& p : paths) {
        CHECK(p.nodes.front() == 0);
        CHECK(p.nodes.back() == 3);
        CHECK(p.nodes.size() == 3);
        CHECK(p.steps.size() == 2);
    }
    // equal totals sort lexicographically: (0,2), then the two (1,1), then (2,0)
    CHECK(paths[0].vector(2) == lv({0, 2}));
    CHECK(paths[1].vector(2) == lv({1, 1}));
    CHECK(paths[2].vector(2) == lv({1, 1}));
    CHECK(paths[3].vector(2) == lv({2, 0}));
}

TEST_CASE("path cap errors carry the exceeded count") {
    auto net = toy_network();
    try {
        enumerate_efficient_paths(net, 0, 3, 2);
        FAIL("expected CapExceededError");
    } catch (const CapExceededError& e) {
        CHECK(e.path_count() == 4);
        CHECK(e.code() == errc::path_cap);
    }
}

TEST_CASE("disconnected pairs enumerate nothing") {
    MultilayerNetwork net;
    net.add_actor("A");
    net.add_actor("B");
    net.add_layer("L");
    CHECK(enumerate_efficient_paths(net, 0, 1, 10).empty());
}

TEST_CASE("enumerated paths realize the front exactly") {
    for (std::uint64_t seed = 2; seed <= 20; ++seed) {
        auto net = random_network(seed * 131, 7, 2, 0.35);
        for (ActorId s = 0; s < net.actor_count(); ++s) {
            for (ActorId t = s + 1; t < net.actor_count(); ++t) {
                ParetoFront front = pareto_front(net, s, t);
                auto paths = enumerate_efficient_paths(net, s, t, 1u << 20);
                CHECK(paths.size() == front.total_path_count());
                for (const Label& label : front.labels()) {
                    auto realized = std::count_if(paths.begin(), paths.end(), [&](const auto& p) {
                        return p.vector(net.layer_count()) == label.vector;
                    });
                    CHECK(static_cast<std::uint64_t>(realized) == label.path_count);
                }
                bool all_valid = true, any_dominated = false;
                for (const LayeredPath& p : paths) {
                    // simple, consecutive edges exist in their layers
                    auto nodes = p.nodes;
                    std::sort(nodes.begin(), nodes.end());
                    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
                        all_valid = false;
                    for (std::size_t i = 0; i < p.steps.size(); ++i)
                        if (!net.has_edge(p.steps[i], p.nodes[i], p.nodes[i + 1]))
                            all_valid = false;
                    for (const LayeredPath& q : paths)
                        if (dominates(q.vector(net.layer_count()), p.vector(net.layer_count())))
                            any_dominated = true;
                }
                CHECK(all_valid);
                CHECK_FALSE(any_dominated);
            }
        }
    }
}

}  // TEST_SUITE
