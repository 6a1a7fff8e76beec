#include <doctest.h>

#include <algorithm>

#include "mlnet/core.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace mlnet;
using mlnet::testing::random_network;

TEST_SUITE("core") {

TEST_CASE("ratio rounds half-up at two decimals") {
    CHECK(Ratio{388, 60}.str2() == "6.47");
    CHECK(Ratio{176, 47}.str2() == "3.74");
    CHECK(Ratio{42, 25}.str2() == "1.68");
    CHECK(Ratio{386, 60}.str2() == "6.43");
    CHECK(Ratio{248, 32}.str2() == "7.75");
    CHECK(Ratio{706, 61}.str2() == "11.57");
    CHECK(Ratio{1, 200}.str2() == "0.01");   // 0.005 rounds up
    CHECK(Ratio{3, 200}.str2() == "0.02");   // 0.015 rounds up
    CHECK(Ratio{1, 3}.str2() == "0.33");
    CHECK(Ratio{2, 3}.str2() == "0.67");
    CHECK(Ratio{0, 1}.str2() == "0.00");
    CHECK(Ratio{1, 1}.str2() == "1.00");
}

TEST_CASE("ratio comparison is exact") {
    CHECK(ratio_less(Ratio{1, 3}, Ratio{1, 2}));
    CHECK_FALSE(ratio_less(Ratio{1, 2}, Ratio{1, 3}));
    CHECK_FALSE(ratio_less(Ratio{2, 4}, Ratio{1, 2}));
    CHECK(Ratio{2, 4} == Ratio{1, 2});
}

TEST_CASE("layer set ordering is cardinality then lexicographic") {
    LayerSet a = LayerSet::of({0, 1});
    LayerSet b = LayerSet::of({0, 2});
    LayerSet c = LayerSet::of({1, 2});
    LayerSet s = LayerSet::of({2});
    CHECK(lex_less(a, b));
    CHECK(lex_less(b, c));
    CHECK(combo_order_less(s, a));        // smaller cardinality first
    CHECK(combo_order_less(a, b));
    CHECK_FALSE(combo_order_less(b, a));
    CHECK(LayerSet::all(3).size() == 3);
}

TEST_CASE("adding an edge twice changes nothing") {
    MultilayerNetwork net;
    ActorId a = net.add_actor("A"), b = net.add_actor("B");
    LayerId work = net.add_layer("Work");
    net.add_edge(work, a, b);
    CHECK(net.edge_count(work) == 1);
    net.add_edge(work, a, b);
    net.add_edge(work, b, a);
    CHECK(net.edge_count(work) == 1);
    CHECK(net.has_edge(work, a, b));
    CHECK(net.has_edge(work, b, a));
}

TEST_CASE("self-loops and unknown ids are rejected") {
    MultilayerNetwork net;
    ActorId a = net.add_actor("A");
    net.add_actor("B");
    LayerId work = net.add_layer("Work");
    CHECK_THROWS_WITH_AS(net.add_edge(work, a, a), doctest::Contains("self-loop"), Error);
    try {
        net.add_edge(work, a, a);
    } catch (const Error& e) {
        CHECK(e.code() == errc::self_loop);
    }
    CHECK_THROWS_AS(net.add_edge(work, a, 77), Error);
    CHECK_THROWS_AS(net.add_edge(9, a, 1), Error);
}

TEST_CASE("layer cap is enforced") {
    MultilayerNetwork net(2);
    net.add_layer("one");
    net.add_layer("two");
    CHECK_THROWS_AS(net.add_layer("three"), Error);
    CHECK(net.add_layer("two") == 1);  // existing layer is fine
}

TEST_CASE("flattening a singleton equals the layer") {
    auto net = testing::toy_network();
    FlattenedGraph flat = net.flatten(LayerSet::of({0}));
    CHECK(flat.edge_count() == net.edge_count(0));
    for (ActorId a = 0; a < net.actor_count(); ++a)
        CHECK(flat.neighbors(a) == net.neighbors(0, a));
}

TEST_CASE("flattening two layers that share every edge keeps their count") {
    MultilayerNetwork net;
    ActorId a = net.add_actor("A"), b = net.add_actor("B"), c = net.add_actor("C");
    LayerId one = net.add_layer("one"), two = net.add_layer("two");
    net.add_edge(one, a, b);
    net.add_edge(one, b, c);
    net.add_edge(two, a, b);
    net.add_edge(two, b, c);
    CHECK(net.flatten(LayerSet::of({one, two})).edge_count() == net.edge_count(one));
}

TEST_CASE("flatten rejects the empty combination") {
    auto net = testing::toy_network();
    CHECK_THROWS_AS(net.flatten(LayerSet{}), Error);
}

TEST_CASE("flatten distributes over union") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto net = random_network(seed, 7, 3, 0.3);
        LayerSet s = LayerSet::of({0, 1});
        LayerSet t = LayerSet::of({1, 2});
        LayerSet both = LayerSet::of({0, 1, 2});
        auto es = net.flatten(s).edges();
        auto et = net.flatten(t).edges();
        std::vector<std::pair<ActorId, ActorId>> merged;
        std::set_union(es.begin(), es.end(), et.begin(), et.end(), std::back_inserter(merged));
        CHECK(net.flatten(both).edges() == merged);
    }
}

TEST_CASE("degree sums are twice the edge count in every layer") {
    auto net = random_network(99, 9, 3, 0.25);
    for (LayerId l = 0; l < net.layer_count(); ++l) {
        std::size_t degree_sum = 0;
        for (ActorId a = 0; a < net.actor_count(); ++a) {
            degree_sum += net.degree(l, a);
            for (ActorId b : net.neighbors(l, a)) {
                const auto& back = net.neighbors(l, b);
                CHECK(std::binary_search(back.begin(), back.end(), a));
            }
        }
        CHECK(degree_sum == 2 * net.edge_count(l));
    }
}

TEST_CASE("layer stats on small graphs") {
    MultilayerNetwork net;
    ActorId a = net.add_actor("A"), b = net.add_actor("B");
    net.add_actor("C");
    LayerId l = net.add_layer("L");
    LayerId empty = net.add_layer("E");

    net.add_edge(l, a, b);
    LayerStats s = layer_stats(net, l);
    CHECK(s.edge_count == 1);
    CHECK(s.component_count == 1);
    CHECK(s.active_actor_count == 2);
    CHECK(s.avg_degree_active == Ratio{1, 1});

    LayerStats e = layer_stats(net, empty);
    CHECK(e.edge_count == 0);
    CHECK(e.component_count == 0);
    CHECK(e.active_actor_count == 0);
    CHECK(e.avg_degree_active == Ratio{0, 1});
}

TEST_CASE("flatten stats of a single edge") {
    MultilayerNetwork net;
    ActorId a = net.add_actor("A"), b = net.add_actor("B");
    LayerId l = net.add_layer("L");
    net.add_edge(l, a, b);
    FlatStats s = flatten_stats(net, LayerSet::of({0}));
    CHECK(s.actor_count == 2);
    CHECK(s.edge_count == 1);
    CHECK(s.avg_degree_all == Ratio{1, 1});
    CHECK(s.diameter == 1);
    CHECK(s.component_count == 1);
}

TEST_CASE("flatten stats edge count matches layer stats on singletons") {
    auto net = random_network(7, 8, 3, 0.3);
    for (LayerId l = 0; l < net.layer_count(); ++l)
        CHECK(flatten_stats(net, LayerSet::of({l})).edge_count == layer_stats(net, l).edge_count);
}

TEST_CASE("connected components partition every actor deterministically") {
    MultilayerNetwork net;
    for (const char* label : {"A", "B", "C", "D", "E"}) net.add_actor(label);
    LayerId l = net.add_layer("L");

    auto comps = connected_components(net.flatten(LayerSet::of({0})));
    CHECK(comps.size() == 5);  // edgeless: all singletons

    net.add_edge(l, 1, 3);
    net.add_edge(l, 3, 4);
    comps = connected_components(net.flatten(LayerSet::of({0})));
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<ActorId>{0});
    CHECK(comps[1] == std::vector<ActorId>{1, 3, 4});
    CHECK(comps[2] == std::vector<ActorId>{2});
}

TEST_CASE("path components count as one") {
    MultilayerNetwork net;
    ActorId a = net.add_actor("A"), b = net.add_actor("B"), c = net.add_actor("C");
    LayerId l = net.add_layer("L");
    net.add_edge(l, a, b);
    net.add_edge(l, b, c);
    CHECK(connected_components(net.flatten(LayerSet::of({0}))).size() == 1);
    CHECK(layer_stats(net, l).component_count == 1);
}

}  // TEST_SUITE
