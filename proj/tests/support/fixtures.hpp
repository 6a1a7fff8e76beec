#pragma once

#include "mlnet/core.hpp"

namespace mlnet::testing {

/// The four-actor, two-layer example: A-B on FB, A-C on Lunch, and B-D,
/// C-D on both. Layer ids: FB = 0, Lunch = 1.
inline MultilayerNetwork toy_network() {
    MultilayerNetwork net;
    ActorId a = net.add_actor("A"), b = net.add_actor("B");
    ActorId c = net.add_actor("C"), d = net.add_actor("D");
    LayerId fb = net.add_layer("FB"), lunch = net.add_layer("Lunch");
    net.add_edge(fb, a, b);
    net.add_edge(fb, b, d);
    net.add_edge(fb, c, d);
    net.add_edge(lunch, a, c);
    net.add_edge(lunch, b, d);
    net.add_edge(lunch, c, d);
    return net;
}

}  // namespace mlnet::testing
