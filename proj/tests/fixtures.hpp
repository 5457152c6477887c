#pragma once

#include <utility>
#include <vector>

#include <oitrd/graph.hpp>

namespace fixtures {

// Three high-degree hubs strung between four columns of four vertices each.
// Columns: a = 0..3, b = 4..7, c = 8..11, d = 12..15; hubs ab = 16, bc = 17,
// cd = 18. Hub ab joins every a- and b-vertex, and so on down the chain.
inline oitrd::Graph hub_chain_graph() {
    std::vector<std::pair<int, int>> e;
    const int ab = 16, bc = 17, cd = 18;
    for (int i = 0; i < 4; ++i) {
        e.emplace_back(0 + i, ab);
        e.emplace_back(4 + i, ab);
        e.emplace_back(4 + i, bc);
        e.emplace_back(8 + i, bc);
        e.emplace_back(8 + i, cd);
        e.emplace_back(12 + i, cd);
    }
    return oitrd::build_graph(19, e);
}

inline constexpr int hub_ab = 16;
inline constexpr int hub_bc = 17;
inline constexpr int hub_cd = 18;

// Two disjoint triangles.
inline oitrd::Graph two_triangles() {
    return oitrd::build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

}  // namespace fixtures
