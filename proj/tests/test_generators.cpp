#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <oitrd/generators.hpp>
#include <oitrd/graph.hpp>

using namespace oitrd;

namespace {

// Independent recursive build: p copies of the previous level plus one
// bridge edge between each pair of copies, used to cross-check the
// digit-comparison generator.
Graph sierpinski_by_copying(int p, int n) {
    Graph g = gen_complete(p).graph;
    long long block = 1;
    for (int level = 2; level <= n; ++level) {
        block = g.n;
        std::vector<std::pair<int, int>> e;
        for (int copy = 0; copy < p; ++copy)
            for (auto [u, v] : g.edge_list())
                e.emplace_back(static_cast<int>(copy * block + u),
                               static_cast<int>(copy * block + v));
        // bridge a..b..b <-> b..a..a, expressed in flat indices
        const auto rep = [&](long long digit) {  // value of digit^(level-1)
            long long acc = 0;
            for (int i = 0; i < level - 1; ++i) acc = acc * p + digit;
            return acc;
        };
        for (int a = 0; a < p; ++a)
            for (int b = a + 1; b < p; ++b)
                e.emplace_back(static_cast<int>(a * block + rep(b)),
                               static_cast<int>(b * block + rep(a)));
        g = build_graph(static_cast<int>(p * block), e);
    }
    return g;
}

}  // namespace

TEST_CASE("basic families") {
    SUBCASE("wheel") {
        auto w = gen_wheel(8);
        CHECK(w.graph.n == 8);
        CHECK(w.graph.degree(7) == 7);
        for (int v = 0; v < 7; ++v) CHECK(w.graph.degree(v) == 3);
        CHECK(w.names[7] == "hub");
    }
    SUBCASE("complete bipartite") {
        auto g = gen_complete_bipartite(3, 5);
        CHECK(g.graph.n == 8);
        CHECK(g.graph.edge_count() == 15);
    }
    SUBCASE("corona") {
        auto g = gen_corona_empty(gen_complete(3).graph, 2);
        CHECK(g.graph.n == 9);
        auto prof = degree_profile(g.graph);
        CHECK(prof.leaves.size() == 6);
        CHECK(prof.supports.size() == 3);
    }
    SUBCASE("parameter minimums") {
        CHECK_THROWS_AS(gen_wheel(3), std::invalid_argument);
        CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
        CHECK_THROWS_AS(gen_corona_empty(gen_complete(3).graph, 0), std::invalid_argument);
    }
}

TEST_CASE("circulants") {
    CHECK(gen_circulant(6, 1).graph == gen_cycle(6).graph);
    auto c92 = gen_circulant(9, 2);
    CHECK(c92.graph.edge_count() == 18);
    for (int v = 0; v < 9; ++v) CHECK(c92.graph.degree(v) == 4);
    CHECK(gen_circulant(8, 4).graph == gen_complete(8).graph);
    CHECK_THROWS_AS(gen_circulant(8, 5), std::invalid_argument);
}

TEST_CASE("sierpinski") {
    CHECK(gen_sierpinski(3, 1).graph == gen_complete(3).graph);
    auto s42 = gen_sierpinski(4, 2);
    CHECK(s42.graph.n == 16);
    CHECK(s42.graph.edge_count() == 30);
    auto s52 = gen_sierpinski(5, 2);
    CHECK(s52.graph.n == 25);
    CHECK(s52.graph.edge_count() == 60);
    CHECK(s42.names[9] == "21");

    SUBCASE("edge count p(p^n - 1)/2") {
        for (int p = 3; p <= 5; ++p)
            for (int n = 1; n <= 3; ++n) {
                long long order = 1;
                for (int i = 0; i < n; ++i) order *= p;
                CHECK(gen_sierpinski(p, n).graph.edge_count() == p * (order - 1) / 2);
            }
    }
    SUBCASE("matches the copy-and-connect construction") {
        CHECK(gen_sierpinski(3, 3).graph == sierpinski_by_copying(3, 3));
        CHECK(gen_sierpinski(4, 2).graph == sierpinski_by_copying(4, 2));
        CHECK(gen_sierpinski(5, 2).graph == sierpinski_by_copying(5, 2));
    }
    CHECK_THROWS_AS(gen_sierpinski(2, 2), std::invalid_argument);
}

TEST_CASE("products of complete graphs") {
    SUBCASE("cartesian 2x2 is the 4-cycle") {
        auto g = gen_product(ProductKind::cartesian, 2, 2).graph;
        CHECK(g.n == 4);
        CHECK(g.edge_count() == 4);
        for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
        CHECK(is_connected(g));
    }
    SUBCASE("direct 2x3 is a 6-cycle") {
        auto g = gen_product(ProductKind::direct, 2, 3).graph;
        CHECK(g.n == 6);
        CHECK(is_connected(g));
        for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
    }
    SUBCASE("strong and lexicographic give complete graphs") {
        auto s = gen_product(ProductKind::strong, 3, 4).graph;
        CHECK(s.edge_count() == 12 * 11 / 2);
        auto l = gen_product(ProductKind::lexicographic, 2, 3).graph;
        CHECK(l.edge_count() == 6 * 5 / 2);
    }
    SUBCASE("names carry coordinates") {
        auto g = gen_product(ProductKind::cartesian, 2, 3);
        CHECK(g.names[5] == "(1,2)");
    }
}

TEST_CASE("fpq family") {
    auto g = gen_fpq({3}, {4}, {8});
    CHECK(g.graph.n == 25);
    auto g2 = gen_fpq({3, 3}, {4, 4}, {8, 8});
    CHECK(g2.graph.n == 49);
    CHECK_THROWS_AS(gen_fpq({2}, {4}, {8}), std::invalid_argument);
    CHECK_THROWS_AS(gen_fpq({3}, {3}, {8}), std::invalid_argument);
    CHECK_THROWS_AS(gen_fpq({3}, {4}, {7}), std::invalid_argument);

    SUBCASE("role names and layout") {
        auto L = fpq_layout({3}, {4}, {8});
        CHECK(g.names[static_cast<size_t>(L.center[0])] == "c1");
        CHECK(g.names[static_cast<size_t>(L.zleaf[0])] == "z1");
        CHECK(g.names[static_cast<size_t>(L.x[0])] == "x1");
        CHECK(g.names[static_cast<size_t>(L.y[0])] == "y1");
        CHECK(g.names[static_cast<size_t>(L.banchor[0])] == "w1");
        CHECK(g.names[static_cast<size_t>(L.w)] == "w");
        CHECK(g.graph.has_edge(L.w, L.zleaf[0]));
        CHECK(g.graph.has_edge(L.w, L.banchor[0]));
        CHECK(g.graph.has_edge(L.x[0], L.banchor[0]));
        CHECK_FALSE(g.graph.has_edge(L.x[0], L.y[0]));
    }
    SUBCASE("names unique") {
        auto names = g2.names;
        std::sort(names.begin(), names.end());
        CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
    }
}

TEST_CASE("generated graphs have no isolated vertices and are deterministic") {
    const std::vector<LabeledGraph> batch = {
        gen_complete(4),          gen_path(5),
        gen_cycle(7),             gen_star(3),
        gen_complete_bipartite(2, 4), gen_wheel(9),
        gen_circulant(10, 3),     gen_sierpinski(3, 2),
        gen_product(ProductKind::cartesian, 3, 3),
        gen_product(ProductKind::direct, 3, 4),
        gen_fpq({4}, {4}, {9}),
    };
    for (const auto& lg : batch) {
        CHECK_FALSE(first_isolated_vertex(lg.graph).has_value());
        CHECK(lg.names.size() == static_cast<size_t>(lg.graph.n));
    }
    CHECK(gen_circulant(10, 3).graph == gen_circulant(10, 3).graph);
    CHECK(gen_fpq({4}, {4}, {9}).graph == gen_fpq({4}, {4}, {9}).graph);
}

TEST_CASE("family spec dispatch") {
    FamilySpec spec{Family::circulant, {9, 2}};
    CHECK(generate(spec).graph == gen_circulant(9, 2).graph);
    CHECK(spec_id(spec) == "circulant_9_2");
    auto fspec = make_fpq_spec({3}, {4}, {8});
    CHECK(generate(fspec).graph == gen_fpq({3}, {4}, {8}).graph);
    CHECK_THROWS_AS(generate(FamilySpec{Family::corona_empty, {2}}), std::invalid_argument);
    CHECK(family_from_name("direct_kk") == Family::direct_kk);
    CHECK_FALSE(family_from_name("nosuch").has_value());
}
