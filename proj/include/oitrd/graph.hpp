#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oitrd {

/// Undirected simple graph on vertices 0..n-1, kept as sorted neighbor lists.
/// Immutable by convention once built through build_graph().
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool has_edge(int u, int v) const {
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& a : adj) twice += static_cast<long long>(a.size());
        return twice / 2;
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph&) const = default;
};

// Builds a graph from an edge list. Duplicate edges collapse; loops and
// out-of-range endpoints are input errors.
inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

struct DegreeProfile {
    std::vector<int> degree;
    int delta = 0;              // minimum degree
    int Delta = 0;              // maximum degree
    std::vector<int> leaves;    // vertices of degree one
    std::vector<int> supports;  // vertices adjacent to a leaf
};

inline DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degree.resize(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) p.degree[static_cast<size_t>(v)] = g.degree(v);
    if (g.n == 0) return p;
    p.delta = *std::min_element(p.degree.begin(), p.degree.end());
    p.Delta = *std::max_element(p.degree.begin(), p.degree.end());
    std::vector<char> is_leaf(static_cast<size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) {
            is_leaf[static_cast<size_t>(v)] = 1;
            p.leaves.push_back(v);
        }
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            if (is_leaf[static_cast<size_t>(w)]) {
                p.supports.push_back(v);
                break;
            }
    return p;
}

enum class SetMode { independent, vertex_cover, dominating, total_dominating, oit_dominating };

inline const char* set_mode_name(SetMode m) {
    switch (m) {
        case SetMode::independent: return "independent";
        case SetMode::vertex_cover: return "vertex_cover";
        case SetMode::dominating: return "dominating";
        case SetMode::total_dominating: return "total_dominating";
        case SetMode::oit_dominating: return "oit_dominating";
    }
    return "?";
}

// Result of a set-predicate check. On failure the witness is the
// lowest-index violating vertex, plus the violating edge where one exists.
struct SetCheck {
    bool holds = true;
    std::optional<int> witness_vertex;
    std::optional<std::pair<int, int>> witness_edge;
};

namespace detail {

inline std::vector<char> member_bitmap(const Graph& g, const std::vector<int>& set) {
    std::vector<char> in(static_cast<size_t>(g.n), 0);
    for (int v : set) {
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        in[static_cast<size_t>(v)] = 1;
    }
    return in;
}

}  // namespace detail

inline SetCheck check_vertex_set(const Graph& g, const std::vector<int>& set, SetMode mode) {
    const auto in = detail::member_bitmap(g, set);
    const auto lowest_internal_edge = [&](auto member) -> SetCheck {
        for (int u = 0; u < g.n; ++u) {
            if (!member(u)) continue;
            for (int w : g.adj[u])
                if (w > u && member(w)) return {false, u, std::pair<int, int>{u, w}};
        }
        return {};
    };
    switch (mode) {
        case SetMode::independent:
            return lowest_internal_edge([&](int v) { return in[static_cast<size_t>(v)] != 0; });
        case SetMode::vertex_cover:
            for (int u = 0; u < g.n; ++u) {
                if (in[static_cast<size_t>(u)]) continue;
                for (int w : g.adj[u])
                    if (w > u && !in[static_cast<size_t>(w)])
                        return {false, u, std::pair<int, int>{u, w}};
            }
            return {};
        case SetMode::dominating:
            for (int v = 0; v < g.n; ++v) {
                if (in[static_cast<size_t>(v)]) continue;
                bool dominated = false;
                for (int w : g.adj[v])
                    if (in[static_cast<size_t>(w)]) {
                        dominated = true;
                        break;
                    }
                if (!dominated) return {false, v, std::nullopt};
            }
            return {};
        case SetMode::total_dominating:
            for (int v = 0; v < g.n; ++v) {
                bool dominated = false;
                for (int w : g.adj[v])
                    if (in[static_cast<size_t>(w)]) {
                        dominated = true;
                        break;
                    }
                if (!dominated) return {false, v, std::nullopt};
            }
            return {};
        case SetMode::oit_dominating: {
            auto total = check_vertex_set(g, set, SetMode::total_dominating);
            if (!total.holds) return total;
            return lowest_internal_edge([&](int v) { return in[static_cast<size_t>(v)] == 0; });
        }
    }
    return {};
}

// First induced K_{1,3}, as {center, leaf, leaf, leaf}; lowest center wins.
inline std::optional<std::array<int, 4>> find_claw(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        const auto& nb = g.adj[v];
        const int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.has_edge(nb[static_cast<size_t>(i)], nb[static_cast<size_t>(j)])) continue;
                for (int k = j + 1; k < d; ++k) {
                    if (g.has_edge(nb[static_cast<size_t>(i)], nb[static_cast<size_t>(k)])) continue;
                    if (g.has_edge(nb[static_cast<size_t>(j)], nb[static_cast<size_t>(k)])) continue;
                    return std::array<int, 4>{v, nb[static_cast<size_t>(i)],
                                              nb[static_cast<size_t>(j)], nb[static_cast<size_t>(k)]};
                }
            }
    }
    return std::nullopt;
}

inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

inline std::vector<int> component_ids(const Graph& g) {
    std::vector<int> id(static_cast<size_t>(g.n), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (id[static_cast<size_t>(s)] != -1) continue;
        id[static_cast<size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adj[v])
                if (id[static_cast<size_t>(w)] == -1) {
                    id[static_cast<size_t>(w)] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return id;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    auto id = component_ids(g);
    return std::all_of(id.begin(), id.end(), [](int c) { return c == 0; });
}

inline std::optional<int> first_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 0) return v;
    return std::nullopt;
}

// K_{1,m} with m >= 1 (K_2 counts as the degenerate star).
inline bool is_star(const Graph& g) {
    if (g.n < 2) return false;
    int centers = 0, leaves = 0;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) == g.n - 1)
            ++centers;
        else if (g.degree(v) == 1)
            ++leaves;
        else
            return false;
    }
    if (g.n == 2) return centers == 2;
    return centers == 1 && leaves == g.n - 1;
}

}  // namespace oitrd
