#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace oitrd {

enum class Family {
    complete,
    path,
    cycle,
    star,
    complete_bipartite,
    wheel,
    circulant,
    sierpinski,
    cartesian_kk,
    direct_kk,
    strong_kk,
    lexicographic_kk,
    corona_empty,
    fpq
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::wheel: return "wheel";
        case Family::circulant: return "circulant";
        case Family::sierpinski: return "sierpinski";
        case Family::cartesian_kk: return "cartesian_kk";
        case Family::direct_kk: return "direct_kk";
        case Family::strong_kk: return "strong_kk";
        case Family::lexicographic_kk: return "lexicographic_kk";
        case Family::corona_empty: return "corona_empty";
        case Family::fpq: return "fpq";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
    for (Family f : {Family::complete, Family::path, Family::cycle, Family::star,
                     Family::complete_bipartite, Family::wheel, Family::circulant,
                     Family::sierpinski, Family::cartesian_kk, Family::direct_kk,
                     Family::strong_kk, Family::lexicographic_kk, Family::corona_empty,
                     Family::fpq})
        if (s == family_name(f)) return f;
    return std::nullopt;
}

// Family identifier plus flattened integer parameters.
// fpq flattens as {p, q, t_1..t_p, r_1..r_q, r'_1..r'_q}.
struct FamilySpec {
    Family kind = Family::complete;
    std::vector<long long> params;
};

/// A generated graph together with human-readable vertex names and the
/// family metadata it came from.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> names;
    std::string family;
    std::vector<long long> params;
};

namespace detail {

inline LabeledGraph with_index_names(Graph g, std::string family, std::vector<long long> params) {
    LabeledGraph lg;
    lg.names.reserve(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) lg.names.push_back(std::to_string(v));
    lg.graph = std::move(g);
    lg.family = std::move(family);
    lg.params = std::move(params);
    return lg;
}

}  // namespace detail

inline LabeledGraph gen_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph requires n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return detail::with_index_names(build_graph(n, e), "complete", {n});
}

inline LabeledGraph gen_path(int n) {
    if (n < 2) throw std::invalid_argument("path requires n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return detail::with_index_names(build_graph(n, e), "path", {n});
}

inline LabeledGraph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(n - 1, 0);
    return detail::with_index_names(build_graph(n, e), "cycle", {n});
}

// K_{r,s}; the r-side takes vertices 0..r-1.
inline LabeledGraph gen_complete_bipartite(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("complete bipartite requires r, s >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < r; ++u)
        for (int v = 0; v < s; ++v) e.emplace_back(u, r + v);
    return detail::with_index_names(build_graph(r + s, e), "complete_bipartite", {r, s});
}

// K_{1,s} with the center at vertex 0.
inline LabeledGraph gen_star(int s) {
    if (s < 1) throw std::invalid_argument("star requires at least one leaf");
    auto lg = gen_complete_bipartite(1, s);
    lg.family = "star";
    lg.params = {s};
    return lg;
}

// Wheel of order n: cycle 0..n-2 plus hub n-1 joined to every cycle vertex.
inline LabeledGraph gen_wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel requires n >= 4");
    const int m = n - 1;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < m; ++v) {
        e.emplace_back(v, (v + 1) % m);
        e.emplace_back(v, n - 1);
    }
    auto lg = detail::with_index_names(build_graph(n, e), "wheel", {n});
    lg.names[static_cast<size_t>(n - 1)] = "hub";
    return lg;
}

// Corona with empty graphs: attaches r new pendant leaves to every vertex
// of the base. Base vertices keep their indices; the leaves of base vertex i
// are b + i*r .. b + i*r + r - 1.
inline LabeledGraph gen_corona_empty(const Graph& base, int r) {
    if (base.n < 1) throw std::invalid_argument("corona base must be non-empty");
    if (r < 1) throw std::invalid_argument("corona requires r >= 1");
    const int b = base.n;
    std::vector<std::pair<int, int>> e = base.edge_list();
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < r; ++j) e.emplace_back(i, b + i * r + j);
    LabeledGraph lg;
    lg.graph = build_graph(b + b * r, e);
    for (int v = 0; v < b; ++v) lg.names.push_back(std::to_string(v));
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < r; ++j)
            lg.names.push_back(std::to_string(i) + "_l" + std::to_string(j + 1));
    lg.family = "corona_empty";
    lg.params = {base.n, r};
    return lg;
}

// Circulant C(n,k): vertex i adjacent to i +- j (mod n) for j = 1..k.
inline LabeledGraph gen_circulant(int n, int k) {
    if (n < 3) throw std::invalid_argument("circulant requires n >= 3");
    if (k < 1 || k > n / 2)
        throw std::invalid_argument("circulant requires 1 <= k <= floor(n/2)");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= k; ++j) {
            int w = (i + j) % n;
            if (i < w)
                e.emplace_back(i, w);
            else
                e.emplace_back(w, i);
        }
    return detail::with_index_names(build_graph(n, e), "circulant", {n, k});
}

namespace detail {

inline long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > 2'000'000) throw std::invalid_argument("graph order too large for generation");
    }
    return r;
}

inline std::vector<int> base_p_digits(long long v, int p, int n) {
    std::vector<int> d(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        d[static_cast<size_t>(i)] = static_cast<int>(v % p);
        v /= p;
    }
    return d;
}

inline long long digits_to_index(const std::vector<int>& d, int p) {
    long long v = 0;
    for (int x : d) v = v * p + x;
    return v;
}

}  // namespace detail

// Sierpinski graph: vertex set {0..p-1}^n, with u = (i_1..i_n) adjacent to
// v = (j_1..j_n) exactly when, for some position r, the prefixes agree,
// i_r != j_r, and the tails satisfy i_t = j_r, j_t = i_r for all t > r.
// Vertex index is the base-p value of its digit string.
inline LabeledGraph gen_sierpinski(int p, int n) {
    if (p < 3) throw std::invalid_argument("sierpinski requires p >= 3");
    if (n < 1) throw std::invalid_argument("sierpinski requires n >= 1");
    const long long order = detail::ipow(p, n);
    if (order > 5000) throw std::invalid_argument("sierpinski order too large for desk-scale use");
    std::vector<std::vector<int>> digs(static_cast<size_t>(order));
    for (long long v = 0; v < order; ++v) digs[static_cast<size_t>(v)] = detail::base_p_digits(v, p, n);

    const auto adjacent = [&](const std::vector<int>& a, const std::vector<int>& b) {
        int r = 0;
        while (r < n && a[static_cast<size_t>(r)] == b[static_cast<size_t>(r)]) ++r;
        if (r == n) return false;
        for (int t = r + 1; t < n; ++t) {
            if (a[static_cast<size_t>(t)] != b[static_cast<size_t>(r)]) return false;
            if (b[static_cast<size_t>(t)] != a[static_cast<size_t>(r)]) return false;
        }
        return true;
    };

    std::vector<std::pair<int, int>> e;
    for (long long u = 0; u < order; ++u)
        for (long long v = u + 1; v < order; ++v)
            if (adjacent(digs[static_cast<size_t>(u)], digs[static_cast<size_t>(v)]))
                e.emplace_back(static_cast<int>(u), static_cast<int>(v));

    LabeledGraph lg;
    lg.graph = build_graph(static_cast<int>(order), e);
    lg.names.reserve(static_cast<size_t>(order));
    for (long long v = 0; v < order; ++v) {
        std::string s;
        for (int d : digs[static_cast<size_t>(v)]) s.push_back(static_cast<char>('0' + d));
        lg.names.push_back(s);
    }
    lg.family = "sierpinski";
    lg.params = {p, n};
    return lg;
}

enum class ProductKind { cartesian, direct, strong, lexicographic };

inline const char* product_name(ProductKind k) {
    switch (k) {
        case ProductKind::cartesian: return "cartesian_kk";
        case ProductKind::direct: return "direct_kk";
        case ProductKind::strong: return "strong_kk";
        case ProductKind::lexicographic: return "lexicographic_kk";
    }
    return "?";
}

// Product of complete graphs K_r and K_s; vertex (i,j) has index i*s + j.
inline LabeledGraph gen_product(ProductKind kind, int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("product factors must be positive");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j)
            for (int i2 = 0; i2 < r; ++i2)
                for (int j2 = 0; j2 < s; ++j2) {
                    int a = i * s + j, b = i2 * s + j2;
                    if (a >= b) continue;
                    const bool rows_differ = i != i2, cols_differ = j != j2;
                    bool adj = false;
                    switch (kind) {
                        case ProductKind::cartesian:
                            adj = (rows_differ && !cols_differ) || (!rows_differ && cols_differ);
                            break;
                        case ProductKind::direct:
                            adj = rows_differ && cols_differ;
                            break;
                        case ProductKind::strong:
                            adj = rows_differ || cols_differ;  // a != b already
                            break;
                        case ProductKind::lexicographic:
                            adj = rows_differ || (!rows_differ && cols_differ);
                            break;
                    }
                    if (adj) e.emplace_back(a, b);
                }
    LabeledGraph lg;
    lg.graph = build_graph(r * s, e);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j)
            lg.names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    lg.family = product_name(kind);
    lg.params = {r, s};
    return lg;
}

// Role map for an F_{p,q} graph: p stars S_{1,t_i} with centers c_i, q
// complete bipartite blocks K_{r_i, r'_i} with r_i pendants hung on the two
// r-side vertices x_i and y_i, and a gate vertex w joined to one leaf z_i of
// every star and to one r'-side vertex w_i of every block.
struct FpqLayout {
    int p = 0, q = 0;
    std::vector<int> t, r, rp;
    std::vector<int> center;                // c_i
    std::vector<int> zleaf;                 // z_i, the leaf joined to w
    std::vector<std::vector<int>> leaves;   // all leaves of star i (z_i first)
    std::vector<int> x, y;                  // pendant-carrying r-side vertices
    std::vector<std::vector<int>> rside;    // x_i, y_i, remaining r-side
    std::vector<int> banchor;               // w_i, the r'-side vertex joined to w
    std::vector<std::vector<int>> rpside;   // w_i first, then the rest
    std::vector<std::vector<int>> xpend, ypend;
    int w = -1;
    int order = 0;
};

inline FpqLayout fpq_layout(const std::vector<int>& t, const std::vector<int>& r,
                            const std::vector<int>& rp) {
    if (t.empty()) throw std::invalid_argument("fpq requires p >= 1 stars");
    if (r.empty() || r.size() != rp.size())
        throw std::invalid_argument("fpq requires q >= 1 bipartite blocks with matching r, r' lists");
    FpqLayout L;
    L.p = static_cast<int>(t.size());
    L.q = static_cast<int>(r.size());
    L.t = t;
    L.r = r;
    L.rp = rp;
    for (int i = 0; i < L.p; ++i)
        if (t[static_cast<size_t>(i)] < 3)
            throw std::invalid_argument("fpq: star " + std::to_string(i + 1) + " needs t >= 3");
    for (int i = 0; i < L.q; ++i) {
        if (r[static_cast<size_t>(i)] < 4)
            throw std::invalid_argument("fpq: block " + std::to_string(i + 1) + " needs r >= 4");
        if (2 * r[static_cast<size_t>(i)] > rp[static_cast<size_t>(i)])
            throw std::invalid_argument("fpq: block " + std::to_string(i + 1) +
                                        " needs r <= r'/2");
    }
    int next = 0;
    for (int i = 0; i < L.p; ++i) {
        L.center.push_back(next++);
        std::vector<int> lv;
        for (int j = 0; j < t[static_cast<size_t>(i)]; ++j) lv.push_back(next++);
        L.zleaf.push_back(lv.front());
        L.leaves.push_back(std::move(lv));
    }
    for (int i = 0; i < L.q; ++i) {
        std::vector<int> rs, rps, xp, yp;
        for (int j = 0; j < r[static_cast<size_t>(i)]; ++j) rs.push_back(next++);
        for (int j = 0; j < rp[static_cast<size_t>(i)]; ++j) rps.push_back(next++);
        for (int j = 0; j < r[static_cast<size_t>(i)]; ++j) xp.push_back(next++);
        for (int j = 0; j < r[static_cast<size_t>(i)]; ++j) yp.push_back(next++);
        L.x.push_back(rs[0]);
        L.y.push_back(rs[1]);
        L.banchor.push_back(rps[0]);
        L.rside.push_back(std::move(rs));
        L.rpside.push_back(std::move(rps));
        L.xpend.push_back(std::move(xp));
        L.ypend.push_back(std::move(yp));
    }
    L.w = next++;
    L.order = next;
    return L;
}

inline LabeledGraph gen_fpq(const std::vector<int>& t, const std::vector<int>& r,
                            const std::vector<int>& rp) {
    const FpqLayout L = fpq_layout(t, r, rp);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < L.p; ++i) {
        for (int lv : L.leaves[static_cast<size_t>(i)])
            e.emplace_back(L.center[static_cast<size_t>(i)], lv);
        e.emplace_back(L.w, L.zleaf[static_cast<size_t>(i)]);
    }
    for (int i = 0; i < L.q; ++i) {
        for (int a : L.rside[static_cast<size_t>(i)])
            for (int b : L.rpside[static_cast<size_t>(i)]) e.emplace_back(a, b);
        for (int j = 0; j < L.r[static_cast<size_t>(i)]; ++j) {
            e.emplace_back(L.x[static_cast<size_t>(i)], L.xpend[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            e.emplace_back(L.y[static_cast<size_t>(i)], L.ypend[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        e.emplace_back(L.w, L.banchor[static_cast<size_t>(i)]);
    }
    LabeledGraph lg;
    lg.graph = build_graph(L.order, e);
    lg.names.assign(static_cast<size_t>(L.order), {});
    for (int i = 0; i < L.p; ++i) {
        const std::string si = std::to_string(i + 1);
        lg.names[static_cast<size_t>(L.center[static_cast<size_t>(i)])] = "c" + si;
        const auto& lv = L.leaves[static_cast<size_t>(i)];
        lg.names[static_cast<size_t>(lv[0])] = "z" + si;
        for (size_t j = 1; j < lv.size(); ++j)
            lg.names[static_cast<size_t>(lv[j])] = "u" + si + "_" + std::to_string(j + 1);
    }
    for (int i = 0; i < L.q; ++i) {
        const std::string si = std::to_string(i + 1);
        const auto& rs = L.rside[static_cast<size_t>(i)];
        lg.names[static_cast<size_t>(rs[0])] = "x" + si;
        lg.names[static_cast<size_t>(rs[1])] = "y" + si;
        for (size_t j = 2; j < rs.size(); ++j)
            lg.names[static_cast<size_t>(rs[j])] = "a" + si + "_" + std::to_string(j + 1);
        const auto& rps = L.rpside[static_cast<size_t>(i)];
        lg.names[static_cast<size_t>(rps[0])] = "w" + si;
        for (size_t j = 1; j < rps.size(); ++j)
            lg.names[static_cast<size_t>(rps[j])] = "b" + si + "_" + std::to_string(j + 1);
        for (size_t j = 0; j < L.xpend[static_cast<size_t>(i)].size(); ++j)
            lg.names[static_cast<size_t>(L.xpend[static_cast<size_t>(i)][j])] =
                "px" + si + "_" + std::to_string(j + 1);
        for (size_t j = 0; j < L.ypend[static_cast<size_t>(i)].size(); ++j)
            lg.names[static_cast<size_t>(L.ypend[static_cast<size_t>(i)][j])] =
                "py" + si + "_" + std::to_string(j + 1);
    }
    lg.names[static_cast<size_t>(L.w)] = "w";
    lg.family = "fpq";
    lg.params.push_back(L.p);
    lg.params.push_back(L.q);
    for (int v : t) lg.params.push_back(v);
    for (int v : r) lg.params.push_back(v);
    for (int v : rp) lg.params.push_back(v);
    return lg;
}

// Unpacks the flattened fpq parameter vector {p, q, t..., r..., rp...}.
inline void unpack_fpq_params(const std::vector<long long>& params, std::vector<int>& t,
                              std::vector<int>& r, std::vector<int>& rp) {
    if (params.size() < 2) throw std::invalid_argument("fpq spec needs p and q");
    const auto p = static_cast<size_t>(params[0]);
    const auto q = static_cast<size_t>(params[1]);
    if (params.size() != 2 + p + 2 * q)
        throw std::invalid_argument("fpq spec has wrong parameter count");
    t.clear();
    r.clear();
    rp.clear();
    for (size_t i = 0; i < p; ++i) t.push_back(static_cast<int>(params[2 + i]));
    for (size_t i = 0; i < q; ++i) r.push_back(static_cast<int>(params[2 + p + i]));
    for (size_t i = 0; i < q; ++i) rp.push_back(static_cast<int>(params[2 + p + q + i]));
}

inline FamilySpec make_fpq_spec(const std::vector<int>& t, const std::vector<int>& r,
                                const std::vector<int>& rp) {
    FamilySpec spec;
    spec.kind = Family::fpq;
    spec.params.push_back(static_cast<long long>(t.size()));
    spec.params.push_back(static_cast<long long>(r.size()));
    for (int v : t) spec.params.push_back(v);
    for (int v : r) spec.params.push_back(v);
    for (int v : rp) spec.params.push_back(v);
    return spec;
}

// Dispatch on a FamilySpec. corona_empty is not constructible here because
// it needs a base graph; callers assemble it via gen_corona_empty directly.
inline LabeledGraph generate(const FamilySpec& spec) {
    const auto& q = spec.params;
    const auto need = [&](size_t k) {
        if (q.size() != k)
            throw std::invalid_argument(std::string(family_name(spec.kind)) + " expects " +
                                        std::to_string(k) + " parameters");
    };
    switch (spec.kind) {
        case Family::complete: need(1); return gen_complete(static_cast<int>(q[0]));
        case Family::path: need(1); return gen_path(static_cast<int>(q[0]));
        case Family::cycle: need(1); return gen_cycle(static_cast<int>(q[0]));
        case Family::star: need(1); return gen_star(static_cast<int>(q[0]));
        case Family::complete_bipartite:
            need(2);
            return gen_complete_bipartite(static_cast<int>(q[0]), static_cast<int>(q[1]));
        case Family::wheel: need(1); return gen_wheel(static_cast<int>(q[0]));
        case Family::circulant:
            need(2);
            return gen_circulant(static_cast<int>(q[0]), static_cast<int>(q[1]));
        case Family::sierpinski:
            need(2);
            return gen_sierpinski(static_cast<int>(q[0]), static_cast<int>(q[1]));
        case Family::cartesian_kk:
            need(2);
            return gen_product(ProductKind::cartesian, static_cast<int>(q[0]), static_cast<int>(q[1]));
        case Family::direct_kk:
            need(2);
            return gen_product(ProductKind::direct, static_cast<int>(q[0]), static_cast<int>(q[1]));
        case Family::strong_kk:
            need(2);
            return gen_product(ProductKind::strong, static_cast<int>(q[0]), static_cast<int>(q[1]));
        case Family::lexicographic_kk:
            need(2);
            return gen_product(ProductKind::lexicographic, static_cast<int>(q[0]), static_cast<int>(q[1]));
        case Family::corona_empty:
            throw std::invalid_argument("corona_empty needs an explicit base graph");
        case Family::fpq: {
            std::vector<int> t, r, rp;
            unpack_fpq_params(q, t, r, rp);
            return gen_fpq(t, r, rp);
        }
    }
    throw std::invalid_argument("unknown family");
}

inline std::string spec_id(const FamilySpec& spec) {
    std::string s = family_name(spec.kind);
    for (long long v : spec.params) s += "_" + std::to_string(v);
    return s;
}

}  // namespace oitrd
