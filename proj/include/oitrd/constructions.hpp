#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "generators.hpp"
#include "graph.hpp"
#include "labeling.hpp"

namespace oitrd {

/// A constructed labeling together with the closed-form weight it is meant
/// to achieve and the result of re-checking it against the validator.
struct ConstructionOutcome {
    LabeledGraph graph;
    RomanLabeling labeling;
    Variant variant = Variant::OITRDF;
    int claimed_weight = 0;
    ValidationResult checked;
};

struct SetConstructionOutcome {
    LabeledGraph graph;
    std::vector<int> set;
    SetMode mode = SetMode::oit_dominating;
    int claimed_size = 0;
    SetCheck checked;
};

namespace detail {

inline ConstructionOutcome finish_outcome(LabeledGraph lg, std::vector<int> values,
                                          Variant variant, int claimed, bool must_hold) {
    ConstructionOutcome out;
    out.labeling = make_labeling(lg.graph, values);
    out.checked = validate(lg.graph, out.labeling, variant);
    out.variant = variant;
    out.claimed_weight = claimed;
    out.graph = std::move(lg);
    if (must_hold) {
        if (!out.checked.valid)
            throw std::logic_error("constructed labeling failed validation (rule " +
                                   std::string(rule_name(*out.checked.rule)) + ", vertex " +
                                   std::to_string(*out.checked.witness) + ")");
        if (out.labeling.weight() != claimed)
            throw std::logic_error("constructed labeling has weight " +
                                   std::to_string(out.labeling.weight()) + ", expected " +
                                   std::to_string(claimed));
    }
    return out;
}

}  // namespace detail

// ---- closed-form families ------------------------------------------------

inline ConstructionOutcome oitrdf_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete construction requires n >= 2");
    auto lg = gen_complete(n);
    std::vector<int> vals(static_cast<size_t>(n), 1);
    return detail::finish_outcome(std::move(lg), std::move(vals), Variant::OITRDF, n, true);
}

inline ConstructionOutcome oitrdf_complete_bipartite(int r, int s) {
    if (r < 3 || s < r)
        throw std::invalid_argument("bipartite construction requires 3 <= r <= s");
    auto lg = gen_complete_bipartite(r, s);
    std::vector<int> vals(static_cast<size_t>(r + s), 0);
    vals[0] = 2;
    for (int v = 1; v < r; ++v) vals[static_cast<size_t>(v)] = 1;
    vals[static_cast<size_t>(r)] = 1;  // one s-side vertex keeps the r-side non-isolated
    return detail::finish_outcome(std::move(lg), std::move(vals), Variant::OITRDF, r + 2, true);
}

inline ConstructionOutcome oitrdf_wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel construction requires n >= 4");
    auto lg = gen_wheel(n);
    const int m = n - 1;
    std::vector<int> vals(static_cast<size_t>(n), 1);
    vals[static_cast<size_t>(n - 1)] = 2;  // hub
    for (int j = 0; j < m / 2; ++j) vals[static_cast<size_t>(2 * j)] = 0;
    const int claimed = (m + 1) / 2 + 2;
    return detail::finish_outcome(std::move(lg), std::move(vals), Variant::OITRDF, claimed, true);
}

inline ConstructionOutcome oitrdf_closed_family(Family kind,
                                                const std::vector<long long>& params) {
    switch (kind) {
        case Family::complete:
            if (params.size() != 1) throw std::invalid_argument("complete expects one parameter");
            return oitrdf_complete(static_cast<int>(params[0]));
        case Family::complete_bipartite:
            if (params.size() != 2)
                throw std::invalid_argument("complete_bipartite expects two parameters");
            return oitrdf_complete_bipartite(static_cast<int>(params[0]),
                                             static_cast<int>(params[1]));
        case Family::wheel:
            if (params.size() != 1) throw std::invalid_argument("wheel expects one parameter");
            return oitrdf_wheel(static_cast<int>(params[0]));
        default:
            throw std::invalid_argument("no closed-family construction for this kind");
    }
}

// Circulant: zeros every k+1 steps, consecutive zeros paired so that one
// 2-vertex sits within distance k of both members of a pair.
inline ConstructionOutcome oitrdf_circulant(int n, int k) {
    if (k < 2 || k > n / 2)
        throw std::invalid_argument("circulant construction requires 2 <= k <= floor(n/2)");
    auto lg = gen_circulant(n, k);
    const int m = n / (k + 1);
    std::vector<int> vals(static_cast<size_t>(n), 1);
    for (int i = 0; i < m; ++i) vals[static_cast<size_t>(i * (k + 1))] = 0;
    for (int j = 0; 2 * j + 1 < m; ++j) vals[static_cast<size_t>(2 * j * (k + 1) + 1)] = 2;
    if (m % 2 == 1) vals[static_cast<size_t>((m - 1) * (k + 1) + 1)] = 2;
    const int claimed = n - m / 2;
    return detail::finish_outcome(std::move(lg), std::move(vals), Variant::OITRDF, claimed, true);
}

// ---- Sierpinski -----------------------------------------------------------

namespace detail {

using Digits = std::vector<int>;

struct CopyMatching {
    std::vector<std::pair<Digits, Digits>> pairs;
    std::optional<Digits> leftover;
};

// Near-perfect matching of the Sierpinski graph on {0..p-1}^m. For odd p the
// matching covers everything except the extreme vertex (x, x, ..., x).
inline CopyMatching match_copies(int p, int m, int leftover_digit) {
    CopyMatching out;
    if (m == 1) {
        std::vector<int> verts;
        for (int d = 0; d < p; ++d)
            if (p % 2 == 0 || d != leftover_digit) verts.push_back(d);
        for (size_t i = 0; i + 1 < verts.size(); i += 2)
            out.pairs.push_back({{verts[i]}, {verts[i + 1]}});
        if (p % 2 == 1) out.leftover = Digits{leftover_digit};
        return out;
    }
    const auto prefixed = [](int head, const Digits& tail) {
        Digits d;
        d.reserve(tail.size() + 1);
        d.push_back(head);
        d.insert(d.end(), tail.begin(), tail.end());
        return d;
    };
    if (p % 2 == 0) {
        for (int i = 0; i < p; ++i) {
            auto sub = match_copies(p, m - 1, 0);
            for (auto& pr : sub.pairs)
                out.pairs.push_back({prefixed(i, pr.first), prefixed(i, pr.second)});
        }
        return out;
    }
    std::vector<int> others;
    for (int d = 0; d < p; ++d)
        if (d != leftover_digit) others.push_back(d);
    for (size_t i = 0; i + 1 < others.size(); i += 2) {
        const int a = others[i], b = others[i + 1];
        auto sub_a = match_copies(p, m - 1, b);
        auto sub_b = match_copies(p, m - 1, a);
        for (auto& pr : sub_a.pairs)
            out.pairs.push_back({prefixed(a, pr.first), prefixed(a, pr.second)});
        for (auto& pr : sub_b.pairs)
            out.pairs.push_back({prefixed(b, pr.first), prefixed(b, pr.second)});
        // the two per-copy leftovers are exactly the endpoints of the a-b bridge
        out.pairs.push_back({prefixed(a, *sub_a.leftover), prefixed(b, *sub_b.leftover)});
    }
    auto sub = match_copies(p, m - 1, leftover_digit);
    for (auto& pr : sub.pairs)
        out.pairs.push_back(
            {prefixed(leftover_digit, pr.first), prefixed(leftover_digit, pr.second)});
    out.leftover = prefixed(leftover_digit, *sub.leftover);
    return out;
}

// The unique neighbor of a non-extreme Sierpinski vertex outside its clique
// copy: w . a . b^s  <->  w . b . a^s.
inline std::optional<Digits> bridge_partner(const Digits& d) {
    const int n = static_cast<int>(d.size());
    const int last = d[static_cast<size_t>(n - 1)];
    int i = n - 1;
    while (i > 0 && d[static_cast<size_t>(i - 1)] == last) --i;
    if (i == 0) return std::nullopt;
    Digits out(d.begin(), d.begin() + (i - 1));
    out.push_back(last);
    out.insert(out.end(), static_cast<size_t>(n - i), d[static_cast<size_t>(i - 1)]);
    return out;
}

}  // namespace detail

// Builds a minimum-weight outer-independent total Roman labeling of the
// Sierpinski graph: one zero per K_p copy and one 2 per matched pair of
// copies, the 2 sitting on a bridge endpoint so that it covers its own
// copy's zero and the partner copy's zero across the bridge.
inline ConstructionOutcome oitrdf_sierpinski(int p, int n) {
    if (p < 3 || n < 2)
        throw std::invalid_argument("sierpinski construction requires p >= 3, n >= 2");
    auto lg = gen_sierpinski(p, n);
    const auto matching = detail::match_copies(p, n - 1, p - 1);

    std::vector<int> vals(static_cast<size_t>(lg.graph.n), 1);
    const auto index_of = [&](const detail::Digits& d) {
        return static_cast<int>(detail::digits_to_index(d, p));
    };
    std::set<detail::Digits> zeros;
    struct PendingZero {
        detail::Digits copy;
        int two_digit;
    };
    std::vector<PendingZero> pending;

    for (const auto& [X, Y] : matching.pairs) {
        size_t r = 0;
        while (r < X.size() && X[r] == Y[r]) ++r;
        const int a = X[r], b = Y[r];
        detail::Digits u = X, v = Y;
        u.push_back(b);
        v.push_back(a);
        vals[static_cast<size_t>(index_of(u))] = 2;
        vals[static_cast<size_t>(index_of(v))] = 0;
        zeros.insert(v);
        pending.push_back({X, b});
    }
    if (matching.leftover) {
        detail::Digits u = *matching.leftover;
        u.push_back(0);
        vals[static_cast<size_t>(index_of(u))] = 2;
        pending.push_back({*matching.leftover, 0});
    }
    for (const auto& [copy, two_digit] : pending) {
        bool placed = false;
        for (int c = 0; c < p && !placed; ++c) {
            if (c == two_digit) continue;
            detail::Digits z = copy;
            z.push_back(c);
            auto partner = detail::bridge_partner(z);
            if (partner && zeros.count(*partner)) continue;
            vals[static_cast<size_t>(index_of(z))] = 0;
            zeros.insert(z);
            placed = true;
        }
        if (!placed) throw std::logic_error("no admissible zero position in a clique copy");
    }

    long long copies = 1;
    for (int i = 1; i < n; ++i) copies *= p;
    const long long claimed = p * ((copies + 1) / 2) + (p - 1) * (copies / 2);
    if (static_cast<long long>(zeros.size()) != copies)
        throw std::logic_error("sierpinski construction misplaced its zeros");
    return detail::finish_outcome(std::move(lg), std::move(vals), Variant::OITRDF,
                                  static_cast<int>(claimed), true);
}

// ---- products of complete graphs -------------------------------------------

inline ConstructionOutcome oitrdf_product_kk(ProductKind kind, int r, int s) {
    const auto at = [s](int i, int j) { return i * s + j; };
    switch (kind) {
        case ProductKind::cartesian: {
            if (r < 2 || s < r)
                throw std::invalid_argument("cartesian construction requires 2 <= r <= s");
            if (r == 2 && s == 2)
                throw std::domain_error(
                    "cartesian construction excluded at (2,2): the closed form is under probe");
            auto lg = gen_product(kind, r, s);
            std::vector<int> vals(static_cast<size_t>(r * s), 1);
            for (int i = 0; i < r; ++i) vals[static_cast<size_t>(at(i, i))] = 0;
            for (int j = 0; 2 * j + 1 < r; ++j) vals[static_cast<size_t>(at(2 * j + 1, 2 * j))] = 2;
            if (r % 2 == 1) vals[static_cast<size_t>(at(r - 1, r - 2))] = 2;
            return detail::finish_outcome(std::move(lg), std::move(vals), Variant::OITRDF,
                                          r * s - r / 2, true);
        }
        case ProductKind::direct: {
            if (r < 3 || s < r)
                throw std::domain_error(
                    "direct construction requires 3 <= r <= s: at r = 2 the scheme leaves the "
                    "positive rows independent and the closed form is under probe");
            auto lg = gen_product(kind, r, s);
            std::vector<int> vals(static_cast<size_t>(r * s), 1);
            for (int j = 0; j < s; ++j) vals[static_cast<size_t>(at(0, j))] = 0;
            vals[static_cast<size_t>(at(1, 0))] = 2;
            vals[static_cast<size_t>(at(1, 1))] = 2;
            return detail::finish_outcome(std::move(lg), std::move(vals), Variant::OITRDF,
                                          s * (r - 1) + 2, true);
        }
        case ProductKind::strong:
        case ProductKind::lexicographic: {
            if (r < 1 || s < 1 || r * s < 2)
                throw std::invalid_argument("product construction requires order >= 2");
            auto lg = gen_product(kind, r, s);
            std::vector<int> vals(static_cast<size_t>(r * s), 1);
            return detail::finish_outcome(std::move(lg), std::move(vals), Variant::OITRDF, r * s,
                                          true);
        }
    }
    throw std::invalid_argument("unknown product kind");
}

// ---- F_{p,q} certificates ---------------------------------------------------

/// The five witnesses for an F_{p,q} graph, labeled exactly as in the
/// defining case tables. Each outcome carries its own check result; callers
/// decide how to react to an invalid one.
struct FpqCertificates {
    LabeledGraph graph;
    ConstructionOutcome rdf;        // weight 2p + 6q
    ConstructionOutcome trdf;       // weight 3p + 6q
    SetConstructionOutcome toi_set; // size 2p + q + sum(r_i)
    ConstructionOutcome oirdf;      // weight 2p + 2q + 1 + sum(r_i)
    ConstructionOutcome oitrdf;     // weight 3p + 3q + sum(r_i)
};

inline FpqCertificates fpq_certificates(const std::vector<int>& t, const std::vector<int>& r,
                                        const std::vector<int>& rp) {
    const FpqLayout L = fpq_layout(t, r, rp);
    auto lg = gen_fpq(t, r, rp);
    const int p = L.p, q = L.q;
    const int sum_r = std::accumulate(r.begin(), r.end(), 0);

    const auto blank = [&] { return std::vector<int>(static_cast<size_t>(L.order), 0); };
    const auto outcome = [&](std::vector<int> vals, Variant variant, int claimed) {
        return detail::finish_outcome(lg, std::move(vals), variant, claimed, false);
    };

    // Common 2-blocks.
    std::vector<int> centers_xy;  // c_i, x_i, y_i
    for (int i = 0; i < p; ++i) centers_xy.push_back(L.center[static_cast<size_t>(i)]);
    for (int i = 0; i < q; ++i) {
        centers_xy.push_back(L.x[static_cast<size_t>(i)]);
        centers_xy.push_back(L.y[static_cast<size_t>(i)]);
    }
    std::vector<int> rest_rside;  // W: r-side vertices other than x_i, y_i
    for (int i = 0; i < q; ++i)
        for (size_t j = 2; j < L.rside[static_cast<size_t>(i)].size(); ++j)
            rest_rside.push_back(L.rside[static_cast<size_t>(i)][j]);

    FpqCertificates out;

    {
        auto vals = blank();
        for (int v : centers_xy) vals[static_cast<size_t>(v)] = 2;
        for (int i = 0; i < q; ++i) vals[static_cast<size_t>(L.banchor[static_cast<size_t>(i)])] = 2;
        out.rdf = outcome(vals, Variant::RDF, 2 * p + 6 * q);

        for (int i = 0; i < p; ++i) vals[static_cast<size_t>(L.zleaf[static_cast<size_t>(i)])] = 1;
        out.trdf = outcome(vals, Variant::TRDF, 3 * p + 6 * q);
    }
    {
        SetConstructionOutcome s;
        for (int i = 0; i < p; ++i) {
            s.set.push_back(L.center[static_cast<size_t>(i)]);
            s.set.push_back(L.zleaf[static_cast<size_t>(i)]);
        }
        for (int i = 0; i < q; ++i) {
            s.set.push_back(L.banchor[static_cast<size_t>(i)]);
            for (int v : L.rside[static_cast<size_t>(i)]) s.set.push_back(v);
        }
        std::sort(s.set.begin(), s.set.end());
        s.mode = SetMode::oit_dominating;
        s.claimed_size = 2 * p + q + sum_r;
        s.checked = check_vertex_set(lg.graph, s.set, s.mode);
        s.graph = lg;
        out.toi_set = std::move(s);
    }
    {
        auto vals = blank();
        for (int v : centers_xy) vals[static_cast<size_t>(v)] = 2;
        vals[static_cast<size_t>(L.w)] = 1;
        for (int v : rest_rside) vals[static_cast<size_t>(v)] = 1;
        out.oirdf = outcome(vals, Variant::OIRDF, 2 * p + 2 * q + 1 + sum_r);
    }
    {
        auto vals = blank();
        for (int v : centers_xy) vals[static_cast<size_t>(v)] = 2;
        for (int i = 0; i < p; ++i) vals[static_cast<size_t>(L.zleaf[static_cast<size_t>(i)])] = 1;
        for (int i = 0; i < q; ++i) vals[static_cast<size_t>(L.banchor[static_cast<size_t>(i)])] = 1;
        for (int v : rest_rside) vals[static_cast<size_t>(v)] = 1;
        out.oitrdf = outcome(vals, Variant::OITRDF, 3 * p + 3 * q + sum_r);
    }
    out.graph = std::move(lg);
    return out;
}

// ---- set-combination builders ----------------------------------------------

namespace detail {

inline RomanLabeling two_set_labeling(const Graph& g, const std::vector<int>& a,
                                      const std::vector<int>& b) {
    // V_2 = A intersect B, V_1 = symmetric difference, V_0 = the rest.
    std::vector<int> vals(static_cast<size_t>(g.n), 0);
    for (int v : a) ++vals[static_cast<size_t>(v)];
    for (int v : b) ++vals[static_cast<size_t>(v)];
    return make_labeling(g, vals);
}

inline void require_predicate(const Graph& g, const std::vector<int>& set, SetMode mode,
                              const char* who) {
    auto c = check_vertex_set(g, set, mode);
    if (c.holds) return;
    std::string msg = std::string(who) + " is not " + set_mode_name(mode);
    if (c.witness_edge)
        msg += " (edge " + std::to_string(c.witness_edge->first) + "-" +
               std::to_string(c.witness_edge->second) + ")";
    else if (c.witness_vertex)
        msg += " (vertex " + std::to_string(*c.witness_vertex) + ")";
    throw std::invalid_argument(msg);
}

inline RomanLabeling checked_oitrdf(const Graph& g, RomanLabeling f) {
    auto res = validate(g, f, Variant::OITRDF);
    if (!res.valid)
        throw std::logic_error("combined labeling failed validation (rule " +
                               std::string(rule_name(*res.rule)) + ", vertex " +
                               std::to_string(*res.witness) + ")");
    return f;
}

}  // namespace detail

// Vertex cover + total dominating set -> OITRDF of weight |S| + |D|.
inline RomanLabeling combine_cover_total(const Graph& g, const std::vector<int>& cover,
                                         const std::vector<int>& total_dom) {
    detail::require_predicate(g, cover, SetMode::vertex_cover, "S");
    detail::require_predicate(g, total_dom, SetMode::total_dominating, "D");
    return detail::checked_oitrdf(g, detail::two_set_labeling(g, cover, total_dom));
}

// Claw-free, minimum degree >= 3: a vertex cover is itself total dominating,
// so a plain dominating set suffices for the second ingredient.
inline RomanLabeling combine_cover_dominating_clawfree(const Graph& g,
                                                       const std::vector<int>& cover,
                                                       const std::vector<int>& dom) {
    if (auto claw = find_claw(g))
        throw std::domain_error("graph is not claw-free: induced claw at center " +
                                std::to_string((*claw)[0]) + " with leaves " +
                                std::to_string((*claw)[1]) + ", " + std::to_string((*claw)[2]) +
                                ", " + std::to_string((*claw)[3]));
    const auto prof = degree_profile(g);
    if (g.n == 0 || prof.delta < 3)
        throw std::domain_error("claw-free combination requires minimum degree >= 3, got " +
                                std::to_string(prof.delta));
    detail::require_predicate(g, cover, SetMode::vertex_cover, "S");
    detail::require_predicate(g, dom, SetMode::dominating, "D");
    return detail::checked_oitrdf(g, detail::two_set_labeling(g, cover, dom));
}

// Outer-independent total dominating set + dominating set -> OITRDF.
inline RomanLabeling combine_oitd_dominating(const Graph& g, const std::vector<int>& oit_dom,
                                             const std::vector<int>& dom) {
    detail::require_predicate(g, oit_dom, SetMode::oit_dominating, "D");
    detail::require_predicate(g, dom, SetMode::dominating, "S");
    return detail::checked_oitrdf(g, detail::two_set_labeling(g, oit_dom, dom));
}

// Lifts an outer-independent Roman labeling to the total variant with the
// help of a dominating set: keep the 2s, promote (deterministically, lowest
// index first) one zero neighbor of each positive dominator, and promote
// every zero dominator itself.
inline RomanLabeling lift_oirdf(const Graph& g, const RomanLabeling& base,
                                const std::vector<int>& dom) {
    auto base_check = validate(g, base, Variant::OIRDF);
    if (!base_check.valid)
        throw std::invalid_argument("g is not a valid outer-independent Roman labeling (rule " +
                                    std::string(rule_name(*base_check.rule)) + ", vertex " +
                                    std::to_string(*base_check.witness) + ")");
    detail::require_predicate(g, dom, SetMode::dominating, "S");

    std::vector<int> vals(base.values.begin(), base.values.end());
    std::vector<char> in_dom(static_cast<size_t>(g.n), 0);
    for (int v : dom) in_dom[static_cast<size_t>(v)] = 1;
    const auto originally_zero = [&](int v) { return base.values[static_cast<size_t>(v)] == 0; };

    for (int x = 0; x < g.n; ++x) {
        if (!in_dom[static_cast<size_t>(x)] || originally_zero(x)) continue;
        bool served = false;
        int candidate = -1;
        for (int y : g.adj[x]) {
            if (!originally_zero(y)) continue;
            if (vals[static_cast<size_t>(y)] != 0) {
                served = true;  // an earlier promotion already borders x
                break;
            }
            if (candidate == -1) candidate = y;
        }
        if (!served && candidate != -1) vals[static_cast<size_t>(candidate)] = 1;
    }
    for (int x = 0; x < g.n; ++x)
        if (in_dom[static_cast<size_t>(x)] && originally_zero(x)) vals[static_cast<size_t>(x)] = 1;

    return detail::checked_oitrdf(g, make_labeling(g, vals));
}

}  // namespace oitrd
