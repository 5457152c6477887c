#pragma once

#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "labeling.hpp"

namespace oitrd {

struct SolverTimeout : std::runtime_error {
    SolverTimeout() : std::runtime_error("solver budget exhausted") {}
};

// Wall-clock budget checked at branch boundaries. A timed-out computation
// throws SolverTimeout; callers that tolerate partial results catch it.
struct Budget {
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static Budget unlimited() { return {}; }
    static Budget from_ms(long long ms) {
        Budget b;
        b.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        return b;
    }
    bool expired() const {
        return deadline && std::chrono::steady_clock::now() >= *deadline;
    }
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }
inline int popcnt(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

// Bitset adjacency view; exact solvers are capped at 64 vertices.
struct MaskGraph {
    int n = 0;
    std::vector<Mask> open;    // N(v)
    std::vector<Mask> closed;  // N[v]
    Mask all = 0;

    explicit MaskGraph(const Graph& g) {
        if (g.n > 64)
            throw std::invalid_argument("exact solvers handle at most 64 vertices, got " +
                                        std::to_string(g.n));
        n = g.n;
        all = full_mask(n);
        open.assign(static_cast<size_t>(n), 0);
        closed.assign(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            for (int w : g.adj[v]) open[static_cast<size_t>(v)] |= bit(w);
            closed[static_cast<size_t>(v)] = open[static_cast<size_t>(v)] | bit(v);
        }
    }
};

struct Ticker {
    const Budget* budget = nullptr;
    std::uint32_t count = 0;
    void tick() {
        if ((++count & 0xFFFu) == 0 && budget && budget->expired()) throw SolverTimeout{};
    }
};

inline std::vector<int> mask_to_set(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(lowest(m));
        m &= m - 1;
    }
    return out;
}

// Maximum independent set by plain branch and bound: take the lowest
// candidate vertex or discard it, pruning on |current| + |candidates|.
struct MisSolver {
    const MaskGraph& mg;
    Ticker ticker;
    int best = -1;
    Mask best_set = 0;

    MisSolver(const MaskGraph& m, const Budget& b) : mg(m) { ticker.budget = &b; }

    void run(Mask cand, Mask cur) {
        ticker.tick();
        if (!cand) {
            const int sz = popcnt(cur);
            if (sz > best) {
                best = sz;
                best_set = cur;
            }
            return;
        }
        if (popcnt(cur) + popcnt(cand) <= best) return;
        const int v = lowest(cand);
        run(cand & ~mg.closed[static_cast<size_t>(v)], cur | bit(v));
        run(cand & ~bit(v), cur);
    }
};

inline std::pair<int, Mask> max_independent_mask(const MaskGraph& mg, const Budget& budget) {
    MisSolver s(mg, budget);
    s.run(mg.all, 0);
    return {s.best, s.best_set};
}

// Minimum hitting set: find the smallest vertex set meeting every element
// mask. Branches over the candidates of the scarcest unhit element, with a
// disjoint-packing lower bound. Returns nothing if no solution beats `ub`.
struct HittingSolver {
    const std::vector<Mask>& elems;
    Ticker ticker;
    int best;  // strictly-better target
    Mask best_set = 0;
    bool found = false;

    HittingSolver(const std::vector<Mask>& e, int ub, const Budget& b) : elems(e), best(ub) {
        ticker.budget = &b;
    }

    void run(Mask cur, int size, Mask forbidden) {
        ticker.tick();
        int pick = -1;
        int pick_count = INT_MAX;
        Mask pack_used = 0;
        int packing = 0;
        for (size_t i = 0; i < elems.size(); ++i) {
            const Mask e = elems[i];
            if (e & cur) continue;
            const Mask allowed = e & ~forbidden;
            if (!allowed) return;
            const int c = popcnt(allowed);
            if (c < pick_count) {
                pick_count = c;
                pick = static_cast<int>(i);
            }
            if (!(allowed & pack_used)) {
                ++packing;
                pack_used |= allowed;
            }
        }
        if (pick == -1) {
            found = true;
            best = size;
            best_set = cur;
            return;
        }
        if (size + packing >= best) return;
        Mask cands = elems[static_cast<size_t>(pick)] & ~forbidden;
        Mask forb = forbidden;
        while (cands) {
            const int c = lowest(cands);
            cands &= cands - 1;
            run(cur | bit(c), size + 1, forb);
            forb |= bit(c);
            if (size + 1 >= best) return;  // deeper picks cannot improve
        }
    }
};

inline std::optional<std::pair<int, Mask>> min_hitting(const std::vector<Mask>& elems, int ub,
                                                       const Budget& budget) {
    if (ub <= 0) return std::nullopt;
    for (const Mask e : elems)
        if (!e) return std::nullopt;  // unhittable element
    HittingSolver s(elems, ub, budget);
    s.run(0, 0, 0);
    if (!s.found) return std::nullopt;
    return std::make_pair(s.best, s.best_set);
}

}  // namespace detail

enum class SetParam {
    max_independent,
    min_cover,
    min_dominating,
    min_total_dominating,
    min_oit_dominating
};

inline const char* set_param_name(SetParam p) {
    switch (p) {
        case SetParam::max_independent: return "max_independent";
        case SetParam::min_cover: return "min_cover";
        case SetParam::min_dominating: return "min_dominating";
        case SetParam::min_total_dominating: return "min_total_dominating";
        case SetParam::min_oit_dominating: return "min_oit_dominating";
    }
    return "?";
}

struct VertexSetCertificate {
    SetParam kind = SetParam::max_independent;
    std::vector<int> set;
    int value = 0;
};

namespace detail {

inline void require_no_isolated(const Graph& g, const char* what) {
    if (auto v = first_isolated_vertex(g))
        throw std::domain_error(std::string(what) + " requires minimum degree >= 1; vertex " +
                                std::to_string(*v) + " is isolated");
}

inline SetMode mode_for(SetParam p) {
    switch (p) {
        case SetParam::max_independent: return SetMode::independent;
        case SetParam::min_cover: return SetMode::vertex_cover;
        case SetParam::min_dominating: return SetMode::dominating;
        case SetParam::min_total_dominating: return SetMode::total_dominating;
        case SetParam::min_oit_dominating: return SetMode::oit_dominating;
    }
    return SetMode::independent;
}

}  // namespace detail

// Exact optimum plus one optimal witness for a set parameter. The cover
// number is computed jointly with the independence number (complement of a
// maximum independent set), so the two always satisfy alpha + beta = n.
inline VertexSetCertificate solve_set_parameter(const Graph& g, SetParam kind,
                                                const Budget& budget = {}) {
    if (g.n == 0) throw std::invalid_argument("graph has no vertices");
    if (budget.expired()) throw SolverTimeout{};
    const detail::MaskGraph mg(g);
    VertexSetCertificate cert;
    cert.kind = kind;
    switch (kind) {
        case SetParam::max_independent: {
            auto [sz, set] = detail::max_independent_mask(mg, budget);
            cert.set = detail::mask_to_set(set);
            cert.value = sz;
            break;
        }
        case SetParam::min_cover: {
            auto [sz, set] = detail::max_independent_mask(mg, budget);
            cert.set = detail::mask_to_set(mg.all & ~set);
            cert.value = g.n - sz;
            break;
        }
        case SetParam::min_dominating:
        case SetParam::min_total_dominating:
        case SetParam::min_oit_dominating: {
            detail::require_no_isolated(g, set_param_name(kind));
            std::vector<detail::Mask> elems;
            elems.reserve(static_cast<size_t>(g.n));
            for (int v = 0; v < g.n; ++v)
                elems.push_back(kind == SetParam::min_dominating
                                    ? mg.closed[static_cast<size_t>(v)]
                                    : mg.open[static_cast<size_t>(v)]);
            if (kind == SetParam::min_oit_dominating)
                for (auto [u, v] : g.edge_list())
                    elems.push_back(detail::bit(u) | detail::bit(v));
            auto r = detail::min_hitting(elems, g.n + 1, budget);
            if (!r) throw std::logic_error("hitting search failed on a feasible instance");
            cert.set = detail::mask_to_set(r->second);
            cert.value = r->first;
            break;
        }
    }
    auto check = check_vertex_set(g, cert.set, detail::mode_for(kind));
    if (!check.holds) throw std::logic_error("solver produced an invalid certificate");
    return cert;
}

namespace detail {

// Exact outer-independent Roman optimisation. A labeling is determined by
// the zero set A (independent; for the total variant the complement must
// induce no isolated vertex) and a set of 2-vertices hitting N(a) for every
// a in A. Weight is n - |A| + |V_2|, so we search over independent sets
// depth-first and solve a hitting problem at each leaf.
struct OiRomanSolver {
    const MaskGraph& mg;
    const bool need_total;
    Ticker ticker;
    int best_w;
    Mask best_zero = 0, best_two = 0;
    int floor_w;  // alpha + 1, from weight = n - |A| + h(A), h >= 1, |A| <= beta
    const Budget& budget;
    std::vector<int> poss_out;  // per vertex: neighbors currently outside A

    OiRomanSolver(const MaskGraph& m, bool total, const Budget& b)
        : mg(m), need_total(total), budget(b) {
        ticker.budget = &b;
        poss_out.resize(static_cast<size_t>(mg.n));
        for (int v = 0; v < mg.n; ++v) poss_out[static_cast<size_t>(v)] = popcnt(mg.open[static_cast<size_t>(v)]);
    }

    std::pair<int, std::pair<Mask, Mask>> run() {
        auto [beta, _] = max_independent_mask(mg, budget);
        floor_w = (mg.n - beta) + 1;
        best_w = mg.n;  // all-ones labeling
        if (best_w > floor_w) dfs(0, 0, 0, 0);
        return {best_w, {best_zero, best_two}};
    }

    void leaf(Mask zero, int zero_size) {
        if (zero_size == 0) return;  // all-ones already seeded
        const int ub_h = best_w - (mg.n - zero_size);
        if (ub_h <= 0) return;
        std::vector<Mask> elems;
        elems.reserve(static_cast<size_t>(zero_size));
        Mask z = zero;
        while (z) {
            const int a = lowest(z);
            z &= z - 1;
            elems.push_back(mg.open[static_cast<size_t>(a)]);
        }
        auto r = min_hitting(elems, ub_h, budget);
        if (!r) return;
        best_w = mg.n - zero_size + r->first;
        best_zero = zero;
        best_two = r->second;
    }

    void dfs(int i, Mask zero, int zero_size, Mask touched) {
        ticker.tick();
        if (best_w <= floor_w) return;
        if (i == mg.n) {
            leaf(zero, zero_size);
            return;
        }
        const Mask suffix = mg.all & ~(bit(i) - 1);
        const Mask eligible = suffix & ~touched;
        const int room = zero_size + popcnt(eligible);
        const int lb = mg.n - room + (room > 0 ? 1 : 0);
        if (lb >= best_w) return;

        // branch: i joins the zero set
        if (!(touched & bit(i))) {
            bool feasible = true;
            if (need_total) {
                Mask nb = mg.open[static_cast<size_t>(i)];
                while (nb) {
                    const int u = lowest(nb);
                    nb &= nb - 1;
                    if (poss_out[static_cast<size_t>(u)] == 1) {
                        feasible = false;
                        break;
                    }
                }
            }
            if (feasible) {
                if (need_total) {
                    Mask nb = mg.open[static_cast<size_t>(i)];
                    while (nb) {
                        --poss_out[static_cast<size_t>(lowest(nb))];
                        nb &= nb - 1;
                    }
                }
                dfs(i + 1, zero | bit(i), zero_size + 1, touched | mg.open[static_cast<size_t>(i)]);
                if (need_total) {
                    Mask nb = mg.open[static_cast<size_t>(i)];
                    while (nb) {
                        ++poss_out[static_cast<size_t>(lowest(nb))];
                        nb &= nb - 1;
                    }
                }
            }
        }
        // branch: i stays positive
        dfs(i + 1, zero, zero_size, touched);
    }
};

// Exact plain/total Roman optimisation by search over the 2-set S.
// For RDF the best completion makes every vertex of N(S) \ S a zero:
// weight = 2|S| + n - |N[S]|. For TRDF the positives P must contain
// S and every vertex with no S-neighbor, and P may not induce an isolated
// vertex; patching isolated forced-positives is a hitting problem.
struct CoverRomanSolver {
    const MaskGraph& mg;
    const bool need_total;
    Ticker ticker;
    const Budget& budget;
    int best_w = 0;
    Mask best_two = 0, best_zero = 0;
    std::vector<Mask> suffix_open;  // union of N(v) for v >= i

    CoverRomanSolver(const MaskGraph& m, bool total, const Budget& b)
        : mg(m), need_total(total), budget(b) {
        ticker.budget = &b;
        suffix_open.assign(static_cast<size_t>(mg.n + 1), 0);
        for (int i = mg.n - 1; i >= 0; --i)
            suffix_open[static_cast<size_t>(i)] =
                suffix_open[static_cast<size_t>(i + 1)] | mg.open[static_cast<size_t>(i)];
    }

    std::pair<int, std::pair<Mask, Mask>> run() {
        best_w = mg.n + 1;
        dfs(0, 0, 0, 0);
        return {best_w, {best_zero, best_two}};
    }

    void leaf(Mask S, int ssize, Mask open_cov) {
        if (!need_total) {
            const int w = 2 * ssize + mg.n - popcnt(S | open_cov);
            if (w < best_w) {
                best_w = w;
                best_two = S;
                best_zero = open_cov & ~S;
            }
            return;
        }
        const Mask forced = S | (mg.all & ~open_cov);
        Mask isolated = 0;
        Mask f = forced;
        while (f) {
            const int p = lowest(f);
            f &= f - 1;
            if (!(mg.open[static_cast<size_t>(p)] & forced)) isolated |= bit(p);
        }
        int w = ssize + popcnt(forced);
        Mask pos = forced;
        if (isolated) {
            std::vector<Mask> elems;
            Mask is = isolated;
            while (is) {
                const int p = lowest(is);
                is &= is - 1;
                elems.push_back(mg.open[static_cast<size_t>(p)]);
            }
            auto r = min_hitting(elems, best_w - w, budget);
            if (!r) return;
            w += r->first;
            pos |= r->second;
        }
        if (w < best_w) {
            best_w = w;
            best_two = S;
            best_zero = mg.all & ~pos;
        }
    }

    void dfs(int i, Mask S, int ssize, Mask open_cov) {
        ticker.tick();
        if (2 * ssize >= best_w) return;
        if (i == mg.n) {
            leaf(S, ssize, open_cov);
            return;
        }
        // vertices below i that no current or future 2 can ever cover
        const Mask dead =
            (bit(i) - 1) & ~S & ~(open_cov | suffix_open[static_cast<size_t>(i)]);
        if (2 * ssize + popcnt(dead) >= best_w) return;
        dfs(i + 1, S, ssize, open_cov);
        dfs(i + 1, S | bit(i), ssize + 1, open_cov | mg.open[static_cast<size_t>(i)]);
    }
};

}  // namespace detail

// Exact minimum weight and one optimal labeling for a Roman variant.
inline std::pair<int, RomanLabeling> solve_roman_parameter(const Graph& g, Variant variant,
                                                           const Budget& budget = {}) {
    if (g.n == 0) throw std::invalid_argument("graph has no vertices");
    if (budget.expired()) throw SolverTimeout{};
    detail::require_no_isolated(g, variant_name(variant));
    const detail::MaskGraph mg(g);

    detail::Mask zero = 0, two = 0;
    int value = 0;
    if (variant == Variant::OIRDF || variant == Variant::OITRDF) {
        detail::OiRomanSolver s(mg, variant == Variant::OITRDF, budget);
        auto [w, sets] = s.run();
        value = w;
        zero = sets.first;
        two = sets.second;
    } else {
        detail::CoverRomanSolver s(mg, variant == Variant::TRDF, budget);
        auto [w, sets] = s.run();
        value = w;
        zero = sets.first;
        two = sets.second;
    }

    std::vector<int> vals(static_cast<size_t>(g.n), 1);
    for (int v : detail::mask_to_set(zero)) vals[static_cast<size_t>(v)] = 0;
    for (int v : detail::mask_to_set(two)) vals[static_cast<size_t>(v)] = 2;
    RomanLabeling f = make_labeling(g, vals);
    if (f.weight() != value || !validate(g, f, variant).valid)
        throw std::logic_error("solver produced an invalid optimal labeling");
    return {value, f};
}

struct RomanEntry {
    int value = 0;
    RomanLabeling labeling;
};

/// Exact values (and certificates) of the classical parameters for one graph.
/// Entries a budgeted run could not finish are absent and listed in timed_out.
struct ParameterRecord {
    int n = 0;
    std::optional<VertexSetCertificate> beta;       // independence number
    std::optional<VertexSetCertificate> alpha;      // vertex cover number
    std::optional<VertexSetCertificate> gamma;      // domination
    std::optional<VertexSetCertificate> gamma_t;    // total domination
    std::optional<VertexSetCertificate> gamma_toi;  // outer-independent total domination
    std::optional<RomanEntry> gamma_R;
    std::optional<RomanEntry> gamma_tR;
    std::optional<RomanEntry> gamma_oiR;
    std::optional<RomanEntry> gamma_oitR;
    std::vector<std::string> timed_out;

    std::optional<long long> value(const std::string& name) const {
        const auto setv = [](const std::optional<VertexSetCertificate>& c) {
            return c ? std::optional<long long>(c->value) : std::nullopt;
        };
        const auto romv = [](const std::optional<RomanEntry>& c) {
            return c ? std::optional<long long>(c->value) : std::nullopt;
        };
        if (name == "alpha") return setv(alpha);
        if (name == "beta") return setv(beta);
        if (name == "gamma") return setv(gamma);
        if (name == "gamma_t") return setv(gamma_t);
        if (name == "gamma_toi") return setv(gamma_toi);
        if (name == "gamma_R") return romv(gamma_R);
        if (name == "gamma_tR") return romv(gamma_tR);
        if (name == "gamma_oiR") return romv(gamma_oiR);
        if (name == "gamma_oitR") return romv(gamma_oitR);
        return std::nullopt;
    }
};

struct ParamSelection {
    bool alpha = false, beta = false, gamma = false, gamma_t = false, gamma_toi = false;
    bool R = false, tR = false, oiR = false, oitR = false;

    static ParamSelection all() {
        ParamSelection s;
        s.alpha = s.beta = s.gamma = s.gamma_t = s.gamma_toi = s.R = s.tR = s.oiR = s.oitR = true;
        return s;
    }
    bool any() const {
        return alpha || beta || gamma || gamma_t || gamma_toi || R || tR || oiR || oitR;
    }
};

// Computes each requested parameter, skipping (never approximating) entries
// that exceed the budget. Cross-checks the arithmetic relations between the
// computed entries before returning.
inline ParameterRecord full_record(const Graph& g, const ParamSelection& sel,
                                   const Budget& budget = {}) {
    ParameterRecord rec;
    rec.n = g.n;
    const auto guarded = [&](const char* name, auto&& fn) {
        try {
            fn();
        } catch (const SolverTimeout&) {
            rec.timed_out.emplace_back(name);
        }
    };
    if (sel.beta || sel.alpha) {
        guarded("alpha/beta", [&] {
            auto ind = solve_set_parameter(g, SetParam::max_independent, budget);
            VertexSetCertificate cov;
            cov.kind = SetParam::min_cover;
            cov.value = g.n - ind.value;
            std::vector<char> in(static_cast<size_t>(g.n), 0);
            for (int v : ind.set) in[static_cast<size_t>(v)] = 1;
            for (int v = 0; v < g.n; ++v)
                if (!in[static_cast<size_t>(v)]) cov.set.push_back(v);
            if (sel.beta) rec.beta = ind;
            if (sel.alpha) rec.alpha = cov;
        });
    }
    if (sel.gamma)
        guarded("gamma", [&] { rec.gamma = solve_set_parameter(g, SetParam::min_dominating, budget); });
    if (sel.gamma_t)
        guarded("gamma_t",
                [&] { rec.gamma_t = solve_set_parameter(g, SetParam::min_total_dominating, budget); });
    if (sel.gamma_toi)
        guarded("gamma_toi",
                [&] { rec.gamma_toi = solve_set_parameter(g, SetParam::min_oit_dominating, budget); });
    const auto roman = [&](const char* name, Variant v, std::optional<RomanEntry>& slot) {
        guarded(name, [&] {
            auto [val, lab] = solve_roman_parameter(g, v, budget);
            slot = RomanEntry{val, lab};
        });
    };
    if (sel.R) roman("gamma_R", Variant::RDF, rec.gamma_R);
    if (sel.tR) roman("gamma_tR", Variant::TRDF, rec.gamma_tR);
    if (sel.oiR) roman("gamma_oiR", Variant::OIRDF, rec.gamma_oiR);
    if (sel.oitR) roman("gamma_oitR", Variant::OITRDF, rec.gamma_oitR);

    const auto bad = [](bool cond) {
        if (cond) throw std::logic_error("parameter record violates an internal identity");
    };
    if (rec.alpha && rec.beta) bad(rec.alpha->value + rec.beta->value != g.n);
    if (rec.gamma && rec.gamma_t) bad(rec.gamma->value > rec.gamma_t->value);
    if (rec.gamma_t && rec.gamma_toi) bad(rec.gamma_t->value > rec.gamma_toi->value);
    if (rec.gamma_R && rec.gamma_oiR) bad(rec.gamma_R->value > rec.gamma_oiR->value);
    if (rec.gamma_oiR && rec.gamma_oitR) bad(rec.gamma_oiR->value > rec.gamma_oitR->value);
    if (rec.gamma_tR && rec.gamma_oitR) bad(rec.gamma_tR->value > rec.gamma_oitR->value);
    return rec;
}

}  // namespace oitrd
