#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "solvers.hpp"

namespace oitrd {

// ---- closed forms -----------------------------------------------------------

// Parameter values predicted in closed form for a family instance, keyed by
// parameter name. Instances outside a family's hypothesis range are domain
// errors; families without closed forms are domain errors too.
inline std::map<std::string, long long> closed_form(const FamilySpec& spec) {
    const auto& q = spec.params;
    const auto arg = [&](size_t i) { return q.at(i); };
    std::map<std::string, long long> out;
    switch (spec.kind) {
        case Family::complete_bipartite: {
            const long long r = arg(0), s = arg(1);
            if (r < 3 || s < r)
                throw std::domain_error("closed forms for K_{r,s} require 3 <= r <= s");
            out["gamma_R"] = 4;
            out["gamma_tR"] = 4;
            out["gamma_oiR"] = r + 1;
            out["gamma_toi"] = r + 1;
            out["gamma_oitR"] = r + 2;
            return out;
        }
        case Family::wheel: {
            const long long n = arg(0);
            if (n < 4) throw std::domain_error("closed forms for wheels require n >= 4");
            const long long half_up = (n - 1 + 1) / 2;  // ceil((n-1)/2)
            out["alpha"] = half_up + 1;
            out["gamma_oiR"] = half_up + 2;
            out["gamma_toi"] = half_up + 1;
            out["gamma_oitR"] = half_up + 2;
            return out;
        }
        case Family::fpq: {
            std::vector<int> t, r, rp;
            unpack_fpq_params(q, t, r, rp);
            fpq_layout(t, r, rp);  // hypothesis check
            const long long p = static_cast<long long>(t.size());
            const long long qq = static_cast<long long>(r.size());
            long long sum_r = 0;
            for (int v : r) sum_r += v;
            out["gamma"] = p + 3 * qq;
            out["gamma_t"] = 2 * p + 3 * qq;
            out["gamma_R"] = 2 * p + 6 * qq;
            out["gamma_tR"] = 3 * p + 6 * qq;
            out["gamma_toi"] = 2 * p + qq + sum_r;
            out["gamma_oiR"] = 2 * p + 2 * qq + 1 + sum_r;
            out["gamma_oitR"] = 3 * p + 3 * qq + sum_r;
            return out;
        }
        case Family::sierpinski: {
            const long long p = arg(0), n = arg(1);
            if (p < 3 || n < 2)
                throw std::domain_error("closed form for sierpinski requires p >= 3, n >= 2");
            long long copies = 1;
            for (long long i = 1; i < n; ++i) copies *= p;
            out["gamma_oitR"] = p * ((copies + 1) / 2) + (p - 1) * (copies / 2);
            return out;
        }
        case Family::circulant: {
            const long long n = arg(0), k = arg(1);
            if (k < 2 || 2 * k > n)
                throw std::domain_error("closed forms for circulants require 2 <= k <= floor(n/2)");
            const long long m = n / (k + 1);
            out["beta"] = m;
            out["gamma_oitR"] = n - m / 2;
            return out;
        }
        case Family::cartesian_kk: {
            const long long r = arg(0), s = arg(1);
            if (r < 2 || s < r)
                throw std::domain_error("closed form for the Cartesian product requires 2 <= r <= s");
            out["gamma_oitR"] = r * s - r / 2;
            return out;
        }
        case Family::direct_kk: {
            const long long r = arg(0), s = arg(1);
            if (r < 2 || s < r)
                throw std::domain_error("closed form for the direct product requires 2 <= r <= s");
            out["gamma_oitR"] = s * (r - 1) + 2;
            return out;
        }
        case Family::strong_kk:
        case Family::lexicographic_kk: {
            const long long r = arg(0), s = arg(1);
            if (r < 1 || s < 1 || r * s < 2)
                throw std::domain_error("closed form for this product requires order >= 2");
            out["gamma_oitR"] = r * s;
            return out;
        }
        default:
            throw std::domain_error(std::string("no closed forms for family ") +
                                    family_name(spec.kind));
    }
}

// ---- bound audit -------------------------------------------------------------

/// One evaluated inequality (or equality). `holds` is true whenever the
/// hypotheses fail; a bound never passes vacuously as "applicable".
struct BoundInstance {
    std::string id;
    long long lhs = 0;
    long long rhs = 0;
    char relation = '<';  // '<' means <=, '=' means equality
    bool applicable = false;
    bool holds = true;
    long long slack = 0;
    std::string note;
};

struct BoundReport {
    std::string graph_id;
    std::vector<BoundInstance> instances;

    std::vector<BoundInstance> violations() const {
        std::vector<BoundInstance> out;
        for (const auto& b : instances)
            if (!b.holds) out.push_back(b);
        return out;
    }
};

namespace detail {

inline void push_bound(std::vector<BoundInstance>& out, std::string id, bool applicable,
                       std::optional<long long> lhs, std::optional<long long> rhs,
                       char relation, std::string note = {}) {
    BoundInstance b;
    b.id = std::move(id);
    b.relation = relation;
    b.note = std::move(note);
    b.applicable = applicable && lhs && rhs;
    if (b.applicable) {
        b.lhs = *lhs;
        b.rhs = *rhs;
        b.slack = b.rhs - b.lhs;
        b.holds = relation == '=' ? b.lhs == b.rhs : b.lhs <= b.rhs;
    }
    out.push_back(std::move(b));
}

inline std::optional<long long> opt_min(std::optional<long long> a, std::optional<long long> b) {
    if (!a || !b) return std::nullopt;
    return std::min(*a, *b);
}

inline std::optional<long long> opt_max(std::optional<long long> a, std::optional<long long> b) {
    if (!a || !b) return std::nullopt;
    return std::max(*a, *b);
}

}  // namespace detail

// Evaluates every general-purpose bound against a parameter record, plus the
// family closed forms when family metadata is supplied. Instances whose
// inputs are missing or whose hypotheses fail are marked inapplicable.
inline BoundReport bound_report(const Graph& g, const ParameterRecord& rec,
                                const std::optional<FamilySpec>& family = std::nullopt,
                                std::string graph_id = {}) {
    BoundReport rep;
    rep.graph_id = std::move(graph_id);
    auto& out = rep.instances;

    const auto prof = degree_profile(g);
    const bool no_isolated = g.n > 0 && !first_isolated_vertex(g).has_value();
    const bool connected = g.n > 0 && is_connected(g);
    const bool claw_free = is_claw_free(g);
    const long long n = g.n;

    const auto alpha = rec.value("alpha"), beta = rec.value("beta");
    const auto gamma = rec.value("gamma"), gamma_t = rec.value("gamma_t");
    const auto gamma_toi = rec.value("gamma_toi");
    const auto gR = rec.value("gamma_R"), gtR = rec.value("gamma_tR");
    const auto goiR = rec.value("gamma_oiR"), goitR = rec.value("gamma_oitR");
    const auto plus = [](std::optional<long long> a, long long k) -> std::optional<long long> {
        if (!a) return std::nullopt;
        return *a + k;
    };
    const auto times = [](long long k, std::optional<long long> a) -> std::optional<long long> {
        if (!a) return std::nullopt;
        return k * *a;
    };
    const auto sum = [](std::optional<long long> a,
                        std::optional<long long> b) -> std::optional<long long> {
        if (!a || !b) return std::nullopt;
        return *a + *b;
    };
    using detail::push_bound;

    push_bound(out, "GALLAI", g.n > 0, sum(alpha, beta), {n}, '=');
    push_bound(out, "OBS2a", no_isolated, gamma_t, gR, '<');
    push_bound(out, "OBS2b", no_isolated, gR, times(2, gamma), '<');
    push_bound(out, "OBS2c", no_isolated, times(2, gamma), times(2, alpha), '<');

    push_bound(out, "T1-lower", no_isolated, plus(alpha, 1), goitR, '<');
    push_bound(out, "T1-upper", no_isolated, goitR, times(3, alpha), '<');

    const bool t4_hyp = no_isolated && prof.Delta >= 2;
    std::optional<long long> t4_lhs;
    if (alpha && t4_hyp) {
        const long long ceil_term = (n - *alpha + prof.Delta - 2) / (prof.Delta - 1);
        t4_lhs = *alpha + std::max<long long>(static_cast<long long>(prof.supports.size()), ceil_term);
    }
    push_bound(out, "T4-lower", t4_hyp, t4_lhs, goitR, '<');
    push_bound(out, "T4-upper", t4_hyp, goitR, sum(alpha, gamma_t), '<');
    push_bound(out, "T4-clawfree", no_isolated && claw_free && prof.delta >= 3, goitR,
               sum(alpha, gamma), '<');

    push_bound(out, "T5", no_isolated, goitR, sum(alpha, gR), '<');
    push_bound(out, "T5-2gamma", no_isolated, goitR, sum(alpha, times(2, gamma)), '<');
    {
        const bool prop_applicable = no_isolated && goitR && alpha && gamma &&
                                     *goitR == *alpha + 2 * *gamma;
        push_bound(out, "PROP-roman", prop_applicable, gR, times(2, gamma), '=',
                   "gamma_oitR = alpha + 2 gamma forces a Roman graph");
    }

    push_bound(out, "T8i-lower", no_isolated && n >= 3, plus(gamma_toi, 1), goitR, '<');
    push_bound(out, "T8i-upper", no_isolated && n >= 3, goitR, times(2, gamma_toi), '<');
    push_bound(out, "T8ii", no_isolated && n >= 3, goiR, goitR, '<');

    push_bound(out, "T9", no_isolated, goitR, sum(detail::opt_min(gamma_toi, goiR), gamma), '<');
    push_bound(out, "T10", no_isolated && claw_free && prof.delta >= 3, goitR, goiR, '=');

    const bool chain1_hyp = no_isolated && goitR && goiR && *goitR > *goiR;
    push_bound(out, "CHAIN1-lower", chain1_hyp, plus(detail::opt_max(gamma_toi, goiR), 1), goitR,
               '<');
    push_bound(out, "CHAIN1-upper", chain1_hyp, goitR,
               sum(detail::opt_min(gamma_toi, goiR), gamma), '<');

    push_bound(out, "T11", connected, gamma_toi, plus(times(2, alpha), 1 - prof.delta), '<');
    push_bound(out, "T12", connected, goitR,
               plus(sum(times(2, alpha), gamma), 1 - prof.delta), '<');

    if (family) {
        std::map<std::string, long long> predicted;
        bool in_range = true;
        try {
            predicted = closed_form(*family);
        } catch (const std::domain_error&) {
            in_range = false;
        }
        const auto family_instance = [&](const std::string& id, const std::string& param) {
            if (!in_range || !predicted.count(param)) return;
            push_bound(out, id, true, rec.value(param), {predicted.at(param)}, '=',
                       std::string(family_name(family->kind)) + " closed form for " + param);
        };
        switch (family->kind) {
            case Family::complete_bipartite:
                family_instance("R1a", "gamma_R");
                family_instance("R1b", "gamma_tR");
                family_instance("R1c", "gamma_oiR");
                family_instance("R1d", "gamma_toi");
                family_instance("R1e", "gamma_oitR");
                break;
            case Family::wheel:
                family_instance("R2a", "alpha");
                family_instance("R2b", "gamma_oiR");
                family_instance("R2c", "gamma_toi");
                family_instance("R2d", "gamma_oitR");
                break;
            case Family::fpq:
                family_instance("R3a", "gamma");
                family_instance("R3b", "gamma_t");
                family_instance("R3c", "gamma_R");
                family_instance("R3d", "gamma_tR");
                family_instance("R3e", "gamma_toi");
                family_instance("R3f", "gamma_oiR");
                family_instance("R3g", "gamma_oitR");
                break;
            case Family::sierpinski:
                family_instance("T13", "gamma_oitR");
                break;
            case Family::circulant:
                family_instance("L14", "beta");
                family_instance("T15", "gamma_oitR");
                break;
            case Family::cartesian_kk:
                family_instance("T16", "gamma_oitR");
                break;
            case Family::direct_kk:
                family_instance("T17", "gamma_oitR");
                break;
            case Family::strong_kk:
            case Family::lexicographic_kk:
                family_instance("T18", "gamma_oitR");
                break;
            default:
                break;
        }
    }
    return rep;
}

// ---- random corpus ------------------------------------------------------------

// Deterministic splitmix64 stream; kept self-contained so seeded corpora are
// reproducible across standard libraries.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

// Connected Erdos-Renyi sample: order uniform in {2..max_n}, each edge kept
// with probability edge_prob, disconnected draws rejected.
inline Graph random_connected_graph(SplitMix64& rng, int max_n, double edge_prob) {
    if (max_n < 2) throw std::invalid_argument("random corpus requires max_n >= 2");
    if (!(edge_prob > 0.0) || edge_prob > 1.0)
        throw std::invalid_argument("edge probability must be in (0, 1]");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_n - 1)));
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_unit() < edge_prob) e.emplace_back(u, v);
        Graph g = build_graph(n, e);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random corpus rejection loop did not terminate");
}

// ---- audits --------------------------------------------------------------------

struct RandomCorpusSpec {
    int count = 0;
    int max_n = 8;
    double edge_prob = 0.5;
    std::uint64_t seed = 1;
};

struct ProbeFinding {
    std::string id;
    std::string instance;
    long long exact = 0;
    long long formula = 0;
    bool mismatch = false;
    std::string note;
};

struct AuditViolation {
    std::string graph_id;
    BoundInstance instance;
};

struct AuditSummary {
    int graphs = 0;
    int skipped = 0;
    long long instances = 0;
    long long applicable = 0;
    long long tight = 0;  // applicable inequalities holding with slack 0
    std::vector<AuditViolation> violations;
    std::vector<ProbeFinding> probes;
    std::vector<BoundReport> reports;
};

namespace detail {

inline void accumulate(AuditSummary& s, const BoundReport& rep) {
    ++s.graphs;
    for (const auto& b : rep.instances) {
        ++s.instances;
        if (b.applicable) {
            ++s.applicable;
            if (b.holds && b.slack == 0) ++s.tight;
        }
        if (!b.holds) s.violations.push_back({rep.graph_id, b});
    }
    s.reports.push_back(rep);
}

}  // namespace detail

// Runs full_record + bound_report on every corpus graph; graphs whose record
// cannot be completed within the per-graph budget are skipped and counted.
// Always runs the three standing probes: the direct product at r = 2, the
// Cartesian product at (2,2), and the open-question equality scan.
inline AuditSummary audit_corpus(const std::vector<FamilySpec>& families,
                                 const std::optional<RandomCorpusSpec>& random_spec = std::nullopt,
                                 long long per_graph_budget_ms = -1) {
    AuditSummary summary;
    const auto budget = [&] {
        return per_graph_budget_ms >= 0 ? Budget::from_ms(per_graph_budget_ms)
                                        : Budget::unlimited();
    };

    const auto audit_one = [&](const Graph& g, const std::optional<FamilySpec>& spec,
                               const std::string& id) {
        ParameterRecord rec;
        try {
            rec = full_record(g, ParamSelection::all(), budget());
        } catch (const SolverTimeout&) {
            ++summary.skipped;
            return;
        }
        if (!rec.timed_out.empty()) {
            ++summary.skipped;
            return;
        }
        auto rep = bound_report(g, rec, spec, id);
        detail::accumulate(summary, rep);

        // open-question scan: non-star graphs meeting gamma_oitR = 2 alpha + gamma - delta + 1
        if (is_connected(g) && !is_star(g)) {
            const auto a = rec.value("alpha"), gm = rec.value("gamma"), go = rec.value("gamma_oitR");
            if (a && gm && go) {
                const long long rhs = 2 * *a + *gm - degree_profile(g).delta + 1;
                if (*go == rhs) {
                    ProbeFinding f;
                    f.id = "PROBE-openquestion";
                    f.instance = id;
                    f.exact = *go;
                    f.formula = rhs;
                    f.mismatch = false;
                    f.note = "non-star graph attains the star-tight upper bound";
                    summary.probes.push_back(std::move(f));
                }
            }
        }
    };

    for (const auto& spec : families) {
        LabeledGraph lg = generate(spec);
        audit_one(lg.graph, spec, spec_id(spec));
    }
    if (random_spec) {
        SplitMix64 rng(random_spec->seed);
        for (int i = 0; i < random_spec->count; ++i) {
            Graph g = random_connected_graph(rng, random_spec->max_n, random_spec->edge_prob);
            audit_one(g, std::nullopt, "random_" + std::to_string(i));
        }
    }

    // standing probes for the two closed forms under question
    const auto probe_product = [&](ProductKind kind, int r, int s, const std::string& id) {
        const LabeledGraph lg = gen_product(kind, r, s);
        ProbeFinding f;
        f.id = id;
        f.instance = std::string(product_name(kind)) + "_" + std::to_string(r) + "_" +
                     std::to_string(s);
        f.formula = kind == ProductKind::direct ? static_cast<long long>(s) * (r - 1) + 2
                                                : static_cast<long long>(r) * s - r / 2;
        try {
            f.exact = solve_roman_parameter(lg.graph, Variant::OITRDF, budget()).first;
            f.mismatch = f.exact != f.formula;
            f.note = f.mismatch ? "exact value differs from the closed form"
                                : "exact value matches the closed form";
        } catch (const SolverTimeout&) {
            f.note = "probe skipped: budget exhausted";
        }
        summary.probes.push_back(std::move(f));
    };
    for (int s : {2, 3, 4}) probe_product(ProductKind::direct, 2, s, "PROBE-direct-r2");
    probe_product(ProductKind::cartesian, 2, 2, "PROBE-cartesian-22");

    return summary;
}

}  // namespace oitrd
