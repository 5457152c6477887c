#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bounds.hpp"
#include "constructions.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "solvers.hpp"

namespace oitrd::cli {

namespace detail {

inline std::optional<long long> env_timeout_ms() {
    const char* v = std::getenv("OITRD_TIMEOUT_MS");
    if (!v || !*v) return std::nullopt;
    try {
        return std::stoll(v);
    } catch (...) {
        throw std::invalid_argument("OITRD_TIMEOUT_MS is not an integer");
    }
}

inline Budget make_budget(long long flag_ms) {
    if (flag_ms >= 0) return Budget::from_ms(flag_ms);
    if (auto env = env_timeout_ms()) return Budget::from_ms(*env);
    return Budget::unlimited();
}

inline FamilySpec family_spec_from(const std::string& kind_str,
                                   const std::vector<long long>& params,
                                   const std::vector<int>& t, const std::vector<int>& r,
                                   const std::vector<int>& rp) {
    auto kind = family_from_name(kind_str);
    if (!kind) throw std::invalid_argument("unknown family: " + kind_str);
    FamilySpec spec;
    spec.kind = *kind;
    if (*kind == Family::fpq) {
        if (t.empty() || r.empty() || rp.empty())
            throw std::invalid_argument("fpq needs --t, --r and --rp lists");
        spec = make_fpq_spec(t, r, rp);
    } else {
        if (!t.empty() || !r.empty() || !rp.empty())
            throw std::invalid_argument("--t/--r/--rp apply only to the fpq family");
        spec.params = params;
    }
    return spec;
}

// "kind:1,2,3" -> FamilySpec (fpq uses kind:p,q,t...,r...,rp...)
inline FamilySpec family_spec_from_compact(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind_str = text.substr(0, colon);
    auto kind = family_from_name(kind_str);
    if (!kind) throw std::invalid_argument("unknown family: " + kind_str);
    FamilySpec spec;
    spec.kind = *kind;
    if (colon != std::string::npos) {
        std::istringstream ss(text.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) spec.params.push_back(std::stoll(tok));
    }
    return spec;
}

inline ParamSelection parse_params(const std::vector<std::string>& names) {
    ParamSelection sel;
    if (names.empty()) return ParamSelection::all();
    for (const auto& raw : names) {
        std::string s = raw;
        if (s == "all") {
            sel = ParamSelection::all();
        } else if (s == "alpha") {
            sel.alpha = true;
        } else if (s == "beta") {
            sel.beta = true;
        } else if (s == "gamma") {
            sel.gamma = true;
        } else if (s == "gamma_t") {
            sel.gamma_t = true;
        } else if (s == "gamma_toi" || s == "toi") {
            sel.gamma_toi = true;
        } else if (s == "gamma_R" || s == "R") {
            sel.R = true;
        } else if (s == "gamma_tR" || s == "tR") {
            sel.tR = true;
        } else if (s == "gamma_oiR" || s == "oiR") {
            sel.oiR = true;
        } else if (s == "gamma_oitR" || s == "oitR") {
            sel.oitR = true;
        } else {
            throw std::invalid_argument("unknown parameter name: " + s);
        }
    }
    return sel;
}

inline std::vector<std::string> family_comments(const LabeledGraph& lg) {
    std::string line = "family: " + lg.family;
    for (long long p : lg.params) line += " " + std::to_string(p);
    return {line};
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

namespace detail {

inline int cmd_batch(const std::string& manifest_path, std::ostream& out, std::ostream& err) {
    std::ifstream in(manifest_path);
    if (!in) throw std::invalid_argument("cannot open manifest: " + manifest_path);
    json entries = json::array();
    int worst = 0;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        std::vector<std::string> argv;
        std::string tok;
        while (ss >> tok) argv.push_back(tok);
        if (argv.empty()) continue;
        if (argv.front() == "batch")
            throw std::invalid_argument("batch manifests may not nest batch entries");
        std::ostringstream sub_out, sub_err;
        int code = 1;
        try {
            code = run(argv, sub_out, sub_err);
        } catch (const std::exception& e) {
            sub_err << "error: " << e.what() << "\n";
        }
        worst = std::max(worst, code);
        json entry;
        entry["args"] = argv;
        entry["exit"] = code;
        const std::string text = sub_out.str();
        entry["report"] = json::accept(text) ? json::parse(text) : json(text);
        const std::string diag = sub_err.str();
        if (!diag.empty()) entry["stderr"] = diag;
        entries.push_back(std::move(entry));
    }
    out << entries.dump(2) << "\n";
    err << "batch: " << entries.size() << " entries, worst exit " << worst << "\n";
    return worst;
}

}  // namespace detail

// Command-line surface. Returns the process exit status:
//   0 success / 1 input error / 2 audit violations / 3 timeout-partial output.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations for outer-independent total Roman domination"};
    app.require_subcommand(1);

    // generate
    auto* g_cmd = app.add_subcommand("generate", "build a named graph family as an edge list");
    std::string g_family;
    std::vector<long long> g_params;
    std::vector<int> g_t, g_r, g_rp;
    std::string g_output, g_base_file, g_base_family;
    std::vector<long long> g_base_params;
    g_cmd->add_option("family", g_family, "family kind")->required();
    g_cmd->add_option("params", g_params, "family parameters");
    g_cmd->add_option("--t", g_t, "fpq star sizes")->delimiter(',');
    g_cmd->add_option("--r", g_r, "fpq r-side sizes")->delimiter(',');
    g_cmd->add_option("--rp", g_rp, "fpq r'-side sizes")->delimiter(',');
    g_cmd->add_option("-o,--output", g_output, "write the edge list to a file");
    g_cmd->add_option("--base-file", g_base_file, "corona base graph file");
    g_cmd->add_option("--base-family", g_base_family, "corona base family kind");
    g_cmd->add_option("--base-params", g_base_params, "corona base family parameters")
        ->delimiter(',');

    // solve
    auto* s_cmd = app.add_subcommand("solve", "compute exact parameter values");
    std::string s_file;
    std::vector<std::string> s_family;
    std::vector<int> s_t, s_r, s_rp;
    std::vector<std::string> s_params;
    long long s_timeout = -1;
    s_cmd->add_option("graph", s_file, "edge-list file");
    s_cmd->add_option("--family", s_family, "family kind followed by its parameters")
        ->expected(-1);
    s_cmd->add_option("--t", s_t, "fpq star sizes")->delimiter(',');
    s_cmd->add_option("--r", s_r, "fpq r-side sizes")->delimiter(',');
    s_cmd->add_option("--rp", s_rp, "fpq r'-side sizes")->delimiter(',');
    s_cmd->add_option("--params", s_params, "parameters to compute (default: all)")
        ->delimiter(',');
    s_cmd->add_option("--timeout-ms", s_timeout, "per-parameter budget in milliseconds");

    // construct
    auto* c_cmd = app.add_subcommand("construct", "build a certified labeling for a family");
    std::string c_family;
    std::vector<long long> c_params;
    std::vector<int> c_t, c_r, c_rp;
    c_cmd->add_option("family", c_family, "family kind")->required();
    c_cmd->add_option("params", c_params, "family parameters");
    c_cmd->add_option("--t", c_t, "fpq star sizes")->delimiter(',');
    c_cmd->add_option("--r", c_r, "fpq r-side sizes")->delimiter(',');
    c_cmd->add_option("--rp", c_rp, "fpq r'-side sizes")->delimiter(',');

    // verify
    auto* v_cmd = app.add_subcommand("verify", "validate a labeling against a graph");
    std::string v_file, v_labeling, v_variant;
    v_cmd->add_option("graph", v_file, "edge-list file")->required();
    v_cmd->add_option("--labeling", v_labeling, "digit string over {0,1,2}")->required();
    v_cmd->add_option("--variant", v_variant, "rdf | trdf | oirdf | oitrdf")->required();

    // audit
    auto* a_cmd = app.add_subcommand("audit", "check the bound inequalities over a corpus");
    std::vector<std::string> a_families;
    bool a_random = false, a_reports = false;
    int a_count = 50, a_max_n = 8;
    double a_edge_prob = 0.5;
    std::uint64_t a_seed = 1;
    long long a_timeout = -1;
    a_cmd->add_option("--family", a_families, "family instance, e.g. circulant:9,2");
    a_cmd->add_flag("--random", a_random, "add a seeded connected random corpus");
    a_cmd->add_option("--count", a_count, "number of random graphs");
    a_cmd->add_option("--max-n", a_max_n, "maximum random graph order");
    a_cmd->add_option("--edge-prob", a_edge_prob, "edge probability");
    a_cmd->add_option("--seed", a_seed, "random seed");
    a_cmd->add_option("--timeout-ms", a_timeout, "per-graph budget in milliseconds");
    a_cmd->add_flag("--reports", a_reports, "embed per-graph bound reports");

    // batch
    auto* b_cmd = app.add_subcommand("batch", "run a manifest of commands, one per line");
    std::string b_manifest;
    b_cmd->add_option("manifest", b_manifest, "manifest file")->required();

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargv;
        cargv.push_back("oitrd");
        for (const auto& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
    if (g_cmd->parsed()) {
        LabeledGraph lg;
        if (g_family == "corona_empty") {
            if (g_params.size() != 1)
                throw std::invalid_argument("corona_empty expects one parameter (leaves per vertex)");
            Graph base;
            if (!g_base_file.empty()) {
                base = load_edge_list(g_base_file);
            } else if (!g_base_family.empty()) {
                base = generate(detail::family_spec_from(g_base_family, g_base_params, {}, {}, {}))
                           .graph;
            } else {
                throw std::invalid_argument("corona_empty needs --base-file or --base-family");
            }
            lg = gen_corona_empty(base, static_cast<int>(g_params[0]));
        } else {
            lg = generate(detail::family_spec_from(g_family, g_params, g_t, g_r, g_rp));
        }
        const std::string doc = write_edge_list(lg.graph, detail::family_comments(lg));
        if (!g_output.empty()) {
            std::ofstream f(g_output);
            if (!f) throw std::invalid_argument("cannot write to " + g_output);
            f << doc;
        }
        json j;
        j["graph"] = graph_json(lg);
        j["edge_list"] = doc;
        if (!g_output.empty()) j["written"] = g_output;
        out << j.dump(2) << "\n";
        err << "generated " << lg.family << " with " << lg.graph.n << " vertices, "
            << lg.graph.edge_count() << " edges\n";
        return 0;
    }

    if (s_cmd->parsed()) {
        json j;
        Graph g;
        if (!s_family.empty()) {
            std::vector<long long> params;
            for (size_t i = 1; i < s_family.size(); ++i) params.push_back(std::stoll(s_family[i]));
            auto lg = generate(detail::family_spec_from(s_family[0], params, s_t, s_r, s_rp));
            g = lg.graph;
            j["graph"] = graph_json(lg);
        } else if (!s_file.empty()) {
            g = load_edge_list(s_file);
            j["graph"] = graph_json(g);
        } else {
            throw std::invalid_argument("solve needs a graph file or --family");
        }
        const auto rec = full_record(g, detail::parse_params(s_params), detail::make_budget(s_timeout));
        j["parameters"] = record_json(rec);
        out << j.dump(2) << "\n";
        err << "solved " << (j["parameters"].size()) << " parameter entries on " << g.n
            << " vertices\n";
        return rec.timed_out.empty() ? 0 : 3;
    }

    if (c_cmd->parsed()) {
        auto kind = family_from_name(c_family);
        if (!kind) throw std::invalid_argument("unknown family: " + c_family);
        json j;
        bool all_valid = true;
        if (*kind == Family::fpq) {
            if (c_t.empty() || c_r.empty() || c_rp.empty())
                throw std::invalid_argument("fpq needs --t, --r and --rp lists");
            auto bundle = fpq_certificates(c_t, c_r, c_rp);
            j["graph"] = graph_json(bundle.graph);
            j["certificates"] = {{"rdf", construction_json(bundle.rdf)},
                                 {"trdf", construction_json(bundle.trdf)},
                                 {"toi_set", set_construction_json(bundle.toi_set)},
                                 {"oirdf", construction_json(bundle.oirdf)},
                                 {"oitrdf", construction_json(bundle.oitrdf)}};
            all_valid = bundle.rdf.checked.valid && bundle.trdf.checked.valid &&
                        bundle.toi_set.checked.holds && bundle.oirdf.checked.valid &&
                        bundle.oitrdf.checked.valid;
        } else {
            ConstructionOutcome oc;
            switch (*kind) {
                case Family::complete:
                case Family::complete_bipartite:
                case Family::wheel:
                    oc = oitrdf_closed_family(*kind, c_params);
                    break;
                case Family::circulant:
                    if (c_params.size() != 2)
                        throw std::invalid_argument("circulant expects two parameters");
                    oc = oitrdf_circulant(static_cast<int>(c_params[0]),
                                          static_cast<int>(c_params[1]));
                    break;
                case Family::sierpinski:
                    if (c_params.size() != 2)
                        throw std::invalid_argument("sierpinski expects two parameters");
                    oc = oitrdf_sierpinski(static_cast<int>(c_params[0]),
                                           static_cast<int>(c_params[1]));
                    break;
                case Family::cartesian_kk:
                case Family::direct_kk:
                case Family::strong_kk:
                case Family::lexicographic_kk: {
                    if (c_params.size() != 2)
                        throw std::invalid_argument("product expects two parameters");
                    const ProductKind pk = *kind == Family::cartesian_kk ? ProductKind::cartesian
                                           : *kind == Family::direct_kk ? ProductKind::direct
                                           : *kind == Family::strong_kk ? ProductKind::strong
                                                                        : ProductKind::lexicographic;
                    oc = oitrdf_product_kk(pk, static_cast<int>(c_params[0]),
                                           static_cast<int>(c_params[1]));
                    break;
                }
                default:
                    throw std::invalid_argument("no construction for family " + c_family);
            }
            j = construction_json(oc);
            all_valid = oc.checked.valid;
        }
        out << j.dump(2) << "\n";
        err << (all_valid ? "construction checked: valid\n"
                          : "construction checked: INVALID, see report\n");
        return all_valid ? 0 : 1;
    }

    if (v_cmd->parsed()) {
        const Graph g = load_edge_list(v_file);
        const auto variant = variant_from_name(v_variant);
        if (!variant) throw std::invalid_argument("unknown variant: " + v_variant);
        const RomanLabeling f = labeling_from_digits(g, v_labeling);
        const auto res = validate(g, f, *variant);
        json j;
        j["graph"] = graph_json(g);
        j["labeling"] = f.digits();
        j["weight"] = f.weight();
        j["check"] = validation_json(res);
        out << j.dump(2) << "\n";
        err << (res.valid ? "valid " : "invalid ") << variant_name(*variant) << ", weight "
            << f.weight() << "\n";
        return 0;
    }

    if (a_cmd->parsed()) {
        if (a_families.empty() && !a_random)
            throw std::invalid_argument("audit needs --family instances and/or --random");
        std::vector<FamilySpec> specs;
        for (const auto& s : a_families) specs.push_back(detail::family_spec_from_compact(s));
        std::optional<RandomCorpusSpec> rand_spec;
        if (a_random) rand_spec = RandomCorpusSpec{a_count, a_max_n, a_edge_prob, a_seed};
        long long budget_ms = a_timeout;
        if (budget_ms < 0)
            if (auto env = detail::env_timeout_ms()) budget_ms = *env;
        const auto summary = audit_corpus(specs, rand_spec, budget_ms);
        out << audit_json(summary, a_reports).dump(2) << "\n";
        err << "audited " << summary.graphs << " graphs (" << summary.skipped << " skipped): "
            << summary.applicable << " applicable instances, " << summary.violations.size()
            << " violations\n";
        if (!summary.violations.empty()) return 2;
        if (summary.skipped > 0) return 3;
        return 0;
    }

    if (b_cmd->parsed()) return detail::cmd_batch(b_manifest, out, err);
    } catch (const CLI::Error&) {
        throw;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    return 1;
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace oitrd::cli
