#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace oitrd {

// The four Roman-domination flavours handled by this library.
//   RDF    - every 0-vertex has a 2-neighbor
//   TRDF   - RDF + the positive vertices induce no isolated vertex
//   OIRDF  - RDF + the 0-vertices form an independent set
//   OITRDF - all three conditions
enum class Variant { RDF, TRDF, OIRDF, OITRDF };

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::RDF: return "rdf";
        case Variant::TRDF: return "trdf";
        case Variant::OIRDF: return "oirdf";
        case Variant::OITRDF: return "oitrdf";
    }
    return "?";
}

inline std::optional<Variant> variant_from_name(const std::string& s) {
    if (s == "rdf") return Variant::RDF;
    if (s == "trdf") return Variant::TRDF;
    if (s == "oirdf") return Variant::OIRDF;
    if (s == "oitrdf") return Variant::OITRDF;
    return std::nullopt;
}

/// A function V(G) -> {0,1,2}, stored densely by vertex index.
struct RomanLabeling {
    std::vector<std::uint8_t> values;

    int weight() const {
        return std::accumulate(values.begin(), values.end(), 0,
                               [](int acc, std::uint8_t v) { return acc + v; });
    }

    std::vector<int> level_set(int level) const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(values.size()); ++v)
            if (values[static_cast<size_t>(v)] == level) out.push_back(v);
        return out;
    }

    // Digit-string form used in reports, e.g. "021100".
    std::string digits() const {
        std::string s;
        s.reserve(values.size());
        for (auto v : values) s.push_back(static_cast<char>('0' + v));
        return s;
    }

    bool operator==(const RomanLabeling&) const = default;
};

inline RomanLabeling make_labeling(const Graph& g, const std::vector<int>& values) {
    if (static_cast<int>(values.size()) != g.n)
        throw std::invalid_argument("labeling length " + std::to_string(values.size()) +
                                    " does not match graph order " + std::to_string(g.n));
    RomanLabeling f;
    f.values.reserve(values.size());
    for (int v : values) {
        if (v < 0 || v > 2)
            throw std::invalid_argument("label out of range {0,1,2}: " + std::to_string(v));
        f.values.push_back(static_cast<std::uint8_t>(v));
    }
    return f;
}

inline RomanLabeling labeling_from_digits(const Graph& g, const std::string& digits) {
    std::vector<int> vals;
    vals.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '2')
            throw std::invalid_argument(std::string("bad label digit '") + c + "'");
        vals.push_back(c - '0');
    }
    return make_labeling(g, vals);
}

enum class ViolationRule { zero_without_two_neighbor, zero_set_not_independent, positive_isolated };

inline const char* rule_name(ViolationRule r) {
    switch (r) {
        case ViolationRule::zero_without_two_neighbor: return "zero-without-two-neighbor";
        case ViolationRule::zero_set_not_independent: return "zero-set-not-independent";
        case ViolationRule::positive_isolated: return "positive-isolated";
    }
    return "?";
}

struct ValidationResult {
    bool valid = true;
    Variant variant = Variant::RDF;
    std::optional<ViolationRule> rule;
    std::optional<int> witness;  // lowest-index violating vertex
};

// Checks the rules required by `variant` in the fixed order
// (zero coverage, zero independence, positive non-isolation) and reports
// the first violated rule with its lowest-index witness.
inline ValidationResult validate(const Graph& g, const RomanLabeling& f, Variant variant) {
    if (static_cast<int>(f.values.size()) != g.n)
        throw std::invalid_argument("labeling does not match graph order");
    const bool need_independent = variant == Variant::OIRDF || variant == Variant::OITRDF;
    const bool need_total = variant == Variant::TRDF || variant == Variant::OITRDF;

    for (int v = 0; v < g.n; ++v) {
        if (f.values[static_cast<size_t>(v)] != 0) continue;
        bool has_two = false;
        for (int w : g.adj[v])
            if (f.values[static_cast<size_t>(w)] == 2) {
                has_two = true;
                break;
            }
        if (!has_two)
            return {false, variant, ViolationRule::zero_without_two_neighbor, v};
    }
    if (need_independent) {
        for (int v = 0; v < g.n; ++v) {
            if (f.values[static_cast<size_t>(v)] != 0) continue;
            for (int w : g.adj[v])
                if (f.values[static_cast<size_t>(w)] == 0)
                    return {false, variant, ViolationRule::zero_set_not_independent, v};
        }
    }
    if (need_total) {
        for (int v = 0; v < g.n; ++v) {
            if (f.values[static_cast<size_t>(v)] == 0) continue;
            bool has_positive = false;
            for (int w : g.adj[v])
                if (f.values[static_cast<size_t>(w)] != 0) {
                    has_positive = true;
                    break;
                }
            if (!has_positive)
                return {false, variant, ViolationRule::positive_isolated, v};
        }
    }
    return {true, variant, std::nullopt, std::nullopt};
}

}  // namespace oitrd
