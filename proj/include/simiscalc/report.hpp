#ifndef SIMISCALC_REPORT_HPP
#define SIMISCALC_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "simiscalc/decomposition.hpp"
#include "simiscalc/predicates.hpp"
#include "simiscalc/support2.hpp"
#include "simiscalc/symbolic.hpp"

namespace simiscalc {

using nlohmann::json;

/// FNV-1a over the canonical input rendering; stable across runs and
/// platforms, which is all a report digest needs.
inline std::string input_digest(std::string_view canonical) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

inline json to_json(const Monomial& m) { return to_string(m); }

inline json to_json(const MonomialIdeal& I) {
    json gens = json::array();
    for (const Monomial& g : I.generators()) gens.push_back(to_string(g));
    return json{{"vars", I.nvars()}, {"generators", gens}};
}

inline json exponent_rows(const MonomialIdeal& I) {
    json rows = json::array();
    for (const Monomial& g : I.generators()) {
        json row = json::array();
        for (Exponent e : g.exponents()) row.push_back(e);
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const PrimeSupport& p) {
    json vars = json::array();
    for (int v : p.vars) vars.push_back(v);
    return json{{"vars", vars}, {"height", p.height()}};
}

inline json to_json(const Decomposition& d) {
    json comps = json::array();
    for (const MonomialIdeal& c : d.components) {
        json item = to_json(c);
        item["radical"] = to_json(radical_support(c));
        comps.push_back(item);
    }
    return json{{"kind", d.kind == DecompositionKind::Irreducible ? "irreducible"
                                                                  : "primary"},
                {"components", comps}};
}

inline json to_json(const SimisVerdict& v) {
    json j{{"degree", v.degree_checked}, {"holds", v.holds}};
    if (v.witness) j["witness"] = to_string(*v.witness);
    return j;
}

inline json to_json(const MembershipClaim& c) {
    return json{{"kind", to_string(c.kind)}, {"degree", c.degree}};
}

inline json to_json(const WitnessReport& w) {
    return json{{"monomial", to_string(w.monomial)},
                {"claimed_in", to_json(w.claimed_in)},
                {"claimed_not_in", to_json(w.claimed_not_in)},
                {"verified", w.verified}};
}

inline json to_json(const PredicateVerdict& v) {
    json j{{"predicate", v.predicate}, {"applicable", v.applicable}};
    if (!v.note.empty()) j["note"] = v.note;
    if (v.prediction) j["prediction"] = *v.prediction;
    if (!v.findings.empty()) {
        json f = json::object();
        for (const auto& [k, val] : v.findings) f[k] = val;
        j["findings"] = f;
    }
    if (v.witness) j["certificate"] = to_json(*v.witness);
    if (v.cross_check) j["cross_check"] = *v.cross_check;
    return j;
}

inline json to_json(const EdgeProfile& e) {
    json pairs = json::array();
    for (auto [wi, wj] : e.pairs) pairs.push_back(json::array({wi, wj}));
    return json{{"i", e.i},       {"j", e.j},       {"pairs", pairs},
                {"alpha", e.alpha()}, {"mu_i", e.mu_i()}, {"nu_i", e.nu_i()},
                {"mu_j", e.mu_j()},   {"nu_j", e.nu_j()}};
}

inline json to_json(const Support2Profile& p) {
    json edges = json::array();
    for (const auto& [key, e] : p.edges) edges.push_back(to_json(e));
    return json{{"vars", p.nvars}, {"edges", edges}};
}

inline json to_json(const StandardWeighting& w) {
    json d = json::array();
    for (std::size_t v = 1; v < w.d.size(); ++v) d.push_back(w.d[v]);
    return d;
}

inline json to_json(const WhiskerStructure& w) {
    json core_of = json::object();
    for (auto [leaf, core] : w.core_of)
        core_of["x" + std::to_string(leaf)] = core;
    json relabel = json::array();
    for (std::size_t v = 1; v < w.to_new.size(); ++v) relabel.push_back(w.to_new[v]);
    return json{{"m", w.m}, {"core_of", core_of}, {"relabeling", relabel}};
}

inline json to_json(const Polarization& p) {
    json blocks = json::array();
    json map = json::object();
    for (int v = 1; v <= p.original_nvars; ++v) {
        blocks.push_back(p.block[static_cast<std::size_t>(v)]);
        for (Exponent k = 1; k <= p.block[static_cast<std::size_t>(v)]; ++k)
            map["x" + std::to_string(v) + "," + std::to_string(k)] =
                p.flat_index(v, k);
    }
    return json{{"ideal", to_json(p.ideal)},
                {"original_vars", p.original_nvars},
                {"blocks", blocks},
                {"variable_map", map}};
}

/// Wall-clock stopwatch for the report's timings block.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Uniform report envelope for every CLI command.
inline json make_report(const std::string& command, const std::string& canonical_input,
                        json result, json certificates, double wall_ms) {
    return json{{"command", command},
                {"input_digest", input_digest(canonical_input)},
                {"result", std::move(result)},
                {"certificates", std::move(certificates)},
                {"timings", json{{"wall_ms", wall_ms}}}};
}

} // namespace simiscalc

#endif
