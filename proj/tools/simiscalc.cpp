// simiscalc: symbolic vs ordinary powers of monomial ideals, support-2
// classification predicates, and a seeded fuzzing harness around them.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "simiscalc/fuzz.hpp"
#include "simiscalc/parse.hpp"
#include "simiscalc/report.hpp"

namespace {

using namespace simiscalc;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MonomialIdeal load_ideal(const std::string& path) {
    return to_ideal(parse_ideal_auto(read_file(path)));
}

struct Output {
    bool pretty = false;
    std::ostringstream text; // pretty rendering accumulates here

    void emit(const json& report) {
        if (pretty)
            std::cout << text.str();
        else
            std::cout << report.dump(2) << "\n";
    }
};

json to_json(const FuzzConfig& c) {
    return json{{"family", c.family},       {"trials", c.trials},
                {"seed", c.seed},           {"max_exponent", c.max_exponent},
                {"max_alpha", c.max_alpha}, {"n", c.n},
                {"s_max", c.s_max}};
}

json to_json(const TrialOutcome& t) {
    json verdicts = json::array();
    for (const PredicateVerdict& v : t.verdicts) verdicts.push_back(to_json(v));
    return json{{"trial", t.trial},
                {"instance", t.instance},
                {"verdicts", verdicts},
                {"discrepancy", t.discrepancy},
                {"detail", t.detail}};
}

int cmd_decompose(const std::string& path, Output& out) {
    Stopwatch clock;
    MonomialIdeal I = load_ideal(path);
    Decomposition irr = irreducible_decomposition(I);
    Decomposition prim = primary_decomposition(I);
    auto ass = associated_primes(I);
    auto min = minimal_primes(I);
    auto emb = embedded_primes(I);
    bool minimal = is_decomposition_minimal(I);

    json primes_json = json::object();
    json ass_j = json::array(), min_j = json::array(), emb_j = json::array();
    for (const auto& p : ass) ass_j.push_back(to_json(p));
    for (const auto& p : min) min_j.push_back(to_json(p));
    for (const auto& p : emb) emb_j.push_back(to_json(p));

    json result{{"ideal", to_json(I)},
                {"irreducible", to_json(irr)},
                {"primary", to_json(prim)},
                {"associated_primes", ass_j},
                {"minimal_primes", min_j},
                {"embedded_primes", emb_j},
                {"decomposition_minimal", minimal},
                {"unmixed", is_unmixed(I)}};
    if (out.pretty) {
        out.text << "ideal: " << to_string(I) << "\n";
        out.text << "irreducible components:\n";
        for (const auto& c : irr.components) out.text << "  <" << to_string(c) << ">\n";
        out.text << "primary components:\n";
        for (const auto& c : prim.components) out.text << "  <" << to_string(c) << ">\n";
        out.text << "minimal primes:";
        for (const auto& p : min) out.text << " " << to_string(p);
        out.text << "\nembedded primes:";
        if (emb.empty()) out.text << " none";
        for (const auto& p : emb) out.text << " " << to_string(p);
        out.text << "\nirreducible decomposition minimal: "
                 << (minimal ? "yes" : "no") << "\n";
    }
    out.emit(make_report("decompose", to_string(I), result, json::array(),
                         clock.elapsed_ms()));
    return 0;
}

int cmd_power(const std::string& path, int s, bool symbolic, Output& out) {
    Stopwatch clock;
    MonomialIdeal I = load_ideal(path);
    MonomialIdeal P = symbolic ? symbolic_power(I, s) : power(I, s);
    json result{{"ideal", to_json(I)},
                {"degree", s},
                {"symbolic", symbolic},
                {"power", to_json(P)}};
    if (out.pretty)
        out.text << (symbolic ? "I^(" : "I^") << s << (symbolic ? ")" : "")
                 << " = " << to_string(P) << "\n";
    out.emit(make_report("power", to_string(I), result, json::array(),
                         clock.elapsed_ms()));
    return 0;
}

int cmd_member(const std::string& path, const std::string& mono, int s,
               bool symbolic, Output& out) {
    Stopwatch clock;
    MonomialIdeal I = load_ideal(path);
    Monomial m = parse_monomial(mono, I.nvars());
    MonomialIdeal P = symbolic ? symbolic_power(I, s)
                               : (s == 1 ? I : power(I, s));
    bool member = contains_monomial(P, m);
    json result{{"ideal", to_json(I)},
                {"monomial", to_string(m)},
                {"degree", s},
                {"symbolic", symbolic},
                {"member", member}};
    if (out.pretty)
        out.text << to_string(m) << (member ? " is in " : " is NOT in ")
                 << (symbolic ? "I^(" + std::to_string(s) + ")"
                              : "I^" + std::to_string(s))
                 << "\n";
    out.emit(make_report("member", to_string(I) + "|" + to_string(m), result,
                         json::array(), clock.elapsed_ms()));
    return member ? 0 : 3;
}

int cmd_simis(const std::string& path, int max_degree, Output& out) {
    Stopwatch clock;
    MonomialIdeal I = load_ideal(path);
    json degrees = json::array();
    json certificates = json::array();
    std::optional<int> failed_at;
    for (int s = 1; s <= max_degree; ++s) {
        SimisVerdict v = is_simis_in_degree(I, s);
        degrees.push_back(to_json(v));
        if (out.pretty)
            out.text << "degree " << s << ": "
                     << (v.holds ? "I^(s) = I^s" : "I^(s) != I^s") << "\n";
        if (!v.holds) {
            failed_at = s;
            WitnessReport w = verify_witness(I, *v.witness, {PowerKind::Symbolic, s},
                                             {PowerKind::Ordinary, s});
            certificates.push_back(to_json(w));
            if (out.pretty)
                out.text << "witness: " << to_string(*v.witness) << " in I^(" << s
                         << ") \\ I^" << s << "\n";
            break;
        }
    }
    json result{{"ideal", to_json(I)},
                {"max_degree", max_degree},
                {"bounded", true},
                {"degrees", degrees},
                {"holds_up_to_bound", !failed_at.has_value()}};
    if (failed_at) result["failed_at_degree"] = *failed_at;
    if (out.pretty && !failed_at)
        out.text << "Simis in every degree up to " << max_degree
                 << " (bounded check)\n";
    out.emit(make_report("simis", to_string(I), result, certificates,
                         clock.elapsed_ms()));
    return failed_at ? 2 : 0;
}

int cmd_classify(const std::string& path, int max_degree, Output& out) {
    Stopwatch clock;
    MonomialIdeal I = load_ideal(path);
    Support2Profile p = analyze(I);
    SimpleGraph g = p.graph();

    json result{{"ideal", to_json(I)}, {"profile", to_json(p)}};
    json graph_facts{{"bipartite", is_bipartite(g)},
                     {"triangle_free", is_triangle_free(g)}};
    auto gi = girth(g);
    graph_facts["girth"] = gi ? json(*gi) : json(nullptr);
    auto cyc = recognize_cycle(g);
    graph_facts["cycle"] = cyc ? json(*cyc) : json(nullptr);
    auto wh = recognize_whisker(g);
    graph_facts["whisker"] = wh ? to_json(*wh) : json(nullptr);
    json lv = json::array();
    for (int l : leaves(g)) lv.push_back(l);
    graph_facts["leaves"] = lv;
    if (g.vertex_count() <= kCoverEnumerationBound) {
        json covers = json::array();
        for (const auto& c : minimal_vertex_covers(g)) covers.push_back(c);
        graph_facts["minimal_vertex_covers"] = covers;
    }
    result["graph"] = graph_facts;

    auto weighting = detect_standard_weighting(p);
    result["standard_weighting"] =
        weighting ? to_json(*weighting) : json(nullptr);
    if (weighting)
        result["standard_weighting_note"] =
            "d_i = 1 chosen for variables outside every edge";

    result["decomposition_minimal"] = is_decomposition_minimal(I);
    result["embedded_primes"] = !embedded_primes(I).empty();
    result["unmixed"] = is_unmixed(I);

    json verdicts = json::array();
    verdicts.push_back(to_json(thm_support2_simis(p, max_degree)));
    verdicts.push_back(to_json(thm_cycle_classification(p, max_degree)));
    verdicts.push_back(to_json(thm_whisker_cm(p)));
    verdicts.push_back(to_json(thm_whisker_second_power(p)));
    verdicts.push_back(to_json(prop_c3_maximal(p)));
    for (const auto& [key, e] : p.edges) {
        PredicateVerdict leaf = prop_leaf_embedded(p, key.first, key.second);
        PredicateVerdict girth6 = prop_girth6(p, key.first, key.second);
        for (PredicateVerdict* v : {&leaf, &girth6}) {
            if (!v->applicable) continue;
            v->find("edge", "{" + std::to_string(key.first) + "," +
                                std::to_string(key.second) + "}");
            verdicts.push_back(to_json(*v));
        }
    }
    result["predicates"] = verdicts;

    if (out.pretty) {
        out.text << "ideal: " << to_string(I) << "\n";
        out.text << "edges:\n";
        for (const auto& [key, e] : p.edges) {
            out.text << "  {" << key.first << "," << key.second << "} alpha="
                     << e.alpha() << " pairs=";
            for (auto [a, b] : e.pairs) out.text << "(" << a << "," << b << ")";
            out.text << "\n";
        }
        out.text << "bipartite: " << (is_bipartite(g) ? "yes" : "no")
                 << ", girth: " << (gi ? std::to_string(*gi) : "none")
                 << ", cycle: " << (cyc ? std::to_string(*cyc) : "no")
                 << ", whisker: " << (wh ? "yes" : "no") << "\n";
        out.text << "standard weighting: ";
        if (weighting) {
            out.text << "d = (";
            for (std::size_t v = 1; v < weighting->d.size(); ++v)
                out.text << (v > 1 ? "," : "") << weighting->d[v];
            out.text << ")";
        } else {
            out.text << "none";
        }
        out.text << "\n";
        for (const auto& v : verdicts)
            if (v["applicable"].get<bool>())
                out.text << "predicate " << v["predicate"].get<std::string>()
                         << ": prediction="
                         << (v.contains("prediction")
                                 ? (v["prediction"].get<bool>() ? "true" : "false")
                                 : "n/a")
                         << (v.contains("cross_check")
                                 ? std::string(", cross_check=") +
                                       (v["cross_check"].get<bool>() ? "ok" : "FAIL")
                                 : "")
                         << "\n";
    }
    out.emit(make_report("classify", to_string(I), result, json::array(),
                         clock.elapsed_ms()));
    return 0;
}

int cmd_polarize(const std::string& path, Output& out) {
    Stopwatch clock;
    MonomialIdeal I = load_ideal(path);
    Polarization p = polarize(I);
    json result{{"ideal", to_json(I)}, {"polarization", to_json(p)}};
    if (out.pretty) {
        out.text << "polarized ideal (" << p.ideal.nvars()
                 << " variables): " << to_string(p.ideal) << "\n";
        for (int v = 1; v <= p.original_nvars; ++v)
            for (Exponent k = 1; k <= p.block[static_cast<std::size_t>(v)]; ++k)
                out.text << "  x" << v << "," << k << " -> y"
                         << p.flat_index(v, k) << "\n";
    }
    out.emit(make_report("polarize", to_string(I), result, json::array(),
                         clock.elapsed_ms()));
    return 0;
}

int cmd_fuzz(const FuzzConfig& cfg, int jobs, const std::string& dump_dir,
             Output& out) {
    Stopwatch clock;
    CampaignReport report = run_campaign(cfg, jobs);
    json disc = json::array();
    for (const TrialOutcome& t : report.discrepancies) disc.push_back(to_json(t));
    json result{{"config", to_json(cfg)},
                {"trials_run", report.trials_run},
                {"verdicts_applicable", report.verdicts_applicable},
                {"witnesses_verified", report.witnesses_verified},
                {"discrepancies", disc}};
    // A discrepancy is either a bug or a publishable edge case; dump every one
    // as a standalone repro file and never retry.
    for (const TrialOutcome& t : report.discrepancies) {
        std::string file = dump_dir + "/fuzz-discrepancy-" + cfg.family + "-seed" +
                           std::to_string(cfg.seed) + "-trial" +
                           std::to_string(t.trial) + ".json";
        std::ofstream dump(file);
        dump << json{{"config", to_json(cfg)}, {"trial", to_json(t)}}.dump(2)
             << "\n";
        std::cerr << "discrepancy dumped to " << file << "\n";
    }
    if (out.pretty) {
        out.text << "family " << cfg.family << ": " << report.trials_run
                 << " trials, " << report.verdicts_applicable
                 << " applicable verdicts, " << report.witnesses_verified
                 << " verified witnesses, " << report.discrepancies.size()
                 << " discrepancies\n";
    }
    std::string digest_src = to_json(cfg).dump();
    out.emit(make_report("fuzz", digest_src, result, json::array(),
                         clock.elapsed_ms()));
    return report.discrepancies.empty() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic and ordinary powers of monomial ideals, with the "
                 "support-2 classification predicates"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

    std::string file, monomial;
    int degree = 1, max_degree = 4;
    bool symbolic = false;

    auto* decompose = app.add_subcommand("decompose", "irreducible and primary decompositions");
    decompose->add_option("file", file, "ideal file")->required();

    auto* powerc = app.add_subcommand("power", "ordinary or symbolic power");
    powerc->add_option("file", file)->required();
    powerc->add_option("-s,--degree", degree, "power degree")->default_val(1);
    powerc->add_flag("--symbolic", symbolic, "symbolic power I^(s)");

    auto* member = app.add_subcommand("member", "membership test (exit 3 if not a member)");
    member->add_option("file", file)->required();
    member->add_option("monomial", monomial)->required();
    member->add_option("-s,--degree", degree)->default_val(1);
    member->add_flag("--symbolic", symbolic);

    auto* simis = app.add_subcommand("simis", "compare I^(s) with I^s for s = 1..N");
    simis->add_option("file", file)->required();
    simis->add_option("--max-degree", max_degree)->default_val(4);

    auto* classify = app.add_subcommand("classify", "support-2 profile, graph facts, theorem predicates");
    classify->add_option("file", file)->required();
    classify->add_option("--max-degree", max_degree, "bound for Simis cross-checks")
        ->default_val(4);

    auto* polarizec = app.add_subcommand("polarize", "polarization and variable map");
    polarizec->add_option("file", file)->required();

    FuzzConfig cfg;
    int jobs = 1;
    std::string dump_dir = ".";
    auto* fuzz = app.add_subcommand("fuzz", "seeded campaign checking predicates against direct computation");
    fuzz->add_option("--family", cfg.family,
                     "random-support2 | cycle | whisker | c3")
        ->required();
    fuzz->add_option("--trials", cfg.trials)->default_val(100);
    fuzz->add_option("--seed", cfg.seed)->default_val(0);
    fuzz->add_option("--n", cfg.n, "variable/cycle count (m for whisker)")
        ->default_val(5);
    fuzz->add_option("--max-exponent", cfg.max_exponent)->default_val(3);
    fuzz->add_option("--max-alpha", cfg.max_alpha)->default_val(2);
    fuzz->add_option("--max-degree", cfg.s_max, "bound for Simis cross-checks")
        ->default_val(4);
    fuzz->add_option("--jobs", jobs, "parallel trial workers")->default_val(1);
    fuzz->add_option("--dump-dir", dump_dir, "where discrepancy repro files go");

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.pretty = pretty;
    try {
        if (app.got_subcommand(decompose)) return cmd_decompose(file, out);
        if (app.got_subcommand(powerc)) return cmd_power(file, degree, symbolic, out);
        if (app.got_subcommand(member))
            return cmd_member(file, monomial, degree, symbolic, out);
        if (app.got_subcommand(simis)) return cmd_simis(file, max_degree, out);
        if (app.got_subcommand(classify)) return cmd_classify(file, max_degree, out);
        if (app.got_subcommand(polarizec)) return cmd_polarize(file, out);
        if (app.got_subcommand(fuzz)) return cmd_fuzz(cfg, jobs, dump_dir, out);
    } catch (const simiscalc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
