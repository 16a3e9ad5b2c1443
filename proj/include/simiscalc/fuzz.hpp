#ifndef SIMISCALC_FUZZ_HPP
#define SIMISCALC_FUZZ_HPP

#include <atomic>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "simiscalc/parse.hpp"
#include "simiscalc/predicates.hpp"

namespace simiscalc {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Seeded generator with pinned sampling, so campaigns replay identically on
/// any platform (std::uniform_int_distribution is implementation-defined and
/// is deliberately avoided).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant at fuzz scale.
    std::int64_t bounded(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return next() & 1; }

    /// k distinct values from [1, limit], descending.
    std::vector<Exponent> distinct_descending(int k, Exponent limit) {
        std::vector<Exponent> pool;
        for (Exponent e = 1; e <= limit; ++e) pool.push_back(e);
        // Partial Fisher-Yates from the back, then sort the chosen suffix.
        for (int t = 0; t < k; ++t) {
            auto idx = static_cast<std::size_t>(
                bounded(0, static_cast<std::int64_t>(pool.size()) - 1 - t));
            std::swap(pool[idx], pool[pool.size() - 1 - static_cast<std::size_t>(t)]);
        }
        std::vector<Exponent> out(pool.end() - k, pool.end());
        std::sort(out.rbegin(), out.rend());
        return out;
    }

private:
    std::mt19937_64 eng_;
};

inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return Rng(splitmix64(seed) ^ splitmix64(trial + 0x51ed270b0a1ull));
}

/// One campaign configuration. `n` is the cycle length / variable count; for
/// the whisker family it is the core size m. Runs replay from (seed, config).
struct FuzzConfig {
    std::string family = "random-support2"; // random-support2 | cycle | whisker | c3
    int trials = 100;
    std::uint64_t seed = 0;
    Exponent max_exponent = 3; // E
    int max_alpha = 2;         // A
    int n = 5;                 // n, or m for whisker
    int s_max = 4;
};

namespace fuzzgen {

/// Append the generators of one edge {i,j}: alpha in [1, min(A, E)] pairs with
/// strictly decreasing x_i exponents and strictly increasing x_j exponents,
/// all drawn from [1, E].
inline void add_edge_generators(Rng& rng, std::vector<Monomial>& gens, int nvars,
                                int i, int j, Exponent E, int A) {
    int max_alpha = static_cast<int>(std::min<Exponent>(A, E));
    int alpha = static_cast<int>(rng.bounded(1, max_alpha));
    auto wi = rng.distinct_descending(alpha, E); // descending
    auto wj = rng.distinct_descending(alpha, E); // descending; reversed below
    for (int t = 0; t < alpha; ++t) {
        std::vector<Exponent> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i - 1)] = wi[static_cast<std::size_t>(t)];
        e[static_cast<std::size_t>(j - 1)] =
            wj[static_cast<std::size_t>(alpha - 1 - t)];
        gens.emplace_back(std::move(e));
    }
}

/// Random support-2 ideal: each pair becomes an edge with probability 1/2
/// (at least one edge forced), then per-edge tables.
inline MonomialIdeal random_support2(Rng& rng, int n, Exponent E, int A) {
    std::vector<std::pair<int, int>> edges;
    do {
        edges.clear();
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng.coin()) edges.emplace_back(i, j);
    } while (edges.empty());
    std::vector<Monomial> gens;
    for (auto [i, j] : edges) add_edge_generators(rng, gens, n, i, j, E, A);
    return MonomialIdeal(n, std::move(gens));
}

/// Support-2 ideal on the cycle 1-2-...-n-1.
inline MonomialIdeal cycle(Rng& rng, int n, Exponent E, int A) {
    if (n < 3) throw DomainError("cycle family needs n >= 3");
    std::vector<Monomial> gens;
    for (int i = 1; i <= n; ++i) {
        int j = i == n ? 1 : i + 1;
        add_edge_generators(rng, gens, n, std::min(i, j), std::max(i, j), E, A);
    }
    return MonomialIdeal(n, std::move(gens));
}

/// Support-2 ideal on a whiskered graph: H Erdos-Renyi (p = 1/2) on 1..m,
/// whisker edges {i, m+i}. The planted labels already match the canonical
/// whisker relabeling.
inline MonomialIdeal whisker(Rng& rng, int m, Exponent E, int A) {
    if (m < 1) throw DomainError("whisker family needs m >= 1");
    const int n = 2 * m;
    std::vector<Monomial> gens;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (rng.coin()) add_edge_generators(rng, gens, n, i, j, E, A);
    for (int i = 1; i <= m; ++i)
        add_edge_generators(rng, gens, n, i, m + i, E, A);
    return MonomialIdeal(n, std::move(gens));
}

/// Support-2 ideal on the triangle.
inline MonomialIdeal c3(Rng& rng, Exponent E, int A) {
    std::vector<Monomial> gens;
    add_edge_generators(rng, gens, 3, 1, 2, E, A);
    add_edge_generators(rng, gens, 3, 1, 3, E, A);
    add_edge_generators(rng, gens, 3, 2, 3, E, A);
    return MonomialIdeal(3, std::move(gens));
}

inline MonomialIdeal instance(const FuzzConfig& cfg, std::uint64_t trial) {
    Rng rng = trial_rng(cfg.seed, trial);
    if (cfg.family == "random-support2")
        return random_support2(rng, cfg.n, cfg.max_exponent, cfg.max_alpha);
    if (cfg.family == "cycle")
        return cycle(rng, cfg.n, cfg.max_exponent, cfg.max_alpha);
    if (cfg.family == "whisker")
        return whisker(rng, cfg.n, cfg.max_exponent, cfg.max_alpha);
    if (cfg.family == "c3") return c3(rng, cfg.max_exponent, cfg.max_alpha);
    throw DomainError("unknown fuzz family: " + cfg.family);
}

} // namespace fuzzgen

/// Everything recorded about one fuzz trial. `discrepancy` marks a verdict
/// whose cross-check contradicted direct computation or a witness that failed
/// verification; the instance text makes the trial replayable on its own.
struct TrialOutcome {
    std::uint64_t trial = 0;
    std::string instance;
    std::vector<PredicateVerdict> verdicts;
    bool discrepancy = false;
    std::string detail;
};

struct CampaignReport {
    FuzzConfig config;
    int trials_run = 0;
    int verdicts_applicable = 0;
    int witnesses_verified = 0;
    std::vector<TrialOutcome> discrepancies;
};

namespace detail {

inline void scan_for_discrepancy(TrialOutcome& out) {
    for (const PredicateVerdict& v : out.verdicts) {
        if (!v.applicable) continue;
        if (v.cross_check && !*v.cross_check) {
            out.discrepancy = true;
            out.detail += v.predicate + ": cross-check failed; ";
        }
        if (v.witness && !v.witness->verified) {
            out.discrepancy = true;
            out.detail += v.predicate + ": witness unverified; ";
        }
    }
}

/// The checks a family runs on each instance. Every predicate whose
/// hypotheses hold is exercised; inapplicable verdicts are kept out of the
/// outcome to keep reports small.
inline TrialOutcome run_trial(const FuzzConfig& cfg, std::uint64_t trial) {
    TrialOutcome out;
    out.trial = trial;
    MonomialIdeal I = fuzzgen::instance(cfg, trial);
    out.instance = "vars: " + std::to_string(I.nvars()) + "; " + to_string(I);
    Support2Profile p = analyze(I);
    SimpleGraph g = p.graph();

    std::vector<PredicateVerdict> all;
    if (cfg.family == "cycle") {
        all.push_back(thm_cycle_classification(p, cfg.s_max));
        for (const auto& [key, e] : p.edges) {
            all.push_back(prop_girth6(p, key.first, key.second));
            all.push_back(prop_leaf_embedded(p, key.first, key.second));
        }
        auto cyc = recognize_cycle(g);
        bool multi = std::any_of(p.edges.begin(), p.edges.end(),
                                 [](const auto& kv) { return kv.second.alpha() >= 2; });
        if (cyc && (*cyc == 4 || *cyc == 5) && multi) {
            PredicateVerdict v;
            v.predicate = "witness_small_cycle_multigen";
            v.applicable = true;
            v.witness = witness_small_cycle_multigen(p);
            v.prediction = true;
            v.cross_check = v.witness->verified;
            all.push_back(std::move(v));
        }
    } else if (cfg.family == "whisker") {
        all.push_back(thm_whisker_cm(p));
        all.push_back(thm_whisker_second_power(p));
    } else if (cfg.family == "c3") {
        all.push_back(prop_c3_maximal(p));
        all.push_back(thm_support2_simis(p, cfg.s_max));
    } else {
        all.push_back(thm_support2_simis(p, cfg.s_max));
        bool minimal = is_decomposition_minimal(I);
        if (minimal) {
            for (const auto& [key, e] : p.edges)
                if (e.alpha() >= 2) {
                    PredicateVerdict v;
                    v.predicate = "witness_multigen";
                    v.applicable = true;
                    v.witness = witness_multigen(p, key.first, key.second);
                    v.prediction = true;
                    v.cross_check = v.witness->verified;
                    all.push_back(std::move(v));
                    break;
                }
        }
        for (const auto& [key, e] : p.edges)
            all.push_back(prop_leaf_embedded(p, key.first, key.second));
    }

    // Embedded-prime routes must agree on every family.
    {
        PredicateVerdict v;
        v.predicate = "embedded_primes_two_routes";
        v.applicable = true;
        bool via_symbolic = has_embedded_primes_via_saturation_free_check(I);
        bool via_ass = !embedded_primes(I).empty();
        v.find("via_symbolic_power", via_symbolic);
        v.find("via_associated_primes", via_ass);
        v.cross_check = via_symbolic == via_ass;
        all.push_back(std::move(v));
    }

    for (PredicateVerdict& v : all)
        if (v.applicable) out.verdicts.push_back(std::move(v));
    scan_for_discrepancy(out);
    return out;
}

} // namespace detail

/// Run a campaign; trials are independent and may run on several threads, and
/// the merge is by trial index, so the report is schedule-independent.
inline CampaignReport run_campaign(const FuzzConfig& cfg, int jobs = 1) {
    CampaignReport report;
    report.config = cfg;
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(cfg.trials));
    if (jobs <= 1) {
        for (int t = 0; t < cfg.trials; ++t)
            outcomes[static_cast<std::size_t>(t)] =
                detail::run_trial(cfg, static_cast<std::uint64_t>(t));
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int t = next.fetch_add(1); t < cfg.trials; t = next.fetch_add(1))
                outcomes[static_cast<std::size_t>(t)] =
                    detail::run_trial(cfg, static_cast<std::uint64_t>(t));
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    for (TrialOutcome& out : outcomes) {
        ++report.trials_run;
        for (const PredicateVerdict& v : out.verdicts) {
            ++report.verdicts_applicable;
            if (v.witness && v.witness->verified) ++report.witnesses_verified;
        }
        if (out.discrepancy) report.discrepancies.push_back(std::move(out));
    }
    return report;
}

} // namespace simiscalc

#endif
