#ifndef SIMISCALC_SUPPORT2_HPP
#define SIMISCALC_SUPPORT2_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "simiscalc/graph.hpp"
#include "simiscalc/ideal.hpp"

namespace simiscalc {

/// All generators supported on one edge {x_i, x_j}, i < j. The (w_ij, w_ji)
/// exponent pairs are sorted with w_ij strictly decreasing; minimality of the
/// generating set forces w_ji strictly increasing.
struct EdgeProfile {
    int i = 0, j = 0;
    std::vector<std::pair<Exponent, Exponent>> pairs;

    int alpha() const { return static_cast<int>(pairs.size()); }
    Exponent mu_i() const { return pairs.front().first; }  // max exponent of x_i
    Exponent nu_i() const { return pairs.back().first; }   // min exponent of x_i
    Exponent mu_j() const { return pairs.back().second; }  // max exponent of x_j
    Exponent nu_j() const { return pairs.front().second; } // min exponent of x_j
};

/// Per-edge exponent tables of a support-2 ideal. The edge set is the edge set
/// of the underlying simple graph, and flattening the tables reproduces the
/// minimal generating set exactly.
struct Support2Profile {
    int nvars = 0;
    std::map<std::pair<int, int>, EdgeProfile> edges; // keyed by (i, j), i < j

    const EdgeProfile* edge(int a, int b) const {
        auto it = edges.find(std::minmax(a, b));
        return it == edges.end() ? nullptr : &it->second;
    }

    /// Number of generators on edge {a,b}; 0 when not an edge.
    int alpha(int a, int b) const {
        const EdgeProfile* e = edge(a, b);
        return e ? e->alpha() : 0;
    }

    /// w^t_{a,b}: exponent of x_a in the t-th generator on edge {a,b}.
    /// Generators are numbered by descending exponent of the smaller-index
    /// variable, so for a > b this sequence ascends in t (partner indexing).
    /// 1-based t.
    Exponent w(int a, int b, int t) const {
        const EdgeProfile* e = require_edge(a, b);
        if (t < 1 || t > e->alpha()) throw DomainError("generator index out of range");
        const auto& p = e->pairs[static_cast<std::size_t>(t - 1)];
        return a < b ? p.first : p.second;
    }

    Exponent w1(int a, int b) const { return w(a, b, 1); }

    /// The (exp of x_a, exp of x_b) pairs of edge {a,b}, resorted so the x_a
    /// exponents strictly decrease. Formulas that bind an edge generically
    /// assume this normalization for whichever endpoint they name first.
    std::vector<std::pair<Exponent, Exponent>> oriented_pairs(int a, int b) const {
        const EdgeProfile* e = require_edge(a, b);
        std::vector<std::pair<Exponent, Exponent>> out;
        out.reserve(e->pairs.size());
        if (a < b) {
            out = e->pairs;
        } else {
            for (auto it = e->pairs.rbegin(); it != e->pairs.rend(); ++it)
                out.emplace_back(it->second, it->first);
        }
        return out;
    }

    /// Maximum exponent of x_a among the generators on edge {a,b}.
    Exponent mu(int a, int b) const {
        const EdgeProfile* e = require_edge(a, b);
        return a < b ? e->mu_i() : e->mu_j();
    }

    /// Minimum exponent of x_a among the generators on edge {a,b}.
    Exponent nu(int a, int b) const {
        const EdgeProfile* e = require_edge(a, b);
        return a < b ? e->nu_i() : e->nu_j();
    }

    /// The underlying simple graph G(I): edges are the support pairs.
    SimpleGraph graph() const {
        SimpleGraph g(nvars);
        for (const auto& [key, e] : edges) g.add_edge(key.first, key.second);
        return g;
    }

    /// Flatten the tables back into the ideal they came from.
    MonomialIdeal ideal() const {
        std::vector<Monomial> gens;
        for (const auto& [key, e] : edges)
            for (const auto& [wi, wj] : e.pairs) {
                std::vector<Exponent> exp(static_cast<std::size_t>(nvars), 0);
                exp[static_cast<std::size_t>(key.first - 1)] = wi;
                exp[static_cast<std::size_t>(key.second - 1)] = wj;
                gens.emplace_back(std::move(exp));
            }
        return MonomialIdeal(nvars, std::move(gens));
    }

private:
    const EdgeProfile* require_edge(int a, int b) const {
        const EdgeProfile* e = edge(a, b);
        if (!e) throw DomainError("no edge {" + std::to_string(a) + "," +
                                  std::to_string(b) + "} in profile");
        return e;
    }
};

/// Partition the generators of a support-2 ideal by support pair. Any
/// generator with support size != 2 is a hard error naming the offender;
/// the algebra core stays general, this is the classification boundary.
inline Support2Profile analyze(const MonomialIdeal& I) {
    detail::check_proper_nonzero(I, "analyze");
    Support2Profile p;
    p.nvars = I.nvars();
    for (const Monomial& g : I.generators()) {
        auto s = g.support();
        if (s.size() != 2)
            throw NotSupport2Error("generator " + to_string(g) +
                                   " has support size " + std::to_string(s.size()) +
                                   ", not 2");
        EdgeProfile& e = p.edges[{s[0], s[1]}];
        e.i = s[0];
        e.j = s[1];
        e.pairs.emplace_back(g.exponent(s[0]), g.exponent(s[1]));
    }
    for (auto& [key, e] : p.edges) {
        std::sort(e.pairs.begin(), e.pairs.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        for (std::size_t t = 1; t < e.pairs.size(); ++t)
            if (e.pairs[t - 1].first <= e.pairs[t].first ||
                e.pairs[t - 1].second >= e.pairs[t].second)
                throw Error("internal: edge table not strictly monotone");
    }
    return p;
}

/// A standard linear weighting: positive integers d_1..d_n acting by
/// x_i -> x_i^{d_i}.
struct StandardWeighting {
    std::vector<Exponent> d; // d[0] unused; 1-based

    Exponent of(int var) const { return d[static_cast<std::size_t>(var)]; }
};

/// Present iff every edge carries a single generator and each vertex shows one
/// consistent exponent toward all its neighbors; that exponent is d_i.
/// Isolated variables are unconstrained and get the canonical d_i = 1.
inline std::optional<StandardWeighting> detect_standard_weighting(
    const Support2Profile& p) {
    StandardWeighting w;
    w.d.assign(static_cast<std::size_t>(p.nvars) + 1, 0);
    for (const auto& [key, e] : p.edges) {
        if (e.alpha() != 1) return std::nullopt;
        for (auto [v, exp] : {std::pair{e.i, e.pairs[0].first},
                              std::pair{e.j, e.pairs[0].second}}) {
            Exponent& d = w.d[static_cast<std::size_t>(v)];
            if (d == 0) d = exp;
            else if (d != exp) return std::nullopt;
        }
    }
    for (std::size_t v = 1; v < w.d.size(); ++v)
        if (w.d[v] == 0) w.d[v] = 1;
    return w;
}

/// J_w: substitute x_i -> x_i^{d_i} in a squarefree ideal.
inline MonomialIdeal apply_weighting(const MonomialIdeal& J,
                                     const StandardWeighting& w) {
    if (!is_squarefree(J)) throw DomainError("apply_weighting: ideal not squarefree");
    if (static_cast<int>(w.d.size()) != J.nvars() + 1)
        throw DomainError("apply_weighting: weighting has wrong arity");
    std::vector<Monomial> gens;
    gens.reserve(J.generator_count());
    for (const Monomial& g : J.generators()) {
        std::vector<Exponent> e(static_cast<std::size_t>(J.nvars()), 0);
        for (int v : g.support()) {
            if (w.of(v) < 1) throw DomainError("apply_weighting: d_i must be >= 1");
            e[static_cast<std::size_t>(v - 1)] = w.of(v);
        }
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(J.nvars(), std::move(gens));
}

/// Polarization: every x_i^{a_i} becomes a product of a_i distinct variables
/// x_{i,1}..x_{i,a_i}. The polarized ring has one block of p_i variables per
/// original variable, p_i being the largest exponent of x_i across the
/// generators; blocks are flattened into a single index space.
struct Polarization {
    MonomialIdeal ideal;            // squarefree, over sum(p_i) variables
    int original_nvars = 0;
    std::vector<Exponent> block;    // block[v] = p_v, 1-based
    std::vector<int> offset;        // offset[v] = flat index before block v

    Polarization() : ideal(MonomialIdeal::zero(0)) {}

    /// Flat 1-based index of x_{v,k}, 1 <= k <= p_v.
    int flat_index(int v, Exponent k) const {
        if (v < 1 || v > original_nvars || k < 1 ||
            k > block[static_cast<std::size_t>(v)])
            throw DomainError("polarized variable out of range");
        return offset[static_cast<std::size_t>(v)] + static_cast<int>(k);
    }

    /// Inverse of flat_index: (original variable, copy number).
    std::pair<int, Exponent> var_of_flat(int f) const {
        for (int v = 1; v <= original_nvars; ++v) {
            int lo = offset[static_cast<std::size_t>(v)];
            if (f > lo && f <= lo + block[static_cast<std::size_t>(v)])
                return {v, f - lo};
        }
        throw DomainError("flat polarized index out of range");
    }
};

inline Polarization polarize(const MonomialIdeal& I) {
    detail::check_proper_nonzero(I, "polarize");
    const int n = I.nvars();
    Polarization p;
    p.original_nvars = n;
    p.block.assign(static_cast<std::size_t>(n) + 1, 0);
    p.offset.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v)
        p.block[static_cast<std::size_t>(v)] = max_exponent(I, v);
    int total = 0;
    for (int v = 1; v <= n; ++v) {
        p.offset[static_cast<std::size_t>(v)] = total;
        total += static_cast<int>(p.block[static_cast<std::size_t>(v)]);
    }
    std::vector<Monomial> gens;
    gens.reserve(I.generator_count());
    for (const Monomial& g : I.generators()) {
        std::vector<Exponent> e(static_cast<std::size_t>(total), 0);
        for (int v = 1; v <= n; ++v)
            for (Exponent k = 1; k <= g.exponent(v); ++k)
                e[static_cast<std::size_t>(p.flat_index(v, k) - 1)] = 1;
        gens.emplace_back(std::move(e));
    }
    p.ideal = MonomialIdeal(total, std::move(gens));
    return p;
}

/// Substitute x_{i,j} -> x_i; inverts polarize.
inline MonomialIdeal depolarize(const Polarization& p) {
    std::vector<Monomial> gens;
    gens.reserve(p.ideal.generator_count());
    for (const Monomial& g : p.ideal.generators()) {
        std::vector<Exponent> e(static_cast<std::size_t>(p.original_nvars), 0);
        for (int f = 1; f <= g.nvars(); ++f) {
            if (g.exponent(f) == 0) continue;
            auto [v, k] = p.var_of_flat(f);
            e[static_cast<std::size_t>(v - 1)] =
                checked_add(e[static_cast<std::size_t>(v - 1)],
                            g.exponent(f));
        }
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(p.original_nvars, std::move(gens));
}

/// Condition for the whiskered Cohen-Macaulay classification: every whisker
/// edge carries one generator whose core exponent dominates the core's
/// exponents toward all core neighbors. Indices are relabeled positions.
inline bool whisker_dominance_condition(const Support2Profile& relabeled, int m) {
    for (int i = 1; i <= m; ++i) {
        if (relabeled.alpha(i, m + i) != 1) return false;
        Exponent wi = relabeled.w1(i, m + i);
        for (int j = 1; j <= m; ++j)
            if (j != i && relabeled.alpha(i, j) >= 1 && wi < relabeled.mu(i, j))
                return false;
    }
    return true;
}

/// Identify each core with its whisker: x_i = x_{m+i} = u_i. The result is an
/// Artinian ideal over u_1..u_m whose polarization coincides with the
/// polarization of the original ideal. Requires the dominance condition.
inline MonomialIdeal artinian_fold(const Support2Profile& p,
                                   const WhiskerStructure& w) {
    Support2Profile rp = analyze(relabel_variables(p.ideal(), w.to_new));
    const int m = w.m;
    if (!whisker_dominance_condition(rp, m))
        throw DomainError("artinian_fold: whisker exponents do not dominate "
                          "the core exponents");
    std::vector<Monomial> gens;
    for (int i = 1; i <= m; ++i) {
        Exponent pure = checked_add(rp.w1(i, m + i), rp.w1(m + i, i));
        gens.push_back(Monomial::variable(m, i, pure));
    }
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int t = 1; t <= rp.alpha(i, j); ++t) {
                std::vector<Exponent> e(static_cast<std::size_t>(m), 0);
                e[static_cast<std::size_t>(i - 1)] = rp.w(i, j, t);
                e[static_cast<std::size_t>(j - 1)] = rp.w(j, i, t);
                gens.emplace_back(std::move(e));
            }
    MonomialIdeal J(m, std::move(gens));
    for (int i = 1; i <= m; ++i)
        if (max_exponent(J, i) == 0 ||
            std::none_of(J.generators().begin(), J.generators().end(),
                         [&](const Monomial& g) {
                             return g.support_size() == 1 && g.exponent(i) > 0;
                         }))
            throw Error("internal: folded ideal is not Artinian");
    return J;
}

/// The polarization identity behind the whiskered Cohen-Macaulay theorem:
/// polarizing the relabeled ideal gives the polarization of its Artinian fold
/// once the u_i blocks are split as (x_i block, then x_{m+i} block).
inline bool whisker_polarization_identity(const Support2Profile& p,
                                          const WhiskerStructure& w) {
    MonomialIdeal relabeled = relabel_variables(p.ideal(), w.to_new);
    Support2Profile rp = analyze(relabeled);
    const int m = w.m;
    MonomialIdeal J = artinian_fold(p, w);
    Polarization PI = polarize(relabeled);
    Polarization PJ = polarize(J);
    if (PI.ideal.nvars() != PJ.ideal.nvars()) return false;
    // phi: u_{i,l} -> x_{i,l} for l <= w1(i, m+i), else x_{m+i, l - w1(i, m+i)}.
    std::vector<int> phi(static_cast<std::size_t>(PJ.ideal.nvars()) + 1, 0);
    for (int f = 1; f <= PJ.ideal.nvars(); ++f) {
        auto [i, l] = PJ.var_of_flat(f);
        Exponent split = rp.w1(i, m + i);
        phi[static_cast<std::size_t>(f)] =
            l <= split ? PI.flat_index(i, l) : PI.flat_index(m + i, l - split);
    }
    return relabel_variables(PJ.ideal, phi) == PI.ideal;
}

} // namespace simiscalc

#endif
