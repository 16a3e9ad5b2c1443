#ifndef SIMISCALC_DECOMPOSITION_HPP
#define SIMISCALC_DECOMPOSITION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "simiscalc/ideal.hpp"

namespace simiscalc {

/// A monomial prime ideal <x_i : i in vars>, identified with its variable set.
struct PrimeSupport {
    std::vector<int> vars; // sorted, nonempty

    int height() const { return static_cast<int>(vars.size()); }

    MonomialIdeal to_ideal(int nvars) const {
        std::vector<Monomial> gens;
        gens.reserve(vars.size());
        for (int v : vars) gens.push_back(Monomial::variable(nvars, v));
        return MonomialIdeal(nvars, std::move(gens));
    }

    bool contains(const PrimeSupport& other) const {
        return std::includes(vars.begin(), vars.end(), other.vars.begin(),
                             other.vars.end());
    }

    friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
    friend auto operator<=>(const PrimeSupport& a, const PrimeSupport& b) {
        return a.vars <=> b.vars;
    }
};

inline std::string to_string(const PrimeSupport& p) {
    std::string out = "<";
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
        if (i) out += ",";
        out += "x" + std::to_string(p.vars[i]);
    }
    return out + ">";
}

/// An irreducible monomial ideal <x_i^{a_i} : i in keys>, all a_i >= 1.
struct IrreducibleComponent {
    std::map<int, Exponent> entries;

    MonomialIdeal to_ideal(int nvars) const {
        std::vector<Monomial> gens;
        gens.reserve(entries.size());
        for (auto [v, e] : entries) gens.push_back(Monomial::variable(nvars, v, e));
        return MonomialIdeal(nvars, std::move(gens));
    }

    PrimeSupport radical() const {
        PrimeSupport p;
        for (auto [v, e] : entries) p.vars.push_back(v);
        return p;
    }

    friend bool operator==(const IrreducibleComponent&,
                           const IrreducibleComponent&) = default;
};

enum class DecompositionKind { Irreducible, Primary };

/// An irredundant decomposition: the components intersect to the source ideal
/// and none contains the intersection of the others.
struct Decomposition {
    DecompositionKind kind = DecompositionKind::Irreducible;
    std::vector<MonomialIdeal> components;
};

/// Canonical order on ideals of one ambient: graded-lex on the generator
/// sequences. Keeps decomposition output schedule-independent.
inline bool ideal_less(const MonomialIdeal& a, const MonomialIdeal& b) {
    const auto& ga = a.generators();
    const auto& gb = b.generators();
    return std::lexicographical_compare(ga.begin(), ga.end(), gb.begin(), gb.end(),
                                        grlex_less);
}

namespace detail {

inline bool all_pure_powers(const MonomialIdeal& I) {
    return std::all_of(I.generators().begin(), I.generators().end(),
                       [](const Monomial& g) { return g.support_size() == 1; });
}

/// Recursive splitting: pick the first generator with support >= 2, split it
/// into the pure power of its least support variable times the rest, and
/// recurse on both replacements. Revisited subproblems are skipped (their
/// components are already collected).
inline void split_rec(const MonomialIdeal& I, std::set<std::string>& visited,
                      std::vector<MonomialIdeal>& out) {
    if (!visited.insert(to_string(I)).second) return;
    const Monomial* pivot = nullptr;
    for (const Monomial& g : I.generators())
        if (g.support_size() >= 2) {
            pivot = &g;
            break;
        }
    if (!pivot) {
        out.push_back(I);
        return;
    }
    const int n = I.nvars();
    const int v = pivot->support().front();
    Monomial left_part = Monomial::variable(n, v, pivot->exponent(v));
    std::vector<Exponent> rest(pivot->exponents().begin(), pivot->exponents().end());
    rest[static_cast<std::size_t>(v - 1)] = 0;
    Monomial right_part{std::move(rest)};

    std::vector<Monomial> base;
    base.reserve(I.generator_count());
    for (const Monomial& g : I.generators())
        if (g != *pivot) base.push_back(g);

    std::vector<Monomial> left = base, right = std::move(base);
    left.push_back(std::move(left_part));
    right.push_back(std::move(right_part));
    split_rec(MonomialIdeal(n, std::move(left)), visited, out);
    split_rec(MonomialIdeal(n, std::move(right)), visited, out);
}

/// Drop components until none contains the intersection of the others.
/// Pairwise containments are pruned first; the quadratic leave-one-out pass
/// then runs on the survivors only.
inline std::vector<MonomialIdeal> make_irredundant(std::vector<MonomialIdeal> comps,
                                                   int nvars) {
    std::sort(comps.begin(), comps.end(), ideal_less);
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

    std::vector<MonomialIdeal> kept;
    for (const MonomialIdeal& c : comps) {
        bool redundant = false;
        for (const MonomialIdeal& other : comps)
            if (other != c && contains_ideal(c, other)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(c);
    }

    bool changed = true;
    while (changed && kept.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<MonomialIdeal> others;
            others.reserve(kept.size() - 1);
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            if (contains_ideal(kept[i], intersect_all(nvars, std::move(others)))) {
                kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return kept;
}

} // namespace detail

/// The unique irredundant irreducible decomposition, components sorted
/// canonically.
inline Decomposition irreducible_decomposition(const MonomialIdeal& I) {
    detail::check_proper_nonzero(I, "irreducible_decomposition");
    std::set<std::string> visited;
    std::vector<MonomialIdeal> comps;
    detail::split_rec(I, visited, comps);
    comps = detail::make_irredundant(std::move(comps), I.nvars());
    if (intersect_all(I.nvars(), comps) != I)
        throw Error("internal: irreducible decomposition does not intersect back");
    return Decomposition{DecompositionKind::Irreducible, std::move(comps)};
}

inline std::vector<IrreducibleComponent> irreducible_components(
    const MonomialIdeal& I) {
    std::vector<IrreducibleComponent> out;
    for (const MonomialIdeal& c : irreducible_decomposition(I).components) {
        IrreducibleComponent ic;
        for (const Monomial& g : c.generators()) {
            int v = g.support().front();
            ic.entries[v] = g.exponent(v);
        }
        out.push_back(std::move(ic));
    }
    return out;
}

inline PrimeSupport radical_support(const MonomialIdeal& component) {
    PrimeSupport p;
    std::set<int> vars;
    for (const Monomial& g : component.generators())
        for (int v : g.support()) vars.insert(v);
    p.vars.assign(vars.begin(), vars.end());
    return p;
}

/// Ass(I): the radicals of the irredundant irreducible components.
inline std::vector<PrimeSupport> associated_primes(const MonomialIdeal& I) {
    std::set<PrimeSupport> primes;
    for (const MonomialIdeal& c : irreducible_decomposition(I).components)
        primes.insert(radical_support(c));
    return {primes.begin(), primes.end()};
}

inline std::vector<PrimeSupport> minimal_primes_of(std::vector<PrimeSupport> ass) {
    std::vector<PrimeSupport> out;
    for (const PrimeSupport& p : ass) {
        bool minimal = true;
        for (const PrimeSupport& q : ass)
            if (q != p && p.contains(q)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(p);
    }
    return out;
}

inline std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I) {
    return minimal_primes_of(associated_primes(I));
}

inline std::vector<PrimeSupport> embedded_primes(const MonomialIdeal& I) {
    auto ass = associated_primes(I);
    auto min = minimal_primes_of(ass);
    std::vector<PrimeSupport> out;
    for (const PrimeSupport& p : ass)
        if (std::find(min.begin(), min.end(), p) == min.end()) out.push_back(p);
    return out;
}

/// Minimal iff the radicals of the irredundant irreducible components are
/// pairwise distinct.
inline bool is_decomposition_minimal(const MonomialIdeal& I) {
    const auto& comps = irreducible_decomposition(I).components;
    std::set<PrimeSupport> radicals;
    for (const MonomialIdeal& c : comps) radicals.insert(radical_support(c));
    return radicals.size() == comps.size();
}

/// Q(P) for a minimal prime P: contract the localization inverting the
/// variables outside P, i.e. project every generator onto P's variables.
inline MonomialIdeal primary_component(const MonomialIdeal& I,
                                       const PrimeSupport& P) {
    detail::check_proper_nonzero(I, "primary_component");
    auto min = minimal_primes(I);
    if (std::find(min.begin(), min.end(), P) == min.end())
        throw DomainError("primary_component: " + to_string(P) +
                          " is not a minimal prime");
    std::vector<Monomial> gens;
    gens.reserve(I.generator_count());
    for (const Monomial& g : I.generators()) gens.push_back(project_to(g, P.vars));
    return MonomialIdeal(I.nvars(), std::move(gens));
}

/// Primary decomposition: irreducible components grouped by radical, each
/// group intersected; irredundancy is re-verified on the grouped list.
inline Decomposition primary_decomposition(const MonomialIdeal& I) {
    std::map<PrimeSupport, std::vector<MonomialIdeal>> groups;
    for (const MonomialIdeal& c : irreducible_decomposition(I).components)
        groups[radical_support(c)].push_back(c);
    std::vector<MonomialIdeal> comps;
    comps.reserve(groups.size());
    for (auto& [p, group] : groups)
        comps.push_back(intersect_all(I.nvars(), std::move(group)));
    std::size_t before = comps.size();
    comps = detail::make_irredundant(std::move(comps), I.nvars());
    if (comps.size() != before)
        throw Error("internal: grouped primary decomposition was redundant");
    if (intersect_all(I.nvars(), comps) != I)
        throw Error("internal: primary decomposition does not intersect back");
    std::sort(comps.begin(), comps.end(), ideal_less);
    return Decomposition{DecompositionKind::Primary, std::move(comps)};
}

/// All associated primes of equal height.
inline bool is_unmixed(const MonomialIdeal& I) {
    auto ass = associated_primes(I);
    for (const PrimeSupport& p : ass)
        if (p.height() != ass.front().height()) return false;
    return true;
}

/// Decompositions render as a bracketed component list.
inline std::string to_string(const Decomposition& d) {
    std::string out = "[";
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        if (i) out += " & ";
        out += "<" + to_string(d.components[i]) + ">";
    }
    return out + "]";
}

} // namespace simiscalc

#endif
