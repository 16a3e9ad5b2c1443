#ifndef SIMISCALC_SYMBOLIC_HPP
#define SIMISCALC_SYMBOLIC_HPP

#include <optional>
#include <utility>
#include <vector>

#include "simiscalc/decomposition.hpp"

namespace simiscalc {

/// Outcome of an I^(s) = I^s comparison. When the equality fails, `witness`
/// holds the canonically least generator of I^(s) outside I^s.
struct SimisVerdict {
    int degree_checked = 0;
    bool holds = false;
    std::optional<Monomial> witness;
};

/// I^(s): intersection of Q(P)^s over the minimal primes P of I.
inline MonomialIdeal symbolic_power(const MonomialIdeal& I, int s) {
    detail::check_proper_nonzero(I, "symbolic_power");
    if (s < 1) throw DomainError("symbolic power degree must be >= 1");
    std::vector<MonomialIdeal> parts;
    for (const PrimeSupport& P : minimal_primes(I))
        parts.push_back(power(primary_component(I, P), s));
    return intersect_all(I.nvars(), std::move(parts));
}

inline SimisVerdict is_simis_in_degree(const MonomialIdeal& I, int s) {
    MonomialIdeal sym = symbolic_power(I, s);
    MonomialIdeal ord = power(I, s);
    SimisVerdict v;
    v.degree_checked = s;
    v.holds = sym == ord;
    if (!v.holds) {
        // I^s <= I^(s) always, so inequality shows up as a generator of the
        // symbolic power escaping the ordinary one; generators are already in
        // canonical order, so the first escapee is the canonical witness.
        for (const Monomial& g : sym.generators())
            if (!contains_monomial(ord, g)) {
                v.witness = g;
                break;
            }
        if (!v.witness)
            throw Error("internal: symbolic power differs but no witness found");
    }
    return v;
}

/// Least degree s <= s_max at which I^(s) != I^s, with its witness.
inline std::optional<std::pair<int, Monomial>> first_simis_failure(
    const MonomialIdeal& I, int s_max) {
    if (s_max < 1) throw DomainError("s_max must be >= 1");
    for (int s = 1; s <= s_max; ++s) {
        SimisVerdict v = is_simis_in_degree(I, s);
        if (!v.holds) return std::make_pair(s, *v.witness);
    }
    return std::nullopt;
}

/// I has embedded primes iff I^(1) != I; this route never touches Ass(I).
inline bool has_embedded_primes_via_saturation_free_check(const MonomialIdeal& I) {
    return symbolic_power(I, 1) != I;
}

} // namespace simiscalc

#endif
