#ifndef SIMISCALC_IDEAL_HPP
#define SIMISCALC_IDEAL_HPP

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "simiscalc/monomial.hpp"

namespace simiscalc {

/// Ceiling on generator counts of any ideal or candidate list built by this
/// library. Fuzzing has to fail fast on blowup rather than thrash; the default
/// is generous for desk-scale inputs. Overridable via SIMISCALC_GEN_LIMIT.
inline std::size_t& generator_limit() {
    static std::size_t limit = [] {
        if (const char* env = std::getenv("SIMISCALC_GEN_LIMIT")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(100000);
    }();
    return limit;
}

namespace detail {

inline void check_limit(std::size_t count) {
    if (count > generator_limit()) throw GeneratorLimitError(generator_limit());
}

template <typename IdealT>
void check_proper_nonzero(const IdealT& I, const char* op) {
    if (I.is_zero()) throw DomainError(std::string(op) + ": zero ideal");
    if (I.is_unit()) throw DomainError(std::string(op) + ": unit ideal");
}

/// Reduce a generator list to the canonical sorted antichain: sort graded-lex,
/// drop duplicates, drop anything divisible by an earlier survivor. Sorting by
/// degree first means a potential divisor always precedes its multiples, so a
/// single forward pass suffices.
inline std::vector<Monomial> minimize(std::vector<Monomial> gens) {
    check_limit(gens.size());
    std::sort(gens.begin(), gens.end(), grlex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& k : kept) {
            if (divides(k, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g);
    }
    return kept;
}

} // namespace detail

/// A monomial ideal in canonical form: the unique minimal generating set,
/// stored as a graded-lex sorted antichain under divisibility. Structural
/// equality is therefore ideal equality. The zero ideal has no generators;
/// the unit ideal has the single generator 1.
class MonomialIdeal {
public:
    /// Builds the canonical form from an arbitrary generator list.
    /// Idempotent; divisibility-redundant generators are dropped.
    MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
        for (const Monomial& g : gens)
            if (g.nvars() != nvars) throw AmbientMismatchError(nvars, g.nvars());
        gens_ = detail::minimize(std::move(gens));
    }

    static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars, {}); }

    static MonomialIdeal unit_ideal(int nvars) {
        return MonomialIdeal(nvars, {Monomial::unit(nvars)});
    }

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool is_proper() const { return !is_unit(); }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int nvars_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal from_generators(int nvars, std::vector<Monomial> gens) {
    return MonomialIdeal(nvars, std::move(gens));
}

inline void check_same_ambient(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars()) throw AmbientMismatchError(I.nvars(), J.nvars());
}

inline bool contains_monomial(const MonomialIdeal& I, const Monomial& m) {
    if (m.nvars() != I.nvars()) throw AmbientMismatchError(I.nvars(), m.nvars());
    return std::any_of(I.generators().begin(), I.generators().end(),
                       [&](const Monomial& g) { return divides(g, m); });
}

/// J <= I as ideals: every generator of J lies in I.
inline bool contains_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ambient(I, J);
    return std::all_of(J.generators().begin(), J.generators().end(),
                       [&](const Monomial& g) { return contains_monomial(I, g); });
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ambient(I, J);
    std::vector<Monomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal(I.nvars(), std::move(gens));
}

/// Intersection, generated by the pairwise lcms of the two antichains.
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ambient(I, J);
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;
    if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.nvars());
    detail::check_limit(I.generator_count() * J.generator_count());
    std::vector<Monomial> gens;
    gens.reserve(I.generator_count() * J.generator_count());
    for (const Monomial& u : I.generators())
        for (const Monomial& v : J.generators()) gens.push_back(lcm(u, v));
    return MonomialIdeal(I.nvars(), std::move(gens));
}

/// n-ary intersection, folded in ascending generator-count order; the smallest
/// partial antichains go first, which keeps intermediates small (any order is
/// correct, by commutativity).
inline MonomialIdeal intersect_all(int nvars, std::vector<MonomialIdeal> parts) {
    if (parts.empty()) return MonomialIdeal::unit_ideal(nvars);
    std::sort(parts.begin(), parts.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) {
                  return a.generator_count() < b.generator_count();
              });
    MonomialIdeal acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, parts[i]);
    return acc;
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ambient(I, J);
    if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.nvars());
    detail::check_limit(I.generator_count() * J.generator_count());
    std::vector<Monomial> gens;
    gens.reserve(I.generator_count() * J.generator_count());
    for (const Monomial& u : I.generators())
        for (const Monomial& v : J.generators()) gens.push_back(mul(u, v));
    return MonomialIdeal(I.nvars(), std::move(gens));
}

/// I^s by iterated product, minimizing after every step.
inline MonomialIdeal power(const MonomialIdeal& I, int s) {
    if (s < 1) throw DomainError("power exponent must be >= 1");
    MonomialIdeal acc = I;
    for (int k = 1; k < s; ++k) acc = product(acc, I);
    return acc;
}

inline bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ambient(I, J);
    return I == J;
}

/// Radical: clamp every exponent to <= 1 and re-minimize.
inline MonomialIdeal radical(const MonomialIdeal& I) {
    std::vector<Monomial> gens;
    gens.reserve(I.generator_count());
    for (const Monomial& g : I.generators()) {
        std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
        for (Exponent& x : e) x = x > 0 ? 1 : 0;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(I.nvars(), std::move(gens));
}

inline bool is_squarefree(const MonomialIdeal& I) {
    return std::all_of(I.generators().begin(), I.generators().end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

/// Largest exponent of x_var across the generators (0 if absent everywhere).
inline Exponent max_exponent(const MonomialIdeal& I, int var) {
    Exponent m = 0;
    for (const Monomial& g : I.generators()) m = std::max(m, g.exponent(var));
    return m;
}

/// Rename variables: exponent of x_v moves to x_{perm[v]}. perm is 1-based
/// with perm[0] unused and must be a permutation of 1..n.
inline MonomialIdeal relabel_variables(const MonomialIdeal& I,
                                       const std::vector<int>& perm) {
    const int n = I.nvars();
    if (static_cast<int>(perm.size()) != n + 1)
        throw DomainError("relabeling permutation has wrong size");
    std::vector<Monomial> gens;
    gens.reserve(I.generator_count());
    for (const Monomial& g : I.generators()) {
        std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
        for (int v = 1; v <= n; ++v) {
            int w = perm[static_cast<std::size_t>(v)];
            if (w < 1 || w > n) throw DomainError("relabeling image out of range");
            e[static_cast<std::size_t>(w - 1)] = g.exponent(v);
        }
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

/// Canonical rendering: generators in canonical order, comma separated.
/// The zero ideal renders as "0".
inline std::string to_string(const MonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::string out;
    for (const Monomial& g : I.generators()) {
        if (!out.empty()) out += ", ";
        out += to_string(g);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
    return os << to_string(I);
}

} // namespace simiscalc

#endif
