#ifndef SIMISCALC_MONOMIAL_HPP
#define SIMISCALC_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "simiscalc/errors.hpp"

namespace simiscalc {

/// Exponents are checked 64-bit integers; any overflow aborts the computation
/// instead of wrapping (a wrapped exponent would silently poison every
/// decomposition downstream).
using Exponent = std::int64_t;

inline Exponent checked_add(Exponent a, Exponent b) {
    Exponent r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("exponent overflow in addition");
    return r;
}

/// A monomial x^a as a dense nonnegative exponent vector. The vector length is
/// the ambient variable count n; operations on monomials from different
/// ambients are rejected. The all-zeros vector is the unit monomial 1.
/// Variables are 1-based throughout, matching the x1..xn naming.
class Monomial {
public:
    explicit Monomial(std::vector<Exponent> exponents)
        : exps_(std::move(exponents)) {
        for (Exponent e : exps_)
            if (e < 0) throw DomainError("negative exponent in monomial");
    }

    static Monomial unit(int nvars) {
        return Monomial(std::vector<Exponent>(static_cast<std::size_t>(nvars), 0));
    }

    /// x_var^e in an n-variable ring.
    static Monomial variable(int nvars, int var, Exponent e = 1) {
        Monomial m = unit(nvars);
        m.check_var(var);
        m.exps_[static_cast<std::size_t>(var - 1)] = e;
        if (e < 0) throw DomainError("negative exponent in monomial");
        return m;
    }

    int nvars() const { return static_cast<int>(exps_.size()); }

    Exponent exponent(int var) const {
        check_var(var);
        return exps_[static_cast<std::size_t>(var - 1)];
    }

    std::span<const Exponent> exponents() const { return exps_; }

    Exponent total_degree() const {
        Exponent d = 0;
        for (Exponent e : exps_) d = checked_add(d, e);
        return d;
    }

    bool is_unit() const {
        return std::all_of(exps_.begin(), exps_.end(),
                           [](Exponent e) { return e == 0; });
    }

    /// Variables with positive exponent, ascending.
    std::vector<int> support() const {
        std::vector<int> s;
        for (int v = 1; v <= nvars(); ++v)
            if (exps_[static_cast<std::size_t>(v - 1)] > 0) s.push_back(v);
        return s;
    }

    int support_size() const {
        return static_cast<int>(std::count_if(exps_.begin(), exps_.end(),
                                              [](Exponent e) { return e > 0; }));
    }

    bool is_squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(),
                           [](Exponent e) { return e <= 1; });
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    void check_var(int var) const {
        if (var < 1 || var > nvars())
            throw DomainError("variable index " + std::to_string(var) +
                              " out of range 1.." + std::to_string(nvars()));
    }

    std::vector<Exponent> exps_;
};

inline void check_same_ambient(const Monomial& u, const Monomial& v) {
    if (u.nvars() != v.nvars()) throw AmbientMismatchError(u.nvars(), v.nvars());
}

/// u | v, i.e. the exponent vector of u is coordinatewise <= that of v.
inline bool divides(const Monomial& u, const Monomial& v) {
    check_same_ambient(u, v);
    auto ue = u.exponents(), ve = v.exponents();
    for (std::size_t i = 0; i < ue.size(); ++i)
        if (ue[i] > ve[i]) return false;
    return true;
}

/// Coordinatewise maximum.
inline Monomial lcm(const Monomial& u, const Monomial& v) {
    check_same_ambient(u, v);
    auto ue = u.exponents(), ve = v.exponents();
    std::vector<Exponent> r(ue.size());
    for (std::size_t i = 0; i < ue.size(); ++i) r[i] = std::max(ue[i], ve[i]);
    return Monomial(std::move(r));
}

/// Coordinatewise sum, checked.
inline Monomial mul(const Monomial& u, const Monomial& v) {
    check_same_ambient(u, v);
    auto ue = u.exponents(), ve = v.exponents();
    std::vector<Exponent> r(ue.size());
    for (std::size_t i = 0; i < ue.size(); ++i) r[i] = checked_add(ue[i], ve[i]);
    return Monomial(std::move(r));
}

/// Substitute 1 for every variable outside vars: exponents outside vars are
/// zeroed, the ambient stays. This is the monomial-level contraction behind
/// primary components of localizations.
inline Monomial project_to(const Monomial& u, std::span<const int> vars) {
    std::vector<Exponent> r(u.exponents().size(), 0);
    for (int v : vars) {
        if (v < 1 || v > u.nvars())
            throw DomainError("projection variable out of range");
        r[static_cast<std::size_t>(v - 1)] = u.exponent(v);
    }
    return Monomial(std::move(r));
}

inline Monomial project_to(const Monomial& u, const std::vector<int>& vars) {
    return project_to(u, std::span<const int>(vars));
}

/// Graded lexicographic total order: total degree first, then the exponent
/// vector lexicographically. Canonical order for generator lists and
/// "canonically least" witness selection.
inline bool grlex_less(const Monomial& u, const Monomial& v) {
    check_same_ambient(u, v);
    Exponent du = u.total_degree(), dv = v.total_degree();
    if (du != dv) return du < dv;
    auto ue = u.exponents(), ve = v.exponents();
    return std::lexicographical_compare(ue.begin(), ue.end(), ve.begin(), ve.end());
}

/// Canonical rendering: ascending variable index, `^1` omitted, `*`-joined;
/// the unit monomial renders as "1".
inline std::string to_string(const Monomial& m) {
    std::string out;
    for (int v = 1; v <= m.nvars(); ++v) {
        Exponent e = m.exponent(v);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(v);
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    return os << to_string(m);
}

} // namespace simiscalc

#endif
