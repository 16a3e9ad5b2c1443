#ifndef SIMISCALC_PARSE_HPP
#define SIMISCALC_PARSE_HPP

#include <cctype>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "simiscalc/ideal.hpp"

namespace simiscalc {

/// A parsed ideal before canonicalization. Duplicate or divisible generators
/// are allowed here; they disappear on ideal construction.
struct IdealDocument {
    int nvars = 0;
    std::vector<Monomial> generators;
    std::string source; // "text" or "json"
};

inline MonomialIdeal to_ideal(const IdealDocument& doc) {
    return MonomialIdeal(doc.nvars, doc.generators);
}

namespace detail {

/// Grammar:
///   input     := header? body
///   header    := 'vars' ':' NAT ';'
///   body      := '0' | generator (',' generator)*
///   generator := factor ('*' factor)*
///   factor    := 'x' NAT ('^' NAT)? | '1'
/// Whitespace is insignificant. Variables are 1-based; the number of
/// variables defaults to the largest index seen. "0" and "1" are accepted so
/// the zero and unit ideals render-parse round-trip.
class IdealTextParser {
public:
    explicit IdealTextParser(std::string_view text) : text_(text) {}

    IdealDocument parse() {
        IdealDocument doc;
        doc.source = "text";
        skip_ws();
        std::optional<int> declared = parse_header();
        std::vector<std::vector<std::pair<int, Exponent>>> gens;
        int max_var = 0;
        skip_ws();
        if (at_end()) {
            if (!declared) fail("empty input: expected a generator list");
        } else if (peek() == '0') {
            get();
            skip_ws();
            if (!at_end()) fail("unexpected input after the zero ideal");
        } else {
            gens.push_back(parse_generator(max_var));
            skip_ws();
            while (!at_end()) {
                expect(',');
                gens.push_back(parse_generator(max_var));
                skip_ws();
            }
        }
        doc.nvars = declared.value_or(max_var);
        if (declared && max_var > *declared)
            fail("variable x" + std::to_string(max_var) +
                 " exceeds the declared vars: " + std::to_string(*declared));
        for (const auto& factors : gens) {
            std::vector<Exponent> e(static_cast<std::size_t>(doc.nvars), 0);
            for (auto [v, k] : factors)
                e[static_cast<std::size_t>(v - 1)] =
                    checked_add(e[static_cast<std::size_t>(v - 1)], k);
            doc.generators.emplace_back(std::move(e));
        }
        return doc;
    }

private:
    std::optional<int> parse_header() {
        if (text_.substr(pos_, 4) != "vars") return std::nullopt;
        pos_ += 4;
        skip_ws();
        expect(':');
        Exponent n = parse_nat();
        if (n < 0 || n > 4096) fail("vars count out of range");
        skip_ws();
        expect(';');
        return static_cast<int>(n);
    }

    std::vector<std::pair<int, Exponent>> parse_generator(int& max_var) {
        std::vector<std::pair<int, Exponent>> factors;
        parse_factor(factors, max_var);
        skip_ws();
        while (!at_end() && peek() == '*') {
            get();
            parse_factor(factors, max_var);
            skip_ws();
        }
        return factors;
    }

    void parse_factor(std::vector<std::pair<int, Exponent>>& factors, int& max_var) {
        skip_ws();
        if (at_end()) fail("expected a factor");
        char c = peek();
        if (c == '1') {
            get();
            return; // the unit factor contributes nothing
        }
        if (c != 'x') fail(std::string("expected 'x', got '") + c + "'");
        get();
        Exponent var = parse_nat();
        if (var == 0) fail("variable index 0: variables are 1-based");
        if (var > 4096) fail("variable index out of range");
        Exponent exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            get();
            exp = parse_nat();
        }
        max_var = std::max(max_var, static_cast<int>(var));
        factors.emplace_back(static_cast<int>(var), exp);
    }

    Exponent parse_nat() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a natural number");
        Exponent value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            int digit = get() - '0';
            if (value > (std::numeric_limits<Exponent>::max() - digit) / 10)
                fail("number too large");
            value = value * 10 + digit;
        }
        return value;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char get() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) get();
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c)
            fail(std::string("expected '") + c + "'");
        get();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_, col_, msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace detail

inline IdealDocument parse_ideal_text(std::string_view text) {
    return detail::IdealTextParser(text).parse();
}

/// JSON form: {"vars": n, "generators": [[e1,...,en], ...]}.
inline IdealDocument parse_ideal_json(const nlohmann::json& j) {
    IdealDocument doc;
    doc.source = "json";
    if (!j.is_object() || !j.contains("vars") || !j.contains("generators"))
        throw ParseError(1, 1, "JSON ideal needs \"vars\" and \"generators\"");
    if (!j["vars"].is_number_integer() || j["vars"].get<int>() < 0)
        throw ParseError(1, 1, "\"vars\" must be a nonnegative integer");
    doc.nvars = j["vars"].get<int>();
    if (!j["generators"].is_array())
        throw ParseError(1, 1, "\"generators\" must be an array");
    for (const auto& row : j["generators"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != doc.nvars)
            throw ParseError(1, 1, "each generator needs exactly vars exponents");
        std::vector<Exponent> e;
        e.reserve(row.size());
        for (const auto& x : row) {
            if (!x.is_number_integer() || x.get<Exponent>() < 0)
                throw ParseError(1, 1, "exponents must be nonnegative integers");
            e.push_back(x.get<Exponent>());
        }
        doc.generators.emplace_back(std::move(e));
    }
    return doc;
}

/// Sniff the format: a leading '{' means JSON, anything else the text grammar.
inline IdealDocument parse_ideal_auto(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_ideal_json(nlohmann::json::parse(text));
        break;
    }
    return parse_ideal_text(text);
}

/// Parse one monomial in an n-variable ring (the `member` argument).
inline Monomial parse_monomial(std::string_view text, int nvars) {
    IdealDocument doc = parse_ideal_text(text);
    if (doc.generators.size() != 1)
        throw ParseError(1, 1, "expected exactly one monomial");
    if (doc.nvars > nvars)
        throw ParseError(1, 1, "monomial mentions x" + std::to_string(doc.nvars) +
                                   " outside the ideal's " +
                                   std::to_string(nvars) + " variables");
    std::vector<Exponent> e(static_cast<std::size_t>(nvars), 0);
    const Monomial& m = doc.generators[0];
    for (int v = 1; v <= doc.nvars; ++v)
        e[static_cast<std::size_t>(v - 1)] = m.exponent(v);
    return Monomial(std::move(e));
}

/// File rendering with the explicit variable count, so trailing unused
/// variables survive a round trip.
inline std::string to_file_string(const MonomialIdeal& I) {
    return "vars: " + std::to_string(I.nvars()) + ";\n" + to_string(I) + "\n";
}

} // namespace simiscalc

#endif
