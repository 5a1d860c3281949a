#include "reskit/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace reskit {

namespace {

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    // 1-based position for error reporting
    std::size_t mark() const { return pos + 1; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, mark()); }

    std::string read_number() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    }

    std::string read_identifier() {
        std::size_t start = pos;
        ++pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
};

struct Term {
    Rational coef{1};
    std::vector<int> xexp;
    std::vector<int> pexp;
    std::size_t start = 0;
};

bool is_variable_name(const std::string& name) {
    return name.size() >= 2 && name[0] == 'x' &&
           std::isdigit(static_cast<unsigned char>(name[1]));
}

Rational parse_coef(Scanner& sc) {
    std::size_t at = sc.mark();
    std::string num = sc.read_number();
    if (!sc.done() && sc.peek() == '/') {
        ++sc.pos;
        if (sc.done() || !std::isdigit(static_cast<unsigned char>(sc.peek())))
            sc.fail("expected denominator digits after '/'");
        std::string den = sc.read_number();
        if (mpz_class(den) == 0) throw ParseError("zero denominator", at);
        return Rational(mpz_class(num), mpz_class(den));
    }
    return Rational(mpz_class(num));
}

int parse_exponent(Scanner& sc) {
    ++sc.pos; // consume '^'
    sc.skip_ws();
    if (sc.done() || !std::isdigit(static_cast<unsigned char>(sc.peek())))
        sc.fail("expected exponent digits after '^'");
    std::size_t at = sc.mark();
    std::string digits = sc.read_number();
    if (digits.size() > 6) throw ParseError("exponent too large", at);
    int e = std::stoi(digits);
    if (e < 1) throw ParseError("exponent must be positive", at);
    return e;
}

Term parse_term(Scanner& sc, int n, std::span<const std::string> params) {
    Term t;
    t.xexp.assign(static_cast<std::size_t>(n), 0);
    t.pexp.assign(params.size(), 0);
    t.start = sc.mark();
    bool any = false;
    for (;;) {
        sc.skip_ws();
        if (sc.done()) break;
        char c = sc.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.coef *= parse_coef(sc);
            if (!sc.done() && sc.peek() == '^')
                sc.fail("numeric literals take no exponent");
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = sc.mark();
            std::string name = sc.read_identifier();
            int exp = 1;
            sc.skip_ws();
            if (!sc.done() && sc.peek() == '^') exp = parse_exponent(sc);
            if (is_variable_name(name)) {
                std::size_t idx_end = 0;
                int idx = 0;
                try {
                    idx = std::stoi(name.substr(1), &idx_end);
                } catch (const std::exception&) {
                    idx_end = 0;
                }
                if (idx_end + 1 != name.size() || idx < 1 || idx > n)
                    throw ParseError("unknown variable '" + name + "'", at);
                t.xexp[static_cast<std::size_t>(idx - 1)] += exp;
            } else {
                auto found = std::find(params.begin(), params.end(), name);
                if (found == params.end())
                    throw ParseError("unknown parameter '" + name + "'", at);
                t.pexp[static_cast<std::size_t>(found - params.begin())] += exp;
            }
        } else {
            sc.fail(std::string("unexpected character '") + c + "'");
        }
        any = true;
        sc.skip_ws();
        if (sc.done() || sc.peek() != '*') break;
        ++sc.pos;
        sc.skip_ws();
        if (sc.done()) sc.fail("expected factor after '*'");
    }
    if (!any) sc.fail("expected term");
    return t;
}

} // namespace

Polynomial parse_polynomial(const std::string& text, int n, std::span<const std::string> params) {
    if (n < 1) throw Error("variable count must be positive");
    Scanner sc{text};
    std::vector<std::pair<Term, int>> signed_terms;
    sc.skip_ws();
    if (sc.done()) sc.fail("empty polynomial");
    int sign = 1;
    if (sc.peek() == '-') {
        sign = -1;
        ++sc.pos;
    }
    for (;;) {
        signed_terms.emplace_back(parse_term(sc, n, params), sign);
        sc.skip_ws();
        if (sc.done()) break;
        char c = sc.peek();
        if (c == '+') sign = 1;
        else if (c == '-') sign = -1;
        else sc.fail(std::string("unexpected character '") + c + "'");
        ++sc.pos;
        sc.skip_ws();
        if (sc.done()) sc.fail("expected term after sign");
    }

    // Homogeneity: every non-vanishing term must share one total degree.
    // The zero polynomial gets the degree of its first literal term.
    std::optional<int> degree;
    for (const auto& [t, s] : signed_terms) {
        if (t.coef.is_zero()) continue;
        int d = 0;
        for (int e : t.xexp) d += e;
        if (!degree) degree = d;
        else if (*degree != d) throw ParseError("non-homogeneous polynomial", t.start);
    }
    if (!degree) {
        int d = 0;
        for (int e : signed_terms.front().first.xexp) d += e;
        degree = d;
    }

    Polynomial p(n, *degree);
    for (const auto& [t, s] : signed_terms) {
        if (t.coef.is_zero()) continue;
        Rational r = s < 0 ? -t.coef : t.coef;
        ExponentVector pe{t.pexp};
        Coefficient c = pe.is_zero()
                            ? Coefficient(r)
                            : Coefficient::from_param_terms({{std::move(pe), std::move(r)}});
        p.add_term(ExponentVector(t.xexp), std::move(c));
    }
    return p;
}

} // namespace reskit
