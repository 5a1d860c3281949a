#include "reskit/coefficient.hpp"

#include "format_util.hpp"

namespace reskit {

ExponentVector ExponentVector::plus(const ExponentVector& o) const {
    if (e_.size() != o.e_.size()) throw Error("exponent vector length mismatch");
    std::vector<int> out(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) out[i] = e_[i] + o.e_[i];
    return ExponentVector(std::move(out));
}

namespace {

Rational rational_pow(const Rational& base, int exp) {
    Rational acc(1);
    for (int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (int i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExponentVector minus(const ExponentVector& a, const ExponentVector& b) {
    std::vector<int> out(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = a[i] - b[i];
    return ExponentVector(std::move(out));
}

} // namespace

Coefficient Coefficient::parameter(int index, int param_count) {
    std::vector<int> e(static_cast<std::size_t>(param_count), 0);
    e[static_cast<std::size_t>(index)] = 1;
    ParamTerms t;
    t.emplace(ExponentVector(std::move(e)), Rational(1));
    return from_param_terms(std::move(t));
}

Coefficient Coefficient::from_param_terms(ParamTerms terms) {
    Coefficient c;
    c.value_ = std::move(terms);
    c.normalize();
    return c;
}

void Coefficient::normalize() {
    auto* terms = std::get_if<ParamTerms>(&value_);
    if (!terms) return;
    for (auto it = terms->begin(); it != terms->end();) {
        if (it->second.is_zero()) it = terms->erase(it);
        else ++it;
    }
    if (terms->empty()) {
        value_ = Rational(0);
    } else if (terms->size() == 1 && terms->begin()->first.is_zero()) {
        // copy out before the variant destroys the map it came from
        Rational constant = terms->begin()->second;
        value_ = std::move(constant);
    }
}

const Rational& Coefficient::rational() const {
    if (!is_rational()) throw Error("coefficient is parametric, not rational");
    return std::get<Rational>(value_);
}

const Coefficient::ParamTerms& Coefficient::param_terms() const {
    auto* terms = std::get_if<ParamTerms>(&value_);
    if (!terms) throw Error("coefficient is rational, not parametric");
    return *terms;
}

int Coefficient::param_count() const {
    auto* terms = std::get_if<ParamTerms>(&value_);
    return terms ? terms->begin()->first.size() : 0;
}

Coefficient::ParamTerms Coefficient::promote(const Rational& r, int param_count) {
    ParamTerms t;
    if (!r.is_zero()) t.emplace(ExponentVector::zeros(param_count), r);
    return t;
}

Coefficient Coefficient::operator-() const {
    if (is_rational()) return Coefficient(-rational());
    ParamTerms t;
    for (const auto& [e, c] : param_terms()) t.emplace(e, -c);
    return from_param_terms(std::move(t));
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
    if (is_rational() && o.is_rational()) return Coefficient(rational() + o.rational());
    int pc = std::max(param_count(), o.param_count());
    if (param_count() > 0 && o.param_count() > 0 && param_count() != o.param_count())
        throw Error("parameter context mismatch");
    ParamTerms t = is_rational() ? promote(rational(), pc) : param_terms();
    const ParamTerms other = o.is_rational() ? promote(o.rational(), pc) : o.param_terms();
    for (const auto& [e, c] : other) {
        auto [it, inserted] = t.emplace(e, c);
        if (!inserted) it->second += c;
    }
    return from_param_terms(std::move(t));
}

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

Coefficient Coefficient::operator*(const Coefficient& o) const {
    if (is_rational() && o.is_rational()) return Coefficient(rational() * o.rational());
    if (is_zero() || o.is_zero()) return Coefficient(Rational(0));
    if (is_rational() || o.is_rational()) {
        const Rational& r = is_rational() ? rational() : o.rational();
        const ParamTerms& terms = is_rational() ? o.param_terms() : param_terms();
        ParamTerms t;
        for (const auto& [e, c] : terms) t.emplace(e, c * r);
        return from_param_terms(std::move(t));
    }
    if (param_count() != o.param_count()) throw Error("parameter context mismatch");
    ParamTerms t;
    for (const auto& [ea, ca] : param_terms()) {
        for (const auto& [eb, cb] : o.param_terms()) {
            ExponentVector e = ea.plus(eb);
            Rational c = ca * cb;
            auto [it, inserted] = t.emplace(std::move(e), std::move(c));
            if (!inserted) it->second += ca * cb;
        }
    }
    return from_param_terms(std::move(t));
}

Coefficient& Coefficient::operator+=(const Coefficient& o) { return *this = *this + o; }
Coefficient& Coefficient::operator-=(const Coefficient& o) { return *this = *this - o; }
Coefficient& Coefficient::operator*=(const Coefficient& o) { return *this = *this * o; }

Coefficient Coefficient::divided_by(const Rational& r) const {
    if (r.is_zero()) throw Error("division by zero rational");
    if (is_rational()) return Coefficient(rational() / r);
    Rational inv = Rational(1) / r;
    ParamTerms t;
    for (const auto& [e, c] : param_terms()) t.emplace(e, c * inv);
    return from_param_terms(std::move(t));
}

Coefficient Coefficient::exact_div(const Coefficient& o) const {
    if (o.is_zero()) throw Error("exact division by zero");
    if (o.is_rational()) return divided_by(o.rational());
    if (is_zero()) return Coefficient(Rational(0));
    if (is_rational()) throw Error("inexact coefficient division");
    if (param_count() != o.param_count()) throw Error("parameter context mismatch");

    // Multivariate exact division by repeated leading-term elimination in
    // descending graded-lex order; any miss means the quotient does not
    // exist in the polynomial ring.
    ParamTerms rem = param_terms();
    const ParamTerms& div = o.param_terms();
    const auto& [lead_e, lead_c] = *div.rbegin();
    ParamTerms quot;
    while (!rem.empty()) {
        const auto& [re, rc] = *rem.rbegin();
        if (!divides(lead_e, re)) throw Error("inexact coefficient division");
        ExponentVector qe = minus(re, lead_e);
        Rational qc = rc / lead_c;
        for (const auto& [de, dc] : div) {
            ExponentVector e = qe.plus(de);
            Rational delta = qc * dc;
            auto it = rem.find(e);
            if (it == rem.end()) {
                rem.emplace(std::move(e), -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
        quot.emplace(std::move(qe), std::move(qc));
    }
    return from_param_terms(std::move(quot));
}

Coefficient Coefficient::substitute(const std::vector<std::optional<Rational>>& values) const {
    if (is_rational()) return *this;
    if (static_cast<int>(values.size()) != param_count())
        throw Error("substitution value count mismatch");
    ParamTerms t;
    for (const auto& [e, c] : param_terms()) {
        Rational folded = c;
        std::vector<int> rest(e.entries());
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!values[i]) continue;
            folded *= rational_pow(*values[i], rest[i]);
            rest[i] = 0;
        }
        if (folded.is_zero()) continue;
        auto [it, inserted] = t.emplace(ExponentVector(std::move(rest)), folded);
        if (!inserted) it->second += folded;
    }
    return from_param_terms(std::move(t));
}

double Coefficient::to_double() const {
    if (!is_rational()) throw Error("parametric coefficient has no numeric value");
    return rational().to_double();
}

std::string Coefficient::str(std::span<const std::string> params) const {
    if (is_rational()) return rational().str();
    if (static_cast<int>(params.size()) != param_count())
        throw Error("parameter name count mismatch");
    std::string out;
    const ParamTerms& terms = param_terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        std::string factors;
        for (int i = 0; i < it->first.size(); ++i)
            detail::append_factor(factors, params[static_cast<std::size_t>(i)], it->first[i]);
        detail::append_term(out, it->second, factors);
    }
    return out.empty() ? "0" : out;
}

} // namespace reskit
