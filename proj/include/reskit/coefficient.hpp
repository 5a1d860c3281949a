#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "reskit/rational.hpp"

namespace reskit {

/// Fixed-length vector of non-negative exponents. Ordered graded-
/// lexicographically (total degree first, then lexicographic); this is the
/// canonical term order throughout the library.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> e) : e_(std::move(e)) {}
    static ExponentVector zeros(int n) { return ExponentVector(std::vector<int>(n, 0)); }

    int size() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return e_; }

    int total_degree() const {
        int t = 0;
        for (int v : e_) t += v;
        return t;
    }
    bool is_zero() const {
        for (int v : e_) if (v != 0) return false;
        return true;
    }

    ExponentVector plus(const ExponentVector& o) const;

    bool operator==(const ExponentVector& o) const { return e_ == o.e_; }
    bool operator<(const ExponentVector& o) const {
        int ta = total_degree(), tb = o.total_degree();
        if (ta != tb) return ta < tb;
        return e_ < o.e_;
    }

private:
    std::vector<int> e_;
};

/// Element of the coefficient ring: either an exact rational or a sparse
/// polynomial in the declared parameters with rational coefficients.
/// Parametric values whose parameter part is trivial collapse to the
/// rational representation, so equality is structural.
class Coefficient {
public:
    using ParamTerms = std::map<ExponentVector, Rational>;

    Coefficient() : value_(Rational(0)) {}
    Coefficient(Rational r) : value_(std::move(r)) {}
    Coefficient(long n) : value_(Rational(n)) {}

    /// The monomial consisting of a single parameter.
    static Coefficient parameter(int index, int param_count);
    /// Builds a parametric value; zero entries are dropped and constant
    /// results collapse to Rational.
    static Coefficient from_param_terms(ParamTerms terms);

    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    bool is_zero() const { return is_rational() && rational().is_zero(); }
    bool is_one() const { return is_rational() && rational().is_one(); }
    const Rational& rational() const;
    const ParamTerms& param_terms() const;
    /// Length of the parameter exponent vectors; 0 for rational values.
    int param_count() const;

    Coefficient operator-() const;
    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);

    /// Division by a non-zero rational; total because the ring contains Q.
    Coefficient divided_by(const Rational& r) const;
    /// Exact ring division; throws Error if the quotient does not exist.
    Coefficient exact_div(const Coefficient& o) const;

    /// Substitutes rational values for a subset of the parameters (entries
    /// left disengaged stay symbolic). The parameter context is preserved.
    Coefficient substitute(const std::vector<std::optional<Rational>>& values) const;

    bool operator==(const Coefficient& o) const { return value_ == o.value_; }
    bool operator!=(const Coefficient& o) const { return !(*this == o); }

    double to_double() const;
    /// Canonical string, terms in descending graded-lex order. Parameter
    /// names are required for parametric values.
    std::string str(std::span<const std::string> params = {}) const;

private:
    std::variant<Rational, ParamTerms> value_;

    void normalize();
    static ParamTerms promote(const Rational& r, int param_count);
};

} // namespace reskit
