#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "reskit/coefficient.hpp"

namespace reskit {

/// Sparse homogeneous multivariate polynomial over Coefficient. Every stored
/// term has total degree equal to the declared degree; the zero polynomial
/// keeps its nominal degree so degree bookkeeping never branches. Variables
/// are always named x1..xn.
class Polynomial {
public:
    using Terms = std::map<ExponentVector, Coefficient>;

    Polynomial() = default;
    Polynomial(int var_count, int degree);
    static Polynomial constant(int var_count, Coefficient c);

    int var_count() const { return var_count_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Accumulates c onto the term at e; zero results are purged. The key
    /// must match the variable count and declared degree.
    void add_term(const ExponentVector& e, Coefficient c);

    /// Stored value or exact zero; e must have length var_count.
    const Coefficient& coefficient(const ExponentVector& e) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Coefficient& c) const;
    Polynomial pow(int k) const;

    /// Sets x_i = 0 for every 0-based index in `zeroed` (sorted, unique) and
    /// re-indexes the surviving variables; the degree is preserved.
    Polynomial restrict_zero(const std::vector<int>& zeroed) const;

    /// Numeric evaluation; requires rational coefficients.
    std::complex<double> eval(std::span<const std::complex<double>> point) const;

    bool operator==(const Polynomial& o) const {
        return var_count_ == o.var_count_ && degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Canonical text form: terms in descending graded-lex order of the
    /// variable exponents, parametric coefficients expanded with parameter
    /// monomials in descending order as the tiebreaker.
    std::string str(std::span<const std::string> params = {}) const;

private:
    int var_count_ = 0;
    int degree_ = 0;
    Terms terms_;
};

/// Cache of successive powers base^0..base^k, grown by ensure(). Growth is
/// a single-owner operation; reads are safe to share once built.
class PowerTable {
public:
    explicit PowerTable(Polynomial base);

    const Polynomial& base() const { return powers_[1]; }
    int built() const { return static_cast<int>(powers_.size()) - 1; }
    void ensure(int k);
    const Polynomial& power(int k) const;

private:
    std::vector<Polynomial> powers_;
};

/// System of n homogeneous polynomials in n variables with its degree
/// vector (r_1..r_n) and the shared ordered parameter list.
struct PolySystem {
    int n = 0;
    std::vector<std::string> params;
    std::vector<Polynomial> polys;
    std::vector<int> degrees;
};

/// Builds and validates a system: n = polys.size() = every var_count, every
/// polynomial non-zero with degree >= 1. Throws Error naming the offending
/// polynomial as f<i>.
PolySystem make_system(std::vector<Polynomial> polys, std::vector<std::string> params);

/// Subsystem for the zero-index trace reduction: drops f_i for every 0-based
/// index in `zeroed` and applies restrict_zero to the remaining polynomials.
/// Degrees are carried over from the parent; no validation is re-run (a
/// restricted polynomial may legitimately become zero).
PolySystem restrict_system(const PolySystem& sys, const std::vector<int>& zeroed);

} // namespace reskit
