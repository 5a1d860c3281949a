#pragma once

#include <gmpxx.h>

#include <string>

#include "reskit/errors.hpp"

namespace reskit {

/// Exact rational number. Always reduced to lowest terms with positive
/// denominator; zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) { init(mpz_class(n), mpz_class(d)); }
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) { init(n, d); }

    /// Parses "p" or "p/q" with optional leading '-'.
    static Rational from_string(const std::string& text);

    const mpz_class numerator() const { return v_.get_num(); }
    const mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error("division by zero rational");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    void init(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw Error("rational with zero denominator");
        v_ = mpq_class(n);
        v_ /= mpq_class(d);
    }

    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(text));
        return Rational(mpz_class(text.substr(0, slash)),
                        mpz_class(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal: " + text);
    }
}

} // namespace reskit
