#pragma once

#include <string>

#include "reskit/rational.hpp"

namespace reskit::detail {

// Appends "name" or "name^exp" to a '*'-joined factor list.
inline void append_factor(std::string& s, const std::string& name, int exp) {
    if (exp <= 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (exp > 1) {
        s += "^";
        s += std::to_string(exp);
    }
}

// Appends one term to a rendered sum, handling sign separators and the
// suppression of unit coefficients next to a non-empty factor list.
inline void append_term(std::string& out, const Rational& coef, const std::string& factors) {
    if (coef.is_zero()) return;
    bool negative = coef.sign() < 0;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    Rational mag = negative ? -coef : coef;
    if (factors.empty()) {
        out += mag.str();
    } else {
        if (!mag.is_one()) {
            out += mag.str();
            out += "*";
        }
        out += factors;
    }
}

} // namespace reskit::detail
