#include "reskit/polynomial.hpp"

#include <algorithm>

#include "format_util.hpp"

namespace reskit {

Polynomial::Polynomial(int var_count, int degree) : var_count_(var_count), degree_(degree) {
    if (var_count < 0) throw Error("negative variable count");
    if (degree < 0) throw Error("negative polynomial degree");
}

Polynomial Polynomial::constant(int var_count, Coefficient c) {
    Polynomial p(var_count, 0);
    p.add_term(ExponentVector::zeros(var_count), std::move(c));
    return p;
}

void Polynomial::add_term(const ExponentVector& e, Coefficient c) {
    if (e.size() != var_count_) throw Error("exponent vector length mismatch");
    if (e.total_degree() != degree_) throw Error("term degree violates homogeneity");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Coefficient& Polynomial::coefficient(const ExponentVector& e) const {
    static const Coefficient kZero{};
    if (e.size() != var_count_) throw Error("exponent vector length mismatch");
    auto it = terms_.find(e);
    return it == terms_.end() ? kZero : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(var_count_, degree_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (var_count_ != o.var_count_) throw Error("variable count mismatch");
    if (degree_ != o.degree_) throw Error("degree mismatch in homogeneous sum");
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (var_count_ != o.var_count_) throw Error("variable count mismatch");
    Polynomial out(var_count_, degree_ + o.degree_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            out.add_term(ea.plus(eb), ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
    Polynomial out(var_count_, degree_);
    for (const auto& [e, tc] : terms_) out.add_term(e, tc * c);
    return out;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw Error("negative exponent");
    Polynomial acc = Polynomial::constant(var_count_, Coefficient(1));
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

Polynomial Polynomial::restrict_zero(const std::vector<int>& zeroed) const {
    std::vector<bool> drop(static_cast<std::size_t>(var_count_), false);
    for (int i : zeroed) {
        if (i < 0 || i >= var_count_) throw Error("restricted variable out of range");
        drop[static_cast<std::size_t>(i)] = true;
    }
    int kept = var_count_ - static_cast<int>(zeroed.size());
    Polynomial out(kept, degree_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> reduced;
        reduced.reserve(static_cast<std::size_t>(kept));
        bool dead = false;
        for (int i = 0; i < var_count_ && !dead; ++i) {
            if (drop[static_cast<std::size_t>(i)]) dead = e[i] > 0;
            else reduced.push_back(e[i]);
        }
        if (!dead) out.add_term(ExponentVector(std::move(reduced)), c);
    }
    return out;
}

std::complex<double> Polynomial::eval(std::span<const std::complex<double>> point) const {
    if (static_cast<int>(point.size()) != var_count_) throw Error("evaluation point length mismatch");
    std::complex<double> total = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> m = c.to_double();
        for (int i = 0; i < var_count_; ++i)
            for (int p = 0; p < e[i]; ++p) m *= point[static_cast<std::size_t>(i)];
        total += m;
    }
    return total;
}

std::string Polynomial::str(std::span<const std::string> params) const {
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string xfactors;
        for (int i = 0; i < var_count_; ++i)
            detail::append_factor(xfactors, "x" + std::to_string(i + 1), it->first[i]);
        if (it->second.is_rational()) {
            detail::append_term(out, it->second.rational(), xfactors);
        } else {
            const auto& pterms = it->second.param_terms();
            for (auto pt = pterms.rbegin(); pt != pterms.rend(); ++pt) {
                std::string factors;
                for (int i = 0; i < pt->first.size(); ++i)
                    detail::append_factor(factors, params[static_cast<std::size_t>(i)], pt->first[i]);
                if (!xfactors.empty()) {
                    if (!factors.empty()) factors += "*";
                    factors += xfactors;
                }
                detail::append_term(out, pt->second, factors);
            }
        }
    }
    return out.empty() ? "0" : out;
}

PowerTable::PowerTable(Polynomial base) {
    powers_.push_back(Polynomial::constant(base.var_count(), Coefficient(1)));
    powers_.push_back(std::move(base));
}

void PowerTable::ensure(int k) {
    while (built() < k) powers_.push_back(powers_.back() * powers_[1]);
}

const Polynomial& PowerTable::power(int k) const {
    if (k < 0 || k > built()) throw Error("power index outside built range");
    return powers_[static_cast<std::size_t>(k)];
}

PolySystem make_system(std::vector<Polynomial> polys, std::vector<std::string> params) {
    if (polys.empty()) throw Error("empty polynomial system");
    PolySystem sys;
    sys.n = static_cast<int>(polys.size());
    sys.params = std::move(params);
    for (int i = 0; i < sys.n; ++i) {
        const Polynomial& p = polys[static_cast<std::size_t>(i)];
        std::string name = "f" + std::to_string(i + 1);
        if (p.var_count() != sys.n)
            throw Error(name + " has " + std::to_string(p.var_count()) +
                        " variables, expected " + std::to_string(sys.n));
        if (p.is_zero()) throw Error(name + " is the zero polynomial");
        if (p.degree() < 1) throw Error(name + " must have degree >= 1");
        sys.degrees.push_back(p.degree());
    }
    sys.polys = std::move(polys);
    return sys;
}

PolySystem restrict_system(const PolySystem& sys, const std::vector<int>& zeroed) {
    PolySystem sub;
    sub.params = sys.params;
    std::vector<bool> drop(static_cast<std::size_t>(sys.n), false);
    for (int i : zeroed) drop[static_cast<std::size_t>(i)] = true;
    for (int i = 0; i < sys.n; ++i) {
        if (drop[static_cast<std::size_t>(i)]) continue;
        sub.polys.push_back(sys.polys[static_cast<std::size_t>(i)].restrict_zero(zeroed));
        sub.degrees.push_back(sys.degrees[static_cast<std::size_t>(i)]);
    }
    sub.n = static_cast<int>(sub.polys.size());
    return sub;
}

} // namespace reskit
