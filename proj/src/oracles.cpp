#include "reskit/oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace reskit {

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
    cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                  Coefficient(0));
}

std::size_t DenseMatrix::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("matrix index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
}

Coefficient DenseMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    int n = rows_;
    if (n == 0) return Coefficient(1);
    std::vector<Coefficient> a = cells_;
    auto cell = [&](int i, int j) -> Coefficient& {
        return a[static_cast<std::size_t>(i) * n + j];
    };
    int sign = 1;
    Coefficient prev(1);
    for (int p = 0; p + 1 < n; ++p) {
        if (cell(p, p).is_zero()) {
            int q = p + 1;
            while (q < n && cell(q, p).is_zero()) ++q;
            if (q == n) return Coefficient(0);
            for (int j = 0; j < n; ++j) std::swap(cell(p, j), cell(q, j));
            sign = -sign;
        }
        for (int i = p + 1; i < n; ++i)
            for (int j = p + 1; j < n; ++j)
                cell(i, j) = (cell(p, p) * cell(i, j) - cell(i, p) * cell(p, j)).exact_div(prev);
        prev = cell(p, p);
    }
    Coefficient det = cell(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

ComplexApprox::ComplexApprox(double real, double imaginary) : re(real), im(imaginary) {
    if (!std::isfinite(real) || !std::isfinite(imaginary))
        throw Error("non-finite complex value");
}

namespace {

void require_binary_form(const Polynomial& f, const char* which) {
    if (f.var_count() != 2)
        throw Error(std::string(which) + " is not a binary form (need exactly 2 variables)");
    if (f.is_zero()) throw Error(std::string(which) + " is the zero polynomial");
    if (f.degree() < 1) throw Error(std::string(which) + " must have degree >= 1");
}

// coefficient of z^j in f(1, z), j = 0..deg
Coefficient ascending_coefficient(const Polynomial& f, int j) {
    return f.coefficient(ExponentVector({f.degree() - j, j}));
}

} // namespace

Coefficient sylvester_resultant(const Polynomial& f1, const Polynomial& f2) {
    require_binary_form(f1, "f1");
    require_binary_form(f2, "f2");
    int r1 = f1.degree(), r2 = f2.degree();
    int size = r1 + r2;
    DenseMatrix m(size, size);
    for (int i = 0; i < r2; ++i)
        for (int j = 0; j <= r1; ++j) m.at(i, i + j) = ascending_coefficient(f1, j);
    for (int i = 0; i < r1; ++i)
        for (int j = 0; j <= r2; ++j) m.at(r2 + i, i + j) = ascending_coefficient(f2, j);
    return m.determinant();
}

Coefficient determinant_resultant(const PolySystem& sys) {
    for (int r : sys.degrees)
        if (r != 1) throw Error("determinant oracle requires an all-linear system");
    int n = sys.n;
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(j)] = 1;
            m.at(i, j) = sys.polys[static_cast<std::size_t>(i)].coefficient(ExponentVector(e));
        }
    return m.determinant();
}

namespace {

bool system_is_rational(const PolySystem& sys) {
    for (const Polynomial& f : sys.polys)
        for (const auto& [e, c] : f.terms())
            if (!c.is_rational()) return false;
    return true;
}

void degree_monomials(int n, int left, std::vector<int>& current,
                      std::vector<ExponentVector>& out) {
    if (static_cast<int>(current.size()) == n - 1) {
        current.push_back(left);
        out.emplace_back(current);
        current.pop_back();
        return;
    }
    for (int e = 0; e <= left; ++e) {
        current.push_back(e);
        degree_monomials(n, left - e, current, out);
        current.pop_back();
    }
}

} // namespace

Coefficient macaulay_resultant(const PolySystem& sys) {
    int n = sys.n;
    if (n < 1) throw Error("empty polynomial system");
    if (n > 4) throw Error("macaulay oracle supports n <= 4");
    bool rational = system_is_rational(sys);
    if (!rational) {
        bool small = n <= 3 && std::all_of(sys.degrees.begin(), sys.degrees.end(),
                                           [](int r) { return r <= 2; });
        if (!small)
            throw Error("parametric macaulay oracle limited to n <= 3 with degrees <= 2");
    }

    int rho = 1;
    for (int r : sys.degrees) rho += r - 1;

    std::vector<ExponentVector> monomials;
    {
        std::vector<int> current;
        degree_monomials(n, rho, current, monomials);
    }
    std::sort(monomials.begin(), monomials.end(),
              [](const ExponentVector& a, const ExponentVector& b) { return b < a; });

    std::map<ExponentVector, int> column;
    for (std::size_t c = 0; c < monomials.size(); ++c)
        column.emplace(monomials[c], static_cast<int>(c));

    int size = static_cast<int>(monomials.size());
    DenseMatrix m(size, size);
    std::vector<int> nonreduced;
    for (int row = 0; row < size; ++row) {
        const ExponentVector& mono = monomials[static_cast<std::size_t>(row)];
        int owner = -1, divisors = 0;
        for (int i = 0; i < n; ++i) {
            if (mono[i] >= sys.degrees[static_cast<std::size_t>(i)]) {
                ++divisors;
                if (owner < 0) owner = i;
            }
        }
        if (owner < 0) throw Error("macaulay row without an owning polynomial");
        if (divisors >= 2) nonreduced.push_back(row);
        std::vector<int> shift = mono.entries();
        shift[static_cast<std::size_t>(owner)] -= sys.degrees[static_cast<std::size_t>(owner)];
        for (const auto& [e, c] : sys.polys[static_cast<std::size_t>(owner)].terms()) {
            std::vector<int> col = shift;
            for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] += e[i];
            m.at(row, column.at(ExponentVector(std::move(col)))) = c;
        }
    }

    Coefficient numerator = m.determinant();
    if (nonreduced.empty()) return numerator;

    int sub = static_cast<int>(nonreduced.size());
    DenseMatrix mm(sub, sub);
    for (int i = 0; i < sub; ++i)
        for (int j = 0; j < sub; ++j)
            mm.at(i, j) = m.at(nonreduced[static_cast<std::size_t>(i)],
                               nonreduced[static_cast<std::size_t>(j)]);
    Coefficient denominator = mm.determinant();
    if (denominator.is_zero())
        throw OracleInconclusive("macaulay denominator minor vanishes");
    return numerator.exact_div(denominator);
}

namespace {

// NR-style radix balancing; a similarity transform, so eigenvalues survive.
void balance(Eigen::MatrixXd& a) {
    const double radix = 2.0, sqrdx = radix * radix;
    int n = static_cast<int>(a.rows());
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix, f = 1.0, s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) *= 1.0 / f;
                a.col(i) *= f;
            }
        }
    }
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& ascending) {
    int deg = static_cast<int>(ascending.size()) - 1;
    if (deg < 1) return {};
    double lead = ascending.back();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i + 1 < deg; ++i) companion(i + 1, i) = 1.0;
    for (int i = 0; i < deg; ++i)
        companion(i, deg - 1) = -ascending[static_cast<std::size_t>(i)] / lead;
    balance(companion);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw Error("eigenvalue iteration failed");
    std::vector<std::complex<double>> roots;
    roots.reserve(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()(i));
    // deterministic combination order
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return roots;
}

std::vector<double> ascending_real(const Polynomial& f, const char* which) {
    std::vector<double> coeffs;
    for (int j = 0; j <= f.degree(); ++j) {
        const Coefficient& c = ascending_coefficient(f, j);
        if (!c.is_rational())
            throw Error("numeric oracle requires rational coefficients");
        coeffs.push_back(c.rational().to_double());
    }
    if (coeffs.back() == 0.0)
        throw Error(std::string(which) + " has a vanishing leading coefficient");
    return coeffs;
}

} // namespace

ComplexApprox numeric_root_product(const Polynomial& f1, const Polynomial& f2) {
    require_binary_form(f1, "f1");
    require_binary_form(f2, "f2");
    std::vector<double> p1 = ascending_real(f1, "f1");
    std::vector<double> p2 = ascending_real(f2, "f2");
    std::vector<std::complex<double>> alpha = polynomial_roots(p1);
    std::vector<std::complex<double>> beta = polynomial_roots(p2);
    std::complex<double> prod =
        std::pow(std::complex<double>(p1.back(), 0.0), f2.degree()) *
        std::pow(std::complex<double>(p2.back(), 0.0), f1.degree());
    for (const auto& b : beta)
        for (const auto& a : alpha) prod *= (b - a);
    return ComplexApprox(prod.real(), prod.imag());
}

} // namespace reskit
