#pragma once

#include "reskit/polynomial.hpp"

namespace reskit {

/// Rectangular matrix over Coefficient with a fraction-free (Bareiss)
/// exact determinant; hosts the Sylvester and Macaulay constructions.
class DenseMatrix {
public:
    DenseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Coefficient& at(int i, int j) { return cells_[index(i, j)]; }
    const Coefficient& at(int i, int j) const { return cells_[index(i, j)]; }

    Coefficient determinant() const;

private:
    std::size_t index(int i, int j) const;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Coefficient> cells_;
};

/// Finite complex value; NaN or infinity is rejected at construction.
struct ComplexApprox {
    double re = 0.0;
    double im = 0.0;
    ComplexApprox(double real, double imaginary);
    std::complex<double> value() const { return {re, im}; }
};

/// Determinant of the (r1+r2) x (r1+r2) Sylvester matrix of the two binary
/// forms, built from the dehomogenized coefficient sequences in ascending
/// z-powers (z = x2/x1). Exact; parametric coefficients allowed.
Coefficient sylvester_resultant(const Polynomial& f1, const Polynomial& f2);

/// Determinant of the n x n coefficient matrix of an all-linear system
/// (row i = coefficients of f_i in x_1..x_n).
Coefficient determinant_resultant(const PolySystem& sys);

/// Classical Macaulay construction at critical degree rho = sum(r_i - 1) + 1:
/// det of the full matrix divided exactly by det of the submatrix on the
/// non-reduced monomials. Supports n <= 4 with rational coefficients and
/// n <= 3, degrees <= 2 parametrically. A vanishing denominator minor throws
/// OracleInconclusive rather than guessing.
Coefficient macaulay_resultant(const PolySystem& sys);

/// Floating-point n=2 check: roots of the dehomogenized forms via balanced
/// companion-matrix eigenvalues, combined as a^{r2} * b^{r1} * prod(beta_j -
/// alpha_i) with a, b the leading coefficients. Requires rational
/// coefficients and non-vanishing leading coefficients.
ComplexApprox numeric_root_product(const Polynomial& f1, const Polynomial& f2);

} // namespace reskit
