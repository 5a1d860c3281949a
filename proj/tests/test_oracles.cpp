#include "doctest.h"

#include <cmath>

#include "reskit/errors.hpp"
#include "reskit/oracles.hpp"
#include "reskit/parser.hpp"
#include "reskit/schur.hpp"
#include "test_support.hpp"

using namespace reskit;
using reskit::testing::Rng;
using reskit::testing::random_homogeneous;
using reskit::testing::random_system;

namespace {

PolySystem parse_system(int n, const std::vector<std::string>& texts,
                        std::vector<std::string> params = {}) {
    std::vector<Polynomial> polys;
    for (const std::string& t : texts) polys.push_back(parse_polynomial(t, n, params));
    return make_system(std::move(polys), std::move(params));
}

double rel_err(double actual, double expect) {
    double scale = std::max(std::abs(expect), 1.0);
    return std::abs(actual - expect) / scale;
}

} // namespace

TEST_CASE("dense determinants") {
    DenseMatrix m(3, 3);
    int vals[3][3] = {{2, 0, 1}, {1, 3, 2}, {0, 1, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Coefficient(vals[i][j]);
    CHECK(m.determinant() == Coefficient(21));

    DenseMatrix sing(2, 2);
    sing.at(0, 0) = Coefficient(1);
    sing.at(0, 1) = Coefficient(2);
    sing.at(1, 0) = Coefficient(2);
    sing.at(1, 1) = Coefficient(4);
    CHECK(sing.determinant().is_zero());

    DenseMatrix empty(0, 0);
    CHECK(empty.determinant() == Coefficient(1));

    DenseMatrix rect(2, 3);
    CHECK_THROWS_AS(rect.determinant(), Error);

    DenseMatrix par(2, 2);
    Coefficient a = Coefficient::parameter(0, 2);
    Coefficient b = Coefficient::parameter(1, 2);
    par.at(0, 0) = a;
    par.at(0, 1) = Coefficient(1);
    par.at(1, 0) = Coefficient(1);
    par.at(1, 1) = b;
    CHECK(par.determinant() == a * b - Coefficient(1));

    // Pivoting: leading zero forces a row swap.
    DenseMatrix piv(2, 2);
    piv.at(0, 0) = Coefficient(0);
    piv.at(0, 1) = Coefficient(3);
    piv.at(1, 0) = Coefficient(5);
    piv.at(1, 1) = Coefficient(7);
    CHECK(piv.determinant() == Coefficient(-15));
}

TEST_CASE("complex approximations must be finite") {
    ComplexApprox ok(1.5, -2.0);
    CHECK(ok.value() == std::complex<double>(1.5, -2.0));
    CHECK_THROWS_AS(ComplexApprox(std::nan(""), 0.0), Error);
    CHECK_THROWS_AS(ComplexApprox(0.0, INFINITY), Error);
}

TEST_CASE("sylvester on generic linear forms") {
    std::vector<std::string> params{"a", "b", "c", "d"};
    PolySystem sys = parse_system(2, {"a*x1 + b*x2", "c*x1 + d*x2"}, params);
    auto p = [&](int i) { return Coefficient::parameter(i, 4); };
    CHECK(sylvester_resultant(sys.polys[0], sys.polys[1]) == p(0) * p(3) - p(1) * p(2));
}

TEST_CASE("sylvester on the diagonal quadratic system") {
    PolySystem sys = parse_system(2, {"x1^2", "x2^2"});
    CHECK(sylvester_resultant(sys.polys[0], sys.polys[1]) == Coefficient(1));
}

TEST_CASE("sylvester matches the trace resultant on random binary systems") {
    Rng rng(5150);
    for (int iter = 0; iter < 12; ++iter) {
        std::vector<int> degrees{rng.range(1, 3), rng.range(1, 3)};
        PolySystem sys = random_system(rng, degrees, -5, 5);
        CHECK(sylvester_resultant(sys.polys[0], sys.polys[1]) == resultant(sys));
    }
}

TEST_CASE("sylvester handles degenerate leading structure") {
    PolySystem sys = parse_system(2, {"x1*x2", "x1^2 - x2^2"});
    CHECK(sylvester_resultant(sys.polys[0], sys.polys[1]) == resultant(sys));
    PolySystem tail = parse_system(2, {"x1*x2 + x2^2", "x1^2"});
    CHECK(sylvester_resultant(tail.polys[0], tail.polys[1]) == resultant(tail));
}

TEST_CASE("determinant oracle") {
    std::vector<std::string> params{"a", "b", "c", "d"};
    PolySystem sys = parse_system(2, {"a*x1 + b*x2", "c*x1 + d*x2"}, params);
    auto p = [&](int i) { return Coefficient::parameter(i, 4); };
    CHECK(determinant_resultant(sys) == p(0) * p(3) - p(1) * p(2));

    PolySystem id3 = parse_system(3, {"x1", "x2", "x3"});
    CHECK(determinant_resultant(id3) == Coefficient(1));

    Rng rng(88);
    for (int iter = 0; iter < 8; ++iter) {
        int n = rng.range(2, 4);
        PolySystem lin = random_system(rng, std::vector<int>(static_cast<std::size_t>(n), 1),
                                       -5, 5);
        CHECK(determinant_resultant(lin) == resultant(lin));
    }

    PolySystem quad = parse_system(2, {"x1^2", "x2^2"});
    CHECK_THROWS_AS(determinant_resultant(quad), Error);
}

TEST_CASE("macaulay agrees with sylvester for binary systems") {
    Rng rng(246);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<int> degrees{rng.range(1, 3), rng.range(1, 3)};
        PolySystem sys = random_system(rng, degrees, -5, 5);
        CHECK(macaulay_resultant(sys) == sylvester_resultant(sys.polys[0], sys.polys[1]));
    }
}

TEST_CASE("macaulay agrees with the trace resultant for small systems") {
    Rng rng(369);
    std::vector<std::vector<int>> profiles{{1, 1, 1}, {1, 1, 2}, {2, 2, 1}, {2, 2, 2}};
    for (const auto& degrees : profiles) {
        PolySystem sys = random_system(rng, degrees, -4, 4);
        CHECK(macaulay_resultant(sys) == resultant(sys));
    }
}

TEST_CASE("macaulay handles the symmetric parametric quadratics") {
    std::vector<std::string> params{"a", "b", "c", "alpha"};
    PolySystem sys = parse_system(3,
                                  {"a*x1^2 + alpha*x2*x3", "b*x2^2 + alpha*x1*x3",
                                   "c*x3^2 + alpha*x1*x2"},
                                  params);
    Coefficient r = resultant(sys);
    CHECK(macaulay_resultant(sys) == r);
}

TEST_CASE("macaulay refuses a vanishing denominator minor") {
    PolySystem sys = parse_system(3, {"x1*x2", "x2^2", "x3^2"});
    CHECK_THROWS_AS(macaulay_resultant(sys), OracleInconclusive);
}

TEST_CASE("macaulay rejects unsupported shapes") {
    PolySystem big = parse_system(
        5, {"x1", "x2", "x3", "x4", "x5"});
    CHECK_THROWS_AS(macaulay_resultant(big), Error);

    std::vector<std::string> params{"a"};
    PolySystem par = parse_system(3, {"a*x1^3 + x2^3", "x2^3", "x3^3"}, params);
    CHECK_THROWS_AS(macaulay_resultant(par), Error);
}

TEST_CASE("numeric root product on fixed systems") {
    PolySystem lin = parse_system(2, {"x1 - x2", "x1 + x2"});
    ComplexApprox v = numeric_root_product(lin.polys[0], lin.polys[1]);
    CHECK(rel_err(v.re, 2.0) < 1e-12);
    CHECK(std::abs(v.im) < 1e-12);

    PolySystem quad = parse_system(2, {"x1^2 - 2*x2^2", "x1^2 - 3*x2^2"});
    ComplexApprox w = numeric_root_product(quad.polys[0], quad.polys[1]);
    Coefficient exact = resultant(quad);
    CHECK(rel_err(w.re, exact.rational().to_double()) < 1e-10);
}

TEST_CASE("numeric root product matches the exact resultant on random cubics") {
    Rng rng(13579);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<int> degrees{rng.range(1, 3), rng.range(1, 3)};
        PolySystem sys = random_system(rng, degrees, -5, 5);
        // The oracle needs non-vanishing leading coefficients.
        bool ok = true;
        for (int i = 0; i < 2; ++i) {
            std::vector<int> lead{0, degrees[static_cast<std::size_t>(i)]};
            if (sys.polys[static_cast<std::size_t>(i)].coefficient(ExponentVector(lead)).is_zero())
                ok = false;
        }
        if (!ok) continue;
        Coefficient exact = resultant(sys);
        ComplexApprox v = numeric_root_product(sys.polys[0], sys.polys[1]);
        CHECK(rel_err(v.re, exact.rational().to_double()) < 1e-8);
        CHECK(std::abs(v.im) / std::max(1.0, std::abs(exact.rational().to_double())) < 1e-8);
    }
}

TEST_CASE("numeric root product rejects vanishing leading coefficients") {
    PolySystem sys = parse_system(2, {"x1*x2", "x1^2 + x2^2"});
    CHECK_THROWS_AS(numeric_root_product(sys.polys[0], sys.polys[1]), Error);
}

TEST_CASE("oracles coincide on a shared system") {
    std::vector<std::string> params{"t"};
    PolySystem sys = parse_system(2, {"x1^2 + t*x2^2", "x1 + x2"}, params);
    Coefficient by_trace = resultant(sys);
    Coefficient by_sylvester = sylvester_resultant(sys.polys[0], sys.polys[1]);
    Coefficient by_macaulay = macaulay_resultant(sys);
    CHECK(by_trace == by_sylvester);
    CHECK(by_trace == by_macaulay);
    Coefficient t = Coefficient::parameter(0, 1);
    CHECK(by_trace == Coefficient(1) + t);
}

TEST_CASE("macaulay handles a missing leading monomial") {
    // f3 has no x3^2 term at all; the denominator minor stays non-singular.
    PolySystem sys = parse_system(3, {"x1^2 + x1*x2 + x3^2", "x2^2 + x1*x3", "x1*x2 + x2*x3"});
    CHECK(macaulay_resultant(sys) == resultant(sys));
}
