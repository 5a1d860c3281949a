#include "doctest.h"

#include <algorithm>
#include <set>

#include "reskit/errors.hpp"
#include "reskit/parser.hpp"
#include "reskit/traces.hpp"
#include "test_support.hpp"

using namespace reskit;
using reskit::testing::Rng;
using reskit::testing::build_powers;
using reskit::testing::random_system;
using reskit::testing::trace_bruteforce;

namespace {

PolySystem parse_system(int n, const std::vector<std::string>& texts,
                        std::vector<std::string> params = {}) {
    std::vector<Polynomial> polys;
    for (const std::string& t : texts) polys.push_back(parse_polynomial(t, n, params));
    return make_system(std::move(polys), std::move(params));
}

TransportationMatrix mat2(int a, int b, int c, int d) {
    TransportationMatrix m(2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

} // namespace

TEST_CASE("transportation enumeration") {
    auto ones = enumerate_transportation({1, 1}, {1, 1});
    REQUIRE(ones.size() == 2);
    std::set<std::vector<int>> seen;
    for (const auto& m : ones) seen.insert(m.cells);
    CHECK(seen.count({1, 0, 0, 1}) == 1);
    CHECK(seen.count({0, 1, 1, 0}) == 1);

    auto single = enumerate_transportation({2}, {2});
    REQUIRE(single.size() == 1);
    CHECK(single[0].at(0, 0) == 2);

    auto twos = enumerate_transportation({2, 2}, {2, 2});
    REQUIRE(twos.size() == 3);
    seen.clear();
    for (const auto& m : twos) seen.insert(m.cells);
    CHECK(seen.count({2, 0, 0, 2}) == 1);
    CHECK(seen.count({1, 1, 1, 1}) == 1);
    CHECK(seen.count({0, 2, 2, 0}) == 1);

    CHECK_THROWS_AS(enumerate_transportation({2, 1}, {1, 1}), Error);
    CHECK_THROWS_AS(enumerate_transportation({1, 1}, {2}), Error);
}

TEST_CASE("minor weights") {
    std::vector<int> degrees{1, 1};
    TraceIndex k{1, 1};
    CHECK(minor_weight(mat2(1, 0, 0, 1), degrees, k) == 0);
    CHECK(minor_weight(mat2(0, 1, 1, 0), degrees, k) == 1);

    std::vector<int> deg2{2, 2};
    TraceIndex k2{2, 2};
    CHECK(minor_weight(mat2(2, 0, 0, 2), deg2, k2) == 2);
    CHECK(minor_weight(mat2(1, 1, 1, 1), deg2, k2) == 3);
    CHECK(minor_weight(mat2(0, 2, 2, 0), deg2, k2) == 4);

    TransportationMatrix one(1);
    one.at(0, 0) = 3;
    CHECK(minor_weight(one, {3}, {1}) == 1);
}

TEST_CASE("positive trace of two generic linear forms") {
    std::vector<std::string> params{"a", "b", "c", "d"};
    PolySystem sys = parse_system(2, {"a*x1 + b*x2", "c*x1 + d*x2"}, params);
    TraceIndex k{1, 1};
    Coefficient t = trace_positive(sys, k, build_powers(sys, k));
    Coefficient b = Coefficient::parameter(1, 4);
    Coefficient c = Coefficient::parameter(2, 4);
    CHECK(t == b * c);
}

TEST_CASE("positive trace of two generic quadratics") {
    std::vector<std::string> params{"a", "b", "c", "d", "e", "f"};
    PolySystem sys = parse_system(
        2, {"a*x1^2 + b*x1*x2 + c*x2^2", "d*x1^2 + e*x1*x2 + f*x2^2"}, params);
    TraceIndex k{1, 1};
    Coefficient t = trace_positive(sys, k, build_powers(sys, k));
    auto p = [&](int i) { return Coefficient::parameter(i, 6); };
    CHECK(t == p(1) * p(4) + Coefficient(2) * p(2) * p(3));
}

TEST_CASE("positive trace of a diagonal system vanishes on mixed indices") {
    PolySystem sys = parse_system(2, {"x1^2", "x2^2"});
    TraceIndex k{1, 1};
    CHECK(trace_positive(sys, k, build_powers(sys, k)).is_zero());
}

TEST_CASE("visitor sees exactly the margin-consistent matrices") {
    Rng rng(2024);
    for (int iter = 0; iter < 6; ++iter) {
        int n = rng.range(2, 3);
        std::vector<int> degrees(static_cast<std::size_t>(n));
        TraceIndex k(static_cast<std::size_t>(n));
        std::vector<int> margins(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            degrees[static_cast<std::size_t>(i)] = rng.range(1, 2);
            k[static_cast<std::size_t>(i)] = rng.range(1, 2);
            margins[static_cast<std::size_t>(i)] =
                degrees[static_cast<std::size_t>(i)] * k[static_cast<std::size_t>(i)];
        }
        PolySystem sys = random_system(rng, degrees, 1, 3);
        std::vector<TransportationMatrix> visited;
        trace_positive(sys, k, build_powers(sys, k),
                       [&](const TransportationMatrix& m) { visited.push_back(m); });
        for (const TransportationMatrix& m : visited) {
            for (int i = 0; i < n; ++i) {
                int row = 0, col = 0;
                for (int j = 0; j < n; ++j) {
                    row += m.at(i, j);
                    col += m.at(j, i);
                }
                CHECK(row == margins[static_cast<std::size_t>(i)]);
                CHECK(col == margins[static_cast<std::size_t>(i)]);
            }
        }
        // Dense systems reach every transportation matrix.
        auto all = enumerate_transportation(margins, margins);
        CHECK(visited.size() == all.size());
    }
}

TEST_CASE("zero-index reduction") {
    std::vector<std::string> params{"a", "b", "c", "d"};
    PolySystem sys = parse_system(2, {"a*x1 + b*x2", "c*x1 + d*x2"}, params);
    auto p = [&](int i) { return Coefficient::parameter(i, 4); };
    CHECK(trace(sys, {1, 0}) == p(0));
    CHECK(trace(sys, {0, 1}) == p(3));
    CHECK(trace(sys, {1, 1}) == p(1) * p(2));
    CHECK(trace(sys, {0, 0}).is_zero());
}

TEST_CASE("single polynomial trace includes the 1/k factor") {
    std::vector<std::string> params{"c"};
    PolySystem sys = parse_system(1, {"c*x1^2"}, params);
    Coefficient c = Coefficient::parameter(0, 1);
    CHECK(trace(sys, {2}) == c * c * Coefficient(Rational(1, 2)));
    CHECK(trace(sys, {1}) == c);
}

TEST_CASE("full table of two generic linear forms") {
    std::vector<std::string> params{"a", "b", "c", "d"};
    PolySystem sys = parse_system(2, {"a*x1 + b*x2", "c*x1 + d*x2"}, params);
    TraceTable t = build_trace_table(sys);
    CHECK(t.bound() == TraceIndex{1, 1});
    CHECK(t.size() == 4);
    auto p = [&](int i) { return Coefficient::parameter(i, 4); };
    CHECK(t.at({0, 0}).is_zero());
    CHECK(t.at({1, 0}) == p(0));
    CHECK(t.at({0, 1}) == p(3));
    CHECK(t.at({1, 1}) == p(1) * p(2));
    REQUIRE(t.system.has_value());
    CHECK(t.system->n == 2);
}

TEST_CASE("full table of the diagonal quadratic system") {
    PolySystem sys = parse_system(2, {"x1^2", "x2^2"});
    TraceTable t = build_trace_table(sys);
    CHECK(t.bound() == TraceIndex{2, 2});
    CHECK(t.size() == 9);
    CHECK(t.at({1, 0}) == Coefficient(2));
    CHECK(t.at({2, 0}) == Coefficient(1));
    CHECK(t.at({0, 1}) == Coefficient(2));
    CHECK(t.at({0, 2}) == Coefficient(1));
    CHECK(t.at({1, 1}).is_zero());
    CHECK(t.at({2, 1}).is_zero());
    CHECK(t.at({1, 2}).is_zero());
    CHECK(t.at({2, 2}).is_zero());
    CHECK(t.at({0, 0}).is_zero());
}

TEST_CASE("table over three quadratics has the full index range") {
    Rng rng(808);
    PolySystem sys = random_system(rng, {2, 2, 2}, -3, 3);
    TraceTable t = build_trace_table(sys);
    CHECK(t.bound() == TraceIndex{4, 4, 4});
    CHECK(t.size() == 125);
    for (std::size_t off = 0; off < t.size(); ++off) {
        TraceIndex v = t.index_at(off);
        CHECK(t.offset(v) == off);
        CHECK(index_leq(v, t.bound()));
    }
}

TEST_CASE("offsets respect the componentwise order") {
    TraceTable t(TraceIndex{3, 2, 4});
    for (std::size_t a = 0; a < t.size(); ++a) {
        TraceIndex u = t.index_at(a);
        for (std::size_t b = 0; b < t.size(); ++b)
            if (index_leq(u, t.index_at(b))) CHECK(a <= b);
    }
    CHECK_THROWS_AS(t.offset({4, 0, 0}), Error);
    CHECK_THROWS_AS(t.offset({0, 0}), Error);
}

TEST_CASE("fused search equals transportation enumeration") {
    Rng rng(171717);
    std::vector<std::vector<int>> profiles{{1},    {2},    {1, 1}, {1, 2},
                                           {2, 2}, {1, 1, 1}, {1, 2, 2}, {2, 2, 2}};
    for (const auto& degrees : profiles) {
        int n = static_cast<int>(degrees.size());
        for (int draw = 0; draw < 3; ++draw) {
            PolySystem sys = random_system(rng, degrees, -3, 3);
            std::vector<TraceIndex> ks;
            TraceIndex k(static_cast<std::size_t>(n), 1);
            for (;;) {
                ks.push_back(k);
                int i = 0;
                while (i < n && k[static_cast<std::size_t>(i)] == 2) {
                    k[static_cast<std::size_t>(i)] = 1;
                    ++i;
                }
                if (i == n) break;
                ++k[static_cast<std::size_t>(i)];
            }
            for (const TraceIndex& idx : ks)
                CHECK(trace_positive(sys, idx, build_powers(sys, idx)) ==
                      trace_bruteforce(sys, idx));
        }
    }
}

TEST_CASE("trace scales as lambda to the k_i") {
    Rng rng(43);
    for (int iter = 0; iter < 8; ++iter) {
        int n = rng.range(2, 3);
        std::vector<int> degrees(static_cast<std::size_t>(n));
        for (int& d : degrees) d = rng.range(1, 2);
        PolySystem sys = random_system(rng, degrees, -3, 3);
        TraceIndex k(static_cast<std::size_t>(n));
        for (int& v : k) v = rng.range(0, 2);
        int slot = rng.range(0, n - 1);
        Rational lambda(rng.range(2, 5), rng.range(1, 3));

        PolySystem scaled = sys;
        scaled.polys[static_cast<std::size_t>(slot)] =
            sys.polys[static_cast<std::size_t>(slot)].scaled(Coefficient(lambda));

        Coefficient expect = trace(sys, k);
        for (int p = 0; p < k[static_cast<std::size_t>(slot)]; ++p)
            expect *= Coefficient(lambda);
        CHECK(trace(scaled, k) == expect);
    }
}

TEST_CASE("zero-index reduction matches direct nesting in any order") {
    Rng rng(4321);
    for (int iter = 0; iter < 5; ++iter) {
        PolySystem sys = random_system(rng, {2, 1, 3}, -3, 3);
        TraceIndex k{0, rng.range(1, 2), 0};
        Coefficient direct = trace(sys, k);

        // Peel index 0 first, then index 2.
        PolySystem first = restrict_system(sys, {0});
        PolySystem then = restrict_system(first, {1});
        Coefficient nested = trace(then, {k[1]}) * Coefficient(Rational(sys.degrees[0])) *
                             Coefficient(Rational(sys.degrees[2]));
        CHECK(direct == nested);

        // Opposite order.
        PolySystem second = restrict_system(sys, {2});
        PolySystem other = restrict_system(second, {0});
        Coefficient swapped = trace(other, {k[1]}) * Coefficient(Rational(sys.degrees[2])) *
                              Coefficient(Rational(sys.degrees[0]));
        CHECK(direct == swapped);
    }
}

TEST_CASE("table construction is thread-count independent") {
    Rng rng(606);
    PolySystem sys = random_system(rng, {2, 2}, -4, 4);
    TraceTable a = build_trace_table(sys, 1);
    TraceTable b = build_trace_table(sys, 4);
    TraceTable c = build_trace_table(sys, 0);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t off = 0; off < a.size(); ++off) {
        CHECK(a.at_offset(off) == b.at_offset(off));
        CHECK(a.at_offset(off) == c.at_offset(off));
    }
}

TEST_CASE("table entries match single-shot traces") {
    Rng rng(515);
    PolySystem sys = random_system(rng, {2, 1}, -3, 3);
    TraceTable t = build_trace_table(sys);
    for (std::size_t off = 0; off < t.size(); ++off)
        CHECK(t.at_offset(off) == trace(sys, t.index_at(off)));
}
