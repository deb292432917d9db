#include <doctest.h>

#include "brieskorn/knots.hpp"

using namespace brieskorn;
using namespace brieskorn::knots;

TEST_CASE("fox-milnor fails on the Stern-family Alexander polynomial") {
    IntPolynomial delta = IntPolynomial::from_int64({2, -5, -2, 11, -2, -5, 2});
    FoxMilnorResult r = fox_milnor_test(delta);
    CHECK(r.verdict == FoxMilnorVerdict::fail);
    CHECK(r.exhaustive);
}

TEST_CASE("fox-milnor passes with the expected factors") {
    FoxMilnorResult unknot = fox_milnor_test(IntPolynomial::from_int64({1}));
    CHECK(unknot.verdict == FoxMilnorVerdict::pass);
    REQUIRE(unknot.factor);
    CHECK(*unknot.factor == IntPolynomial::from_int64({1}));

    // (2 - t)(2t - 1) = -2 + 5t - 2t^2, so delta = 2 - 5t + 2t^2 factors
    IntPolynomial delta = IntPolynomial::from_int64({2, -5, 2});
    FoxMilnorResult r = fox_milnor_test(delta);
    CHECK(r.verdict == FoxMilnorVerdict::pass);
    REQUIRE(r.factor);
    CHECK(*r.factor == IntPolynomial::from_int64({2, -1}));
    // the reported factor reproduces delta up to the sign convention
    IntPolynomial prod = *r.factor * r.factor->reversed();
    bool plus = prod == delta;
    std::vector<BigInt> neg;
    for (const BigInt& v : prod.coefficients()) neg.push_back(-v);
    bool minus = IntPolynomial(neg) == delta;
    CHECK((plus || minus));
}

TEST_CASE("fox-milnor pass implies |delta(-1)| is a perfect square") {
    std::vector<std::vector<long long>> candidates = {
        {1}, {2, -5, 2}, {4}, {1, -3, 1}, {2, -3, 2}, {6, -13, 6}, {1, -1, 1},
        {2, -1, 2}, {3, -5, 3}, {1, 0, 1},
    };
    for (const auto& c : candidates) {
        IntPolynomial delta = IntPolynomial::from_int64(c);
        FoxMilnorResult r = fox_milnor_test(delta);
        if (r.verdict == FoxMilnorVerdict::pass) {
            BigInt v = delta.evaluate(BigInt(-1)).abs();
            BigInt root(0);
            while (root * root < v) root += BigInt(1);
            CHECK(root * root == v);
            // and the factor really works
            REQUIRE(r.factor);
            IntPolynomial prod = *r.factor * r.factor->reversed();
            std::vector<BigInt> neg;
            for (const BigInt& x : prod.coefficients()) neg.push_back(-x);
            CHECK((prod == delta || IntPolynomial(neg) == delta));
        }
    }
}

TEST_CASE("fox-milnor is stable under the t -> 1/t normalization") {
    IntPolynomial delta = IntPolynomial::from_int64({2, -5, -2, 11, -2, -5, 2});
    CHECK(fox_milnor_test(delta.reversed()).verdict == fox_milnor_test(delta).verdict);
    IntPolynomial pass = IntPolynomial::from_int64({2, -5, 2});
    CHECK(fox_milnor_test(pass.reversed()).verdict == FoxMilnorVerdict::pass);
}

TEST_CASE("fox-milnor input validation and small bounds") {
    CHECK_THROWS_AS(fox_milnor_test(IntPolynomial::from_int64({1, 2, 3})), validation_error);
    CHECK_THROWS_AS(fox_milnor_test(IntPolynomial::from_int64({1, 1})), validation_error);
    // an artificially small bound cannot prove failure
    IntPolynomial delta = IntPolynomial::from_int64({2, -5, -2, 11, -2, -5, 2});
    FoxMilnorResult r = fox_milnor_test(delta, BigInt(1));
    CHECK(r.verdict == FoxMilnorVerdict::inconclusive);
}

TEST_CASE("torus knot signatures") {
    // frozen 2x2 oracle: [[-2,1],[1,-2]] has eigenvalues -1, -3
    IntegerMatrix s23 = torus_symmetrized_seifert_form(2, 3);
    CHECK(s23 == IntegerMatrix::from_rows({{-2, 1}, {1, -2}}));
    CHECK(torus_signature(2, 3) == -2);

    // 6x6 tridiagonal(-2; 1) is negative definite: minors alternate in sign
    IntegerMatrix s27 = torus_symmetrized_seifert_form(2, 7);
    for (int k = 1; k <= 6; ++k) {
        IntegerMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = s27.at(i, j);
        CHECK(sub.determinant().sign() == (k % 2 ? -1 : 1));
    }
    CHECK(torus_signature(2, 7) == -6);

    CHECK(torus_signature(1, 5) == 0);
    CHECK(torus_signature(4, 3) == -6);
    CHECK_THROWS_AS(torus_signature(4, 6), validation_error);
}

TEST_CASE("sigma(T(2,q)) = 1 - q for odd q up to 21") {
    for (long long q = 3; q <= 21; q += 2) CHECK(torus_signature(2, q) == 1 - q);
}

TEST_CASE("torus signature is symmetric in p and q") {
    const std::pair<long long, long long> cases[] = {{2, 3}, {3, 4}, {2, 7}, {3, 5}, {4, 5}, {5, 7}};
    for (auto [p, q] : cases) CHECK(torus_signature(p, q) == torus_signature(q, p));
}

TEST_CASE("slice obstruction reports") {
    SliceObstructionReport r = slice_obstruction_report(4, 3);
    CHECK(r.obstructed);
    CHECK(r.signature == -6);
    SliceObstructionReport unknot = slice_obstruction_report(1, 5);
    CHECK(!unknot.obstructed);
    SliceObstructionReport t25 = slice_obstruction_report(2, 5);
    CHECK(t25.obstructed);
    CHECK(t25.signature == -4);
}
