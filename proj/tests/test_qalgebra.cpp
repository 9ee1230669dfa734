#include "cbethe/evaluate.hpp"
#include "cbethe/json_io.hpp"
#include "cbethe/qexpr.hpp"
#include "cbethe/rational.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace cbethe;

namespace {

QMonomial mono(long coef, std::initializer_list<QFactor> fs) {
    QMonomial m;
    m.coef = coef;
    for (const auto& f : fs) m.mul(f);
    return m;
}

QExpr random_expr(std::mt19937_64& g, int terms) {
    std::uniform_int_distribution<int> col(1, 3), sh(-4, 4), ex(-2, 2), cf(-3, 3), nf(0, 3);
    QExpr e;
    for (int i = 0; i < terms; ++i) {
        QMonomial m;
        m.coef = cf(g);
        int n = nf(g);
        for (int k = 0; k < n; ++k) m.mul(q_factor(col(g), Rational(sh(g), 2), ex(g)));
        e.terms.push_back(m);
    }
    return e;
}

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("factors on one site merge and cancel") {
    QMonomial m = mono(1, {q_factor(1, Rational(1, 2), -1), q_factor(1, Rational(1, 2), 1)});
    CHECK(m.factors.empty());
    QMonomial x = mono(2, {q_factor(2, 0, 1), q_factor(2, 0, 1)});
    REQUIRE(x.factors.size() == 1);
    CHECK(x.factors[0].exp == 2);
    CHECK(x.exponent_of(FactorKind::Q, 2, 0) == 2);
    CHECK(x.exponent_of(FactorKind::Q, 2, 1) == 0);
}

TEST_CASE("normalize merges like monomials and drops zeros") {
    QMonomial a = mono(1, {q_factor(1, -Rational(1, 2), 1), q_factor(1, Rational(1, 2), -1)});
    QExpr e{{a, a, mono(-2, {q_factor(1, Rational(1, 2), -1), q_factor(1, -Rational(1, 2), 1)})}};
    CHECK(normalize(e).empty());
    QExpr f{{a, a}};
    auto n = normalize(f);
    REQUIRE(n.size() == 1);
    CHECK(n.terms[0].coef == 2);
}

TEST_CASE("normalize is idempotent and order independent") {
    std::mt19937_64 g(7);
    for (int trial = 0; trial < 50; ++trial) {
        QExpr e = random_expr(g, 12);
        QExpr n = normalize(e);
        CHECK(normalize(n) == n);
        std::shuffle(e.terms.begin(), e.terms.end(), g);
        CHECK(normalize(e) == n);
    }
}

TEST_CASE("add, subtract and multiply agree with pointwise evaluation") {
    std::mt19937_64 g(11);
    for (int trial = 0; trial < 30; ++trial) {
        QExpr x = random_expr(g, 5), y = random_expr(g, 4);
        Rational d = Rational(static_cast<long>(g() % 7) - 3, 2);
        int ok = testutil::for_points(3, g(), 3, 2, 0, [&](const oracle::Roots& r, const Rational& u) {
            auto A = testutil::assign(r);
            Rational vx = evaluate(x, A, u), vy = evaluate(y, A, u);
            CHECK(evaluate(add(x, y), A, u) == vx + vy);
            CHECK(evaluate(subtract(x, y), A, u) == vx - vy);
            CHECK(evaluate(multiply(x, y), A, u) == vx * vy);
            CHECK(evaluate(scale(x, -3), A, u) == Rational(-3) * vx);
            CHECK(evaluate(shift_expr(x, d), A, u) == evaluate(x, A, u + d));
        });
        CHECK(ok == 3);
    }
}

TEST_CASE("shift by d then -d is the identity") {
    std::mt19937_64 g(3);
    for (int i = 0; i < 20; ++i) {
        QExpr e = normalize(random_expr(g, 6));
        CHECK(shift_expr(shift_expr(e, Rational(5, 2)), Rational(-5, 2)) == e);
        CHECK(shift_expr(e, 0) == e);
    }
}

TEST_CASE("subtracting an expression from itself gives zero") {
    std::mt19937_64 g(5);
    for (int i = 0; i < 20; ++i) {
        QExpr e = random_expr(g, 8);
        CHECK(subtract(e, e).empty());
        CHECK(add(e, negate(e)).empty());
        CHECK(multiply(e, QExpr::one()) == normalize(e));
        CHECK(multiply(e, QExpr::zero()).empty());
    }
}

TEST_CASE("evaluation by hand") {
    // Q1(u-1/2)/Q1(u+1/2) with the single root 0 at u = 3/2: 1/2.
    QExpr e = QExpr::of(mono(1, {q_factor(1, -Rational(1, 2), 1), q_factor(1, Rational(1, 2), -1)}));
    RootAssignment A;
    A.roots = {{Rational(0)}};
    CHECK(evaluate(e, A, Rational(3, 2)) == Rational(1, 2));
    CHECK(evaluate(QExpr::one(), A, Rational(9)) == 1);
    CHECK(evaluate(QExpr::zero(), A, Rational(9)) == 0);
    CHECK_THROWS_AS(evaluate(e, A, Rational(-1, 2)), PoleHit);
    // phi(u) phi(u-1) with w = {2}: u = 5 gives 3 * 2.
    QExpr p = QExpr::of(mono(1, {phi_factor(0, 1), phi_factor(-1, 1)}));
    A.inhom = {Rational(2)};
    CHECK(evaluate(p, A, Rational(5)) == 6);
}

TEST_CASE("complex evaluation agrees with rational evaluation") {
    std::mt19937_64 g(17);
    for (int trial = 0; trial < 10; ++trial) {
        QExpr e = random_expr(g, 5);
        testutil::for_points(2, g(), 3, 2, 0, [&](const oracle::Roots& r, const Rational& u) {
            auto A = testutil::assign(r);
            Rational v = evaluate(e, A, u);
            Complex c = evaluate(e, to_complex(A), Complex(u.to_double(), 0));
            CHECK(std::abs(c - v.to_double()) <= 1e-9 * (1 + std::abs(v.to_double())));
        });
    }
}

TEST_CASE("residue of a simple pole against a difference quotient") {
    // 1/Q1(u + 1/2) with roots {a, b}: residue at u = a - 1/2 is 1/(a - b).
    QExpr e = QExpr::of(mono(1, {q_factor(1, Rational(1, 2), -1)}));
    RootAssignment A;
    A.roots = {{Rational(3), Rational(-2, 3)}};
    CHECK(residue(e, A, 1, 1, Rational(1, 2)) == Rational(1) / (Rational(3) - Rational(-2, 3)));
    CHECK(residue(e, A, 1, 2, Rational(1, 2)) == Rational(1) / (Rational(-2, 3) - Rational(3)));
    // no pole at that site
    CHECK(residue(e, A, 1, 1, Rational(3, 2)) == 0);
    QExpr dbl = QExpr::of(mono(1, {q_factor(1, 0, -2)}));
    CHECK_THROWS_AS(residue(dbl, A, 1, 1, 0), NonSimplePole);
}

TEST_CASE("residue is linear") {
    std::mt19937_64 g(23);
    QExpr x = QExpr::of(mono(2, {q_factor(1, 0, -1), q_factor(2, 1, 1)}));
    QExpr y = QExpr::of(mono(-5, {q_factor(1, 0, -1), q_factor(2, -1, -1)}));
    testutil::for_points(10, 1, 3, 2, 0, [&](const oracle::Roots& r, const Rational&) {
        auto A = testutil::assign(r);
        CHECK(residue(add(x, y), A, 1, 1, 0) == residue(x, A, 1, 1, 0) + residue(y, A, 1, 1, 0));
    });
}

TEST_CASE("residue of two boxes vanishes on an exact BAE solution") {
    // Color-1 BAE at s = 3 reads Q2(x + 1/2) = Q2(x - 1/2); with two color-2
    // roots a, b it is solved by x = (a + b)/2.
    std::mt19937_64 g(29);
    for (int trial = 0; trial < 10; ++trial) {
        Rational a = oracle::rnd(g), b = oracle::rnd(g);
        if (a == b) continue;
        oracle::Roots r;
        r.s = 3;
        r.q = {{(a + b) / 2, oracle::rnd(g)}, {a, b}, {oracle::rnd(g)}};
        QExpr b1 = QExpr::of(mono(1, {q_factor(1, -Rational(1, 2), 1), q_factor(1, Rational(1, 2), -1)}));
        QExpr b2 = QExpr::of(mono(1, {q_factor(1, -Rational(1, 2), 1), q_factor(2, 1, 1),
                                      q_factor(1, Rational(1, 2), -1), q_factor(2, 0, -1)}));
        auto A = testutil::assign(r);
        try {
            CHECK(residue(subtract(b1, b2), A, 1, 1, Rational(1, 2)) == 0);
            CHECK(residue(b1, A, 1, 1, Rational(1, 2)) != 0);
        } catch (const NonSimplePole&) {
        }
    }
}

TEST_CASE("color degree of a ratio is zero") {
    QMonomial m = mono(1, {q_factor(1, 2, 1), q_factor(1, -1, -1), q_factor(2, 0, 1)});
    CHECK(color_degree(m, 1) == 0);
    CHECK(color_degree(m, 2) == 1);
}

TEST_CASE("QExpr json round trip") {
    std::mt19937_64 g(31);
    for (int i = 0; i < 10; ++i) {
        QExpr e = normalize(random_expr(g, 6));
        e.terms.push_back(mono(4, {phi_factor(Rational(-7, 3), 2)}));
        e = normalize(e);
        CHECK(qexpr_from_json(to_json(e)) == e);
    }
}
