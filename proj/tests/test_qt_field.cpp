#include <doctest.h>

#include "qmacd/qt_scalar.hpp"

using namespace qmacd;

namespace {

QtPoly one_minus(int qe, int te) {
    QtPoly p = QtPoly::one();
    p.set_term(qe, te, BigInt(-1));
    return p;
}

} // namespace

TEST_CASE("QtPoly arithmetic basics") {
    QtPoly q = QtPoly::q(), t = QtPoly::t();
    CHECK(q * t == QtPoly(BigInt(1), 1, 1));
    CHECK((q + t) - t == q);
    CHECK((q - q).is_zero());
    CHECK(QtPoly::one().is_one());
    CHECK((q * q + q) * t == q * q * t + q * t);

    QtPoly p = one_minus(1, 1); // 1 - qt
    CHECK(p.deg_q() == 1);
    CHECK(p.deg_t() == 1);
    CHECK(p.leading_coeff() == BigInt(-1));
    CHECK((p * QtPoly(BigInt(6))).content() == BigInt(6));
}

TEST_CASE("QtPoly exact division and gcd") {
    QtPoly a = one_minus(1, 1); // 1 - qt
    QtPoly b = one_minus(0, 1); // 1 - t
    CHECK(QtPoly::exact_div(a * b, b) == a);
    CHECK_THROWS_AS(QtPoly::exact_div(a, b), std::domain_error);

    QtPoly g = QtPoly::gcd(a * b, a * QtPoly::t());
    CHECK((g == a || g == -a));

    // 1 - t^2 = (1-t)(1+t)
    QtPoly c = one_minus(0, 2);
    QtPoly gg = QtPoly::gcd(c, b);
    CHECK((gg == b || gg == -b));

    QtPoly z = QtPoly::gcd(QtPoly::zero(), b);
    CHECK((z == b || z == -b)); // sign-normalized representative
}

TEST_CASE("QtPoly evaluation") {
    QtPoly p = one_minus(1, 1);
    CHECK(p.eval(Rational(1, 2), Rational(1, 3)) == Rational(5, 6));
}

TEST_CASE("QtScalar canonical form") {
    QtScalar t = QtScalar::t(), q = QtScalar::q(), one(1);
    // (1-qt)(1-t)/(1-t) reduces
    QtScalar a((one_minus(1, 1)) * one_minus(0, 1), one_minus(0, 1));
    CHECK(a == QtScalar(one_minus(1, 1)));

    // sign normalization: denominator leading coefficient positive
    QtScalar b(QtPoly::one(), -one_minus(0, 1) * QtPoly(BigInt(-1)) * QtPoly(BigInt(1)));
    QtScalar c(QtPoly::one(), one_minus(0, 1));
    CHECK(QtScalar(QtPoly::one(), QtPoly(BigInt(-1))) == QtScalar(-1));
    CHECK(b == c);

    CHECK((t - t).is_zero());
    CHECK((t / t).is_one());
    CHECK(q * q.inverse() == one);
    CHECK((one / (one - t)) + (one / (QtScalar(one_minus(0, 1)) * QtScalar(-1))) ==
          QtScalar(0));
}

TEST_CASE("QtScalar arithmetic identities") {
    QtScalar q = QtScalar::q(), t = QtScalar::t(), one(1);
    QtScalar r = (one - q * t) / (one - t);
    CHECK(r * (one - t) == one - q * t);
    CHECK(r - r == QtScalar(0));
    CHECK(-r + r == QtScalar(0));
    CHECK(r / r == one);
    CHECK(r.eval(Rational(2), Rational(3)) == Rational(5, 2));
    CHECK_THROWS(r.eval(Rational(2), Rational(1)));
}

TEST_CASE("QtMonomial Laurent arithmetic") {
    QtMonomial m(2, -1), k(-1, 3);
    CHECK(m * k == QtMonomial(1, 2));
    CHECK(m / k == QtMonomial(3, -4));
    QtScalar s(m);
    CHECK(s * QtScalar(QtMonomial(-2, 1)) == QtScalar(1));
}

TEST_CASE("bar involution on scalars") {
    QtScalar q = QtScalar::q(), t = QtScalar::t(), one(1);
    CHECK(q.bar() == q.inverse());
    CHECK(t.bar() == t.inverse());
    CHECK(one.bar() == one);
    QtScalar r = (one - q * t) / (one - t);
    CHECK(r.bar() == (one - (q * t).inverse()) / (one - t.inverse()));
    CHECK(r.bar().bar() == r);
}
