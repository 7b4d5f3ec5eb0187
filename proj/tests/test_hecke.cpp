#include <doctest.h>

#include "qmacd/hecke.hpp"

using namespace qmacd;

namespace {

XPolynomial x(int n, int i) { return XPolynomial::variable(n, i); }
const QtScalar kT = QtScalar::t();
const QtScalar kQ = QtScalar::q();

} // namespace

TEST_CASE("T_i on low-degree monomials, n=2") {
    int n = 2;
    XPolynomial one = XPolynomial::constant(n, QtScalar(1));
    CHECK(apply_Ti(one, 1) == one * kT);
    CHECK(apply_Ti(x(n, 1), 1) == x(n, 2));
    CHECK(apply_Ti(x(n, 2), 1) == x(n, 1) * kT + x(n, 2) * (kT - QtScalar(1)));
    CHECK(apply_Ti(x(n, 1) * x(n, 2), 1) == x(n, 1) * x(n, 2) * kT);
    // degree gap 2: one interior term
    CHECK(apply_Ti(x(n, 1) * x(n, 1), 1) ==
          x(n, 1) * x(n, 2) * (QtScalar(1) - kT) + x(n, 2) * x(n, 2));
}

TEST_CASE("T_i^{-1} worked values, n=2") {
    int n = 2;
    CHECK(apply_Ti_inv(x(n, 2), 1) == x(n, 1));
    CHECK(apply_Ti_inv(x(n, 1), 1) ==
          x(n, 2) * QtScalar(QtMonomial(0, -1)) +
          x(n, 1) * (QtScalar(QtMonomial(0, -1)) - QtScalar(1)));
}

TEST_CASE("T_i matches the rational route on a dense polynomial") {
    int n = 3;
    XPolynomial f = (x(n, 1) + x(n, 2) * kQ) * (x(n, 2) + x(n, 3)) +
                    XPolynomial::constant(n, kT);
    for (int i = 1; i <= 2; ++i)
        CHECK(apply_Ti(f, i) == apply_Ti_rational(f, i, VarBlock::whole(f)));
}

TEST_CASE("omega rotation with q-shift") {
    int n = 3;
    // omega x^(2,0,1) = q^2 x^(0,1,2)
    XPolynomial f = XPolynomial::monomial(n, {2, 0, 1});
    CHECK(apply_omega(f) == XPolynomial::monomial(n, {0, 1, 2}, QtScalar(QtMonomial(2, 0))));
    CHECK(apply_omega_inv(apply_omega(f)) == f);
    CHECK(apply_omega(x(n, 1)) == x(n, 3) * kQ);
    CHECK(apply_omega(x(n, 2)) == x(n, 1));
}

TEST_CASE("Y operators, n=2") {
    int n = 2;
    XPolynomial one = XPolynomial::constant(n, QtScalar(1));
    CHECK(apply_Yi(one, 1) == one);
    CHECK(apply_Yi(one, 2) == one * QtScalar(QtMonomial(0, -1)));
    CHECK(apply_Yi(x(n, 2), 2) == x(n, 2) * kQ); // E_(0,1) = x_2 eigenvalue q
}

TEST_CASE("T_0 agrees between conjugation and direct rule") {
    for (int n = 2; n <= 3; ++n) {
        for (const auto& eta : compositions_up_to_weight(n, 3)) {
            XPolynomial f = XPolynomial::monomial(eta);
            VarBlock blk{0, n};
            CHECK(apply_T0(f, blk) == apply_T0_direct(f, blk));
            CHECK(apply_T0(apply_T0_inv(f, blk), blk) == f);
        }
    }
}

TEST_CASE("reduced words") {
    CHECK(reduced_word({1, 2, 3}).letters.empty());
    CHECK(reduced_word({2, 1}).letters == std::vector<int>{1});
    auto w = reduced_word({3, 2, 1});
    CHECK(w.letters.size() == 3); // longest element of S_3
    // T_w for the longest element via both canonical factorizations
    XPolynomial f = x(3, 1) * x(3, 2) * x(3, 2);
    VarBlock blk{0, 3};
    ReducedWord other{{2, 1, 2}};
    CHECK(apply_Tw(f, w, blk) == apply_Tw(f, other, blk));
}

TEST_CASE("U+ output is symmetric") {
    int n = 3;
    XPolynomial f = x(n, 1) * x(n, 1) * x(n, 3);
    XPolynomial s = apply_Uplus(f);
    CHECK(is_symmetric_in(s, 1, 3));
    // T_i U+ = t U+
    for (int i = 1; i <= 2; ++i) CHECK(apply_Ti(s, i) == s * kT);
}

TEST_CASE("operators act on the designated block only") {
    // doubled ring: y-block is variables 3,4
    XPolynomial f = XPolynomial::monomial(4, {1, 0, 1, 0});
    VarBlock yb{2, 2};
    XPolynomial g = apply_Ti(f, 1, yb);
    // x-part untouched, y-part transforms like x^(1,0) -> x^(0,1)
    CHECK(g == XPolynomial::monomial(4, {1, 0, 0, 1}));
    CHECK(apply_omega(f, yb) ==
          XPolynomial::monomial(4, {1, 0, 0, 1}, QtScalar(QtMonomial(1, 0))));
}
