#include <doctest.h>

#include "qmacd/dunkl.hpp"
#include "qmacd/macdonald.hpp"

using namespace qmacd;

namespace {

const QtScalar kOne(1);
const QtScalar kQ = QtScalar::q();
const QtScalar kT = QtScalar::t();

XPolynomial x(int n, int i) { return XPolynomial::variable(n, i); }

} // namespace

TEST_CASE("q-Dunkl worked values, n=2") {
    int n = 2;
    XPolynomial one = XPolynomial::constant(n, kOne);
    CHECK(apply_Di(one, 1).is_zero());
    CHECK(apply_Di(one, 2).is_zero());
    // D_2 x_2 = 1 - qt, D_2 x_1 = -q(1-t)
    CHECK(apply_Di(x(n, 2), 2) == one * (kOne - kQ * kT));
    CHECK(apply_Di(x(n, 1), 2) == one * (-kQ * (kOne - kT)));
}

TEST_CASE("q-Dunkl lowers degree by one") {
    int n = 3;
    XPolynomial f = XPolynomial::monomial(n, {2, 1, 0});
    for (int i = 1; i <= n; ++i) {
        XPolynomial g = apply_Di(f, i);
        if (!g.is_zero()) {
            CHECK(g.is_homogeneous());
            CHECK(g.total_degree() == 2);
        }
    }
}

TEST_CASE("alternative D_i routes agree") {
    int n = 3;
    VarBlock blk{0, n};
    for (const auto& eta : compositions_up_to_weight(n, 3)) {
        XPolynomial f = XPolynomial::monomial(eta);
        for (int i = 1; i <= n; ++i) {
            XPolynomial a = apply_Di(f, i, blk);
            CHECK(a == apply_Di_alt(f, i, blk));
            CHECK(a == apply_Di_alt2(f, i, blk));
            CHECK(a == apply_Di_conj(f, i, blk));
        }
    }
}

TEST_CASE("raising operator on the constant, n=2") {
    int n = 2;
    MacdonaldTable table;
    XPolynomial one = XPolynomial::constant(n, kOne);
    VarBlock blk{0, n};
    // Phi E_(0,0) = t^{-1} E_(0,1)
    CHECK(apply_phi(one, blk) ==
          table.nonsym_macdonald(Composition({0, 1})) * QtScalar(QtMonomial(0, -1)));
}

TEST_CASE("lowering operator worked value, n=2") {
    int n = 2;
    MacdonaldTable table;
    VarBlock blk{0, n};
    // PhiHat E_(0,1) = t(1-qt) E_(0,0)
    CHECK(apply_phihat(table.nonsym_macdonald(Composition({0, 1})), blk) ==
          XPolynomial::constant(n, kT * (kOne - kQ * kT)));
}

TEST_CASE("phi and phihat factorizations") {
    int n = 3;
    VarBlock blk{0, n};
    XPolynomial f = XPolynomial::monomial(n, {1, 0, 2});
    for (int i = 1; i <= n; ++i) {
        CHECK(apply_phi(f, blk) == apply_phi_form(f, i, blk));
        CHECK(apply_phihat(f, blk) == apply_phihat_form(f, i, blk));
    }
}

TEST_CASE("E_{0,m} requires partial symmetry") {
    int n = 3;
    CHECK_THROWS_AS(apply_E0m(x(n, 2), 2), std::invalid_argument);
    CHECK_NOTHROW(apply_E0m(x(n, 2) + x(n, 3), 2));
    CHECK_NOTHROW(apply_E0m(x(n, 1), 2)); // symmetric in x_2, x_3
}

TEST_CASE("E_{0,m} matches the Dunkl sum on symmetric input") {
    int n = 3;
    VarBlock blk{0, n};
    for (const auto& lambda : partitions_up_to_weight(n, 3)) {
        XPolynomial f = monomial_symmetric(n, lambda, 1, n);
        for (int m = 1; m <= n; ++m) {
            XPolynomial lhs(n);
            for (int i = m; i <= n; ++i) lhs += apply_Di(f, i, blk);
            CHECK(lhs == apply_E0m(f, m));
        }
    }
}
