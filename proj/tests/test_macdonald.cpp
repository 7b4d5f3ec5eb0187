#include <doctest.h>

#include "qmacd/macdonald.hpp"

using namespace qmacd;

namespace {

const QtScalar kOne(1);
const QtScalar kQ = QtScalar::q();
const QtScalar kT = QtScalar::t();

XPolynomial x(int n, int i) { return XPolynomial::variable(n, i); }

} // namespace

TEST_CASE("composition statistics for eta=(1,0), n=2") {
    auto st = composition_stats(Composition({1, 0}), 2);
    CHECK(st.d == kOne - kQ * kT);
    CHECK(st.dprime == kOne - kQ);
    CHECK(st.e == kOne - kQ * kT * kT);
    CHECK(st.etabar[0] == QtMonomial(1, 0));  // eigenvalue q
    CHECK(st.etabar[1] == QtMonomial(0, -1)); // eigenvalue t^{-1}
    CHECK(st.arm[0] == std::vector<int>{0});
    CHECK(st.leg[0] == std::vector<int>{0});
}

TEST_CASE("zero composition statistics are trivial") {
    auto st = composition_stats(Composition({0, 0, 0}), 3);
    CHECK(st.d == kOne);
    CHECK(st.dprime == kOne);
    CHECK(st.e == kOne);
    CHECK(st.etabar[0] == QtMonomial(0, 0));
    CHECK(st.etabar[2] == QtMonomial(0, -2));
}

TEST_CASE("Macdonald polynomial worked values, n=2") {
    MacdonaldTable table;
    int n = 2;
    CHECK(table.nonsym_macdonald(Composition({0, 0})) ==
          XPolynomial::constant(n, kOne));
    CHECK(table.nonsym_macdonald(Composition({0, 1})) == x(n, 2));
    // E_(1,0) = x_1 + q(1-t)/(1-qt) x_2
    XPolynomial expected = x(n, 1) + x(n, 2) * (kQ * (kOne - kT) / (kOne - kQ * kT));
    CHECK(table.nonsym_macdonald(Composition({1, 0})) == expected);
}

TEST_CASE("recursion equals oracle at small weight") {
    for (int n = 2; n <= 3; ++n) {
        MacdonaldTable table;
        for (const auto& eta : compositions_up_to_weight(n, 3))
            CHECK(table.nonsym_macdonald(eta) == table.nonsym_macdonald_oracle(eta));
    }
}

TEST_CASE("eigenvalue property") {
    MacdonaldTable table;
    Composition eta({1, 0});
    XPolynomial E = table.nonsym_macdonald(eta);
    auto st = composition_stats(eta, 2);
    CHECK(apply_Yi(E, 1) == E * QtScalar(st.etabar[0]));
    CHECK(apply_Yi(E, 2) == E * QtScalar(st.etabar[1]));
}

TEST_CASE("symmetric Macdonald polynomial, monic in m_kappa") {
    MacdonaldTable table;
    Composition kappa({1, 0});
    XPolynomial P = table.symmetric_macdonald(kappa);
    CHECK(P == x(2, 1) + x(2, 2));
    CHECK_THROWS_AS(table.symmetric_macdonald(Composition({0, 1})), std::invalid_argument);
}

TEST_CASE("U+ proportionality constant") {
    MacdonaldTable table;
    Composition eta({1, 0});
    XPolynomial lhs = apply_Uplus(table.nonsym_macdonald(eta));
    CHECK(lhs == table.symmetric_macdonald(Composition({1, 0})) * table.a_eta(eta));
}

TEST_CASE("T_i action coefficients match the operator") {
    MacdonaldTable table;
    int n = 3;
    for (const auto& eta : compositions_up_to_weight(n, 3)) {
        XPolynomial E = table.nonsym_macdonald(eta);
        for (int i = 1; i <= n - 1; ++i) {
            std::vector<int> se = eta.entries();
            std::swap(se[static_cast<size_t>(i - 1)], se[static_cast<size_t>(i)]);
            auto [c1, c2] = ti_on_E(eta, i);
            XPolynomial rhs = E * c1;
            if (!c2.is_zero()) rhs += table.nonsym_macdonald(Composition(se)) * c2;
            CHECK(apply_Ti(E, i) == rhs);
        }
    }
}

TEST_CASE("t-factorial") {
    // [2]_t! = 1 + t (up to the (1-t) normalization): (1-t)(1-t^2)/(1-t)^2
    CHECK(t_factorial(1) == kOne);
    CHECK(t_factorial(2) == kOne + kT);
    CHECK(t_factorial(3) == (kOne + kT) * (kOne + kT + kT * kT));
}
