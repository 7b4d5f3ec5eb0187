#include <doctest.h>

#include "qmacd/xpoly.hpp"

using namespace qmacd;

namespace {

XPolynomial x(int n, int i) { return XPolynomial::variable(n, i); }

} // namespace

TEST_CASE("composition orders") {
    Composition a({2, 0}), b({1, 1}), c({0, 2});
    CHECK(a.weight() == 2);
    CHECK(c.is_partition() == false);
    CHECK(b.is_partition()); // weakly decreasing
    CHECK(a.is_partition());
    CHECK(a.sorted() == a);
    CHECK(c.sorted() == a);
    CHECK(dominance_less(b, a));
    CHECK(!dominance_less(a, b));
    CHECK(prec_order(b, a));
    CHECK(prec_order(c, a));    // same partition, lex-smaller wins
    CHECK(!prec_order(a, c));
    CHECK_THROWS_AS(dominance_less(Composition({1}), a), std::invalid_argument);

    CHECK(compositions_of_weight(2, 2).size() == 3);
    CHECK(compositions_up_to_weight(2, 2).size() == 6);
    CHECK(partitions_up_to_weight(2, 2).size() == 4); // (), (1), (2), (1,1)
}

TEST_CASE("XPolynomial arithmetic") {
    int n = 2;
    XPolynomial f = x(n, 1) + x(n, 2);
    CHECK(f.total_degree() == 1);
    CHECK(f.is_homogeneous());
    XPolynomial g = f * f;
    CHECK(g.coeff({1, 1}) == QtScalar(2));
    CHECK((g - g).is_zero());
    CHECK(g.num_terms() == 3);
    CHECK(!(g + XPolynomial::constant(n, QtScalar(1))).is_homogeneous());
    CHECK(f.times_xi(2) == x(n, 1) * x(n, 2) + x(n, 2) * x(n, 2));
}

TEST_CASE("XPolynomial exact division") {
    int n = 2;
    XPolynomial f = x(n, 1) + x(n, 2);
    XPolynomial d = x(n, 1) - x(n, 2);
    CHECK(XPolynomial::exact_div(f * d, d) == f);
    CHECK_THROWS_AS(XPolynomial::exact_div(f, d), std::domain_error);
    // swap-antisymmetric difference is divisible by x_1 - x_2
    XPolynomial h = x(n, 1) * x(n, 1) * x(n, 2);
    XPolynomial diff = apply_swap(h, 1, 2) - h;
    CHECK(XPolynomial::exact_div(diff, d) * d == diff);
}

TEST_CASE("degree slices") {
    int n = 2;
    XPolynomial f = x(n, 1) * x(n, 1) + x(n, 2) + XPolynomial::constant(n, QtScalar(3));
    CHECK(f.degree_slice(2) == x(n, 1) * x(n, 1));
    CHECK(f.degree_slice(1) == x(n, 2));
    CHECK(f.degree_slice(3).is_zero());

    // doubled ring bidegree
    XPolynomial g = XPolynomial::monomial(4, {1, 0, 2, 0});
    CHECK(g.bidegree_slice(2, 1, 2) == g);
    CHECK(g.bidegree_slice(2, 2, 1).is_zero());
}

TEST_CASE("variable operators") {
    int n = 3;
    XPolynomial f = x(n, 1) * x(n, 2) * x(n, 2);
    CHECK(apply_swap(f, 1, 2) == x(n, 1) * x(n, 1) * x(n, 2));
    CHECK(apply_qshift(f, 2) == f * QtScalar(QtMonomial(2, 0)));
    CHECK(divide_by_xi(f, 1) == x(n, 2) * x(n, 2));
    CHECK_THROWS_AS(divide_by_xi(f, 3), std::domain_error);
}

TEST_CASE("principal specialization and symmetry") {
    int n = 3;
    XPolynomial e1 = x(n, 1) + x(n, 2) + x(n, 3);
    QtScalar one(1), t = QtScalar::t();
    CHECK(principal_specialize(e1) == one + t + t * t);
    CHECK(is_symmetric_in(e1, 1, 3));
    CHECK(!is_symmetric_in(e1 + x(n, 1), 1, 3));
    CHECK(is_symmetric_in(x(n, 1) + x(n, 2), 1, 2));

    XPolynomial m = monomial_symmetric(3, Composition({2, 1, 0}), 1, 3);
    CHECK(m.num_terms() == 6);
    CHECK(is_symmetric_in(m, 1, 3));
    XPolynomial m2 = monomial_symmetric(3, Composition({1, 1}), 2, 3);
    CHECK(m2 == x(n, 2) * x(n, 3));
}

TEST_CASE("bar on coefficients") {
    int n = 2;
    QtScalar q = QtScalar::q();
    XPolynomial f = x(n, 1) * q + x(n, 2);
    CHECK(bar_coeffs(f) == x(n, 1) * q.inverse() + x(n, 2));
    CHECK(bar_coeffs(bar_coeffs(f)) == f);
}
