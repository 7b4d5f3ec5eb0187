#include <doctest.h>

#include "qmacd/kernel.hpp"

using namespace qmacd;

namespace {

QtPoly one_minus(int qe, int te) {
    QtPoly p;
    p.set_term(0, 0, 1);
    p.set_term(qe, te, -1);
    return p;
}

QtScalar one_over(int qe, int te) {
    QtPoly den;
    den.set_term(0, 0, 1);
    den.set_term(qe, te, -1);
    QtPoly num;
    num.set_term(0, 0, 1);
    return QtScalar(num, den); // 1 / (1 - q^qe t^te)
}

} // namespace

TEST_CASE("kernel truncation has the expected per-eta coefficients at n=2") {
    MacdonaldTable table;
    KernelTruncation K = build_KA(2, 2, table);
    CHECK(K.n == 2);
    CHECK(K.N == 2);
    CHECK(K.value.nvars() == 4);

    // A_eta = d_eta / (d'_eta e_eta).
    // eta = (0,0): empty diagram, A = 1.
    QtPoly one;
    one.set_term(0, 0, 1);
    CHECK(K.per_eta.at({0, 0}) == QtScalar(one));
    // eta = (0,1): single cell with a=a'=l'=0, l=1, so
    // d = 1-qt^2, d' = 1-qt, e = 1-qt^2 and A = 1/(1-qt).
    CHECK(K.per_eta.at({0, 1}) == one_over(1, 1));
    // eta = (1,0): single cell with a=a'=l=l'=0, so
    // d = 1-qt, d' = 1-q, e = 1-qt^2 and A = (1-qt)/((1-q)(1-qt^2)).
    QtPoly dn = one_minus(1, 1);
    QtPoly dp = one_minus(1, 0);
    QtPoly ee = one_minus(1, 2);
    CHECK(K.per_eta.at({1, 0}) == QtScalar(dn, dp * ee));

    // constant term of K_A is 1
    XPolynomial c = K.value.bidegree_slice(2, 0, 0);
    XPolynomial expect(4);
    expect.add_term({0, 0, 0, 0}, QtScalar(one));
    CHECK(c == expect);
}

TEST_CASE("barred y-block conjugation is an involutive wrapper") {
    MacdonaldTable table;
    KernelTruncation K = build_KA(2, 2, table);
    // conjugating the identity map by the bar involution gives the identity
    XPolynomial f = K.value;
    auto id_op = [](const XPolynomial& g, const VarBlock&) { return g; };
    CHECK(conjugate_bar_y(K, f, id_op) == f);
}

TEST_CASE("theorem 5.2 checks pass at n=2, N=2") {
    MacdonaldTable table;
    KernelTruncation K = build_KA(2, 2, table);
    Report rep = check_theorem52(K);
    for (const auto& r : rep.results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("U+ kernel identity passes at n=2, N=2") {
    MacdonaldTable table;
    Report rep = check_prop54(2, 2, table);
    for (const auto& r : rep.results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("0F0 truncation is symmetric under x <-> y swap") {
    MacdonaldTable table;
    KernelTruncation F = build_0F0(2, 3, table);
    // swap the x-block and y-block variables; 0F0(x;y) = 0F0(y;x)
    XPolynomial swapped(4);
    for (const auto& [e, c] : F.value.terms())
        swapped.add_term({e[2], e[3], e[0], e[1]}, c);
    CHECK(swapped == F.value);
}
