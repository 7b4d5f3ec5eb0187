#include <doctest.h>

#include <nlohmann/json.hpp>

#include "qmacd/format.hpp"
#include "qmacd/macdonald.hpp"

using namespace qmacd;

namespace {

QtPoly one_minus(int qe, int te) {
    QtPoly p;
    p.set_term(0, 0, 1);
    p.set_term(qe, te, -1);
    return p;
}

} // namespace

TEST_CASE("integer polynomial display") {
    CHECK(to_string(QtPoly{}) == "0");
    QtPoly one;
    one.set_term(0, 0, 1);
    CHECK(to_string(one) == "1");
    CHECK(to_string(one_minus(1, 1)) == "1-qt");
    QtPoly p;
    p.set_term(2, 0, -3);
    p.set_term(0, 3, 1);
    CHECK(to_string(p) == "-3q^2+t^3");
}

TEST_CASE("scalar display") {
    QtScalar s(one_minus(1, 0), one_minus(1, 1));
    CHECK(to_string(s) == "(1-q)/(1-qt)");
    QtScalar neg = QtScalar(one_minus(1, 0)) * QtScalar(-1L);
    CHECK(to_string(neg) == "-1+q");
}

TEST_CASE("monomial display") {
    CHECK(to_string(QtMonomial{0, 0}) == "1");
    CHECK(to_string(QtMonomial{1, -2}) == "qt^-2");
}

TEST_CASE("x-polynomial display") {
    XPolynomial f(2);
    CHECK(to_string(f) == "0");
    f.add_term({1, 0}, QtScalar(1L));
    f.add_term({0, 1}, QtScalar(QtPoly(BigInt(1), 1, 0) * one_minus(0, 1), one_minus(1, 1)));
    std::string s = to_string(f);
    CHECK(s.find("x1") != std::string::npos);
    CHECK(s.find("x2") != std::string::npos);
    CHECK(s.find("(1-qt)") != std::string::npos);
}

TEST_CASE("latex display of a Macdonald polynomial") {
    MacdonaldTable table;
    XPolynomial E = table.nonsym_macdonald(Composition({1, 0}));
    std::string s = to_latex(E);
    CHECK(s.find("x_{1}") != std::string::npos);
    CHECK(s.find("\\frac{") != std::string::npos);
    CHECK(s.find("1-qt") != std::string::npos);
}

TEST_CASE("scalar JSON round trip") {
    QtScalar s(one_minus(2, 1), one_minus(1, 3));
    nlohmann::json j = scalar_to_json(s);
    CHECK(scalar_from_json(j) == s);
}

TEST_CASE("x-polynomial JSON round trip") {
    MacdonaldTable table;
    XPolynomial E = table.nonsym_macdonald(Composition({2, 0, 1}));
    nlohmann::json j = xpoly_to_json(E);
    CHECK(j.at("n").get<int>() == 3);
    CHECK(xpoly_from_json(j) == E);
}

TEST_CASE("composition statistics JSON contents") {
    CompositionStats st = composition_stats(Composition({1, 0}), 2);
    nlohmann::json j = stats_to_json(st);
    CHECK(j.at("eta") == nlohmann::json({1, 0}));
    CHECK(j.at("n").get<int>() == 2);
    CHECK(j.at("d").get<std::string>() == "1-qt");
    CHECK(j.at("dprime").get<std::string>() == "1-q");
    CHECK(j.at("e").get<std::string>() == "1-qt^2");
}
