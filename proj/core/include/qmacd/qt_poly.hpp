#pragma once

/**
 * @file qt_poly.hpp
 * @brief Integer polynomials in the two indeterminates q and t.
 *
 * QtPoly is the workhorse behind the coefficient field Q(q,t): a sparse
 * map from (q-exponent, t-exponent) to an arbitrary-precision integer.
 * Exponents are non-negative; Laurent behaviour lives in QtScalar.
 * Terms are ordered by graded-lex with q > t, so rbegin() is the
 * leading term.
 */

#include <map>
#include <string>
#include <utility>

#include "qmacd/bigint.hpp"

namespace qmacd {

// graded-lex on (q-exp, t-exp) with q > t, ascending
struct QtExpLess {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
        int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da < db;
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

class QtPoly {
public:
    using TermMap = std::map<std::pair<int, int>, BigInt, QtExpLess>;

    QtPoly() = default;
    explicit QtPoly(const BigInt& c);
    QtPoly(const BigInt& c, int qexp, int texp);

    static QtPoly zero() { return QtPoly(); }
    static QtPoly one() { return QtPoly(BigInt(1)); }
    static QtPoly q() { return QtPoly(BigInt(1), 1, 0); }
    static QtPoly t() { return QtPoly(BigInt(1), 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;

    const TermMap& terms() const { return terms_; }
    void set_term(int qexp, int texp, const BigInt& c);

    int deg_q() const;
    int deg_t() const;

    // leading coefficient under graded-lex q > t
    const BigInt& leading_coeff() const;
    /// coefficient of the graded-lex smallest term
    const BigInt& trailing_coeff() const;

    QtPoly operator-() const;
    QtPoly operator+(const QtPoly& o) const;
    QtPoly operator-(const QtPoly& o) const;
    QtPoly operator*(const QtPoly& o) const;

    bool operator==(const QtPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QtPoly& o) const { return !(*this == o); }
    bool operator<(const QtPoly& o) const { return terms_ < o.terms_; }

    // integer content (gcd of coefficients, non-negative)
    BigInt content() const;

    Rational eval(const Rational& q0, const Rational& t0) const;

    // exact division; throws std::domain_error if the division is not exact
    static QtPoly exact_div(const QtPoly& a, const QtPoly& b);

    static QtPoly gcd(const QtPoly& a, const QtPoly& b);

private:
    TermMap terms_;
};

} // namespace qmacd
