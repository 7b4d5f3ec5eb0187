#pragma once

/**
 * @file qt_scalar.hpp
 * @brief The coefficient field Q(q,t): reduced fractions of QtPoly,
 *        plus Laurent monomials q^a t^b.
 *
 * Canonical form: gcd(num, den) = 1, and the denominator's trailing
 * coefficient under graded-lex (q > t) is positive (so 1 - qt, not
 * -1 + qt). Zero is 0/1.
 * Equality is structural comparison of canonical forms.
 */

#include <stdexcept>

#include "qmacd/qt_poly.hpp"

namespace qmacd {

/// Exactly q^a t^b with integer (possibly negative) exponents.
struct QtMonomial {
    int qexp = 0;
    int texp = 0;

    QtMonomial() = default;
    QtMonomial(int qe, int te) : qexp(qe), texp(te) {}

    QtMonomial operator*(const QtMonomial& o) const { return {qexp + o.qexp, texp + o.texp}; }
    QtMonomial operator/(const QtMonomial& o) const { return {qexp - o.qexp, texp - o.texp}; }
    bool operator==(const QtMonomial& o) const = default;
};

class QtScalar {
public:
    QtScalar() : num_(), den_(QtPoly::one()) {}
    QtScalar(long v) : num_(BigInt(v)), den_(QtPoly::one()) {}
    QtScalar(const BigInt& v) : num_(v), den_(QtPoly::one()) {}
    explicit QtScalar(const QtPoly& p) : num_(p), den_(QtPoly::one()) {}
    QtScalar(const QtPoly& num, const QtPoly& den);
    QtScalar(const QtMonomial& m); // NOLINT: intentional implicit lift

    static QtScalar q() { return QtScalar(QtPoly::q()); }
    static QtScalar t() { return QtScalar(QtPoly::t()); }

    /// build from a pair already coprime in Z[q,t] up to integer content:
    /// strips the shared integer content and fixes the sign convention
    /// without running a polynomial gcd
    static QtScalar from_coprime(const QtPoly& num, const QtPoly& den);

    const QtPoly& num() const { return num_; }
    const QtPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    QtScalar operator-() const;
    QtScalar operator+(const QtScalar& o) const;
    QtScalar operator-(const QtScalar& o) const;
    QtScalar operator*(const QtScalar& o) const;
    QtScalar operator/(const QtScalar& o) const;
    QtScalar& operator+=(const QtScalar& o) { return *this = *this + o; }
    QtScalar& operator-=(const QtScalar& o) { return *this = *this - o; }
    QtScalar& operator*=(const QtScalar& o) { return *this = *this * o; }

    QtScalar inverse() const;

    bool operator==(const QtScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QtScalar& o) const { return !(*this == o); }

    /// bar involution: q -> 1/q, t -> 1/t, cleared back to polynomials
    QtScalar bar() const;

    /// exact evaluation at a rational point; throws on vanishing denominator
    Rational eval(const Rational& q0, const Rational& t0) const;

private:
    void canonicalize();

    QtPoly num_;
    QtPoly den_;
};

inline QtScalar operator*(const BigInt& c, const QtScalar& s) { return QtScalar(c) * s; }

} // namespace qmacd
