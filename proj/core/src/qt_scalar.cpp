#include "qmacd/qt_scalar.hpp"

#include <sstream>

namespace qmacd {

QtScalar::QtScalar(const QtPoly& num, const QtPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("QtScalar: zero denominator");
    canonicalize();
}

QtScalar QtScalar::from_coprime(const QtPoly& num, const QtPoly& den) {
    if (den.is_zero()) throw std::domain_error("QtScalar: zero denominator");
    QtScalar r;
    if (num.is_zero()) return r;
    r.num_ = num;
    r.den_ = den;
    BigInt c = boost::multiprecision::gcd(num.content(), den.content());
    if (c > 1) {
        QtPoly cp(c);
        r.num_ = QtPoly::exact_div(r.num_, cp);
        r.den_ = QtPoly::exact_div(r.den_, cp);
    }
    if (r.den_.trailing_coeff() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QtScalar::QtScalar(const QtMonomial& m) {
    num_ = QtPoly(BigInt(1), m.qexp > 0 ? m.qexp : 0, m.texp > 0 ? m.texp : 0);
    den_ = QtPoly(BigInt(1), m.qexp < 0 ? -m.qexp : 0, m.texp < 0 ? -m.texp : 0);
}

void QtScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = QtPoly::one();
        return;
    }
    if (!den_.is_one()) {
        QtPoly g = QtPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = QtPoly::exact_div(num_, g);
            den_ = QtPoly::exact_div(den_, g);
        }
    }
    if (den_.trailing_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QtScalar QtScalar::operator-() const {
    QtScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QtScalar QtScalar::operator+(const QtScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    QtScalar r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
    } else {
        QtPoly g = QtPoly::gcd(den_, o.den_);
        QtPoly d1 = QtPoly::exact_div(den_, g);
        QtPoly d2 = QtPoly::exact_div(o.den_, g);
        r.num_ = num_ * d2 + o.num_ * d1;
        r.den_ = den_ * d2;
    }
    r.canonicalize();
    return r;
}

QtScalar QtScalar::operator-(const QtScalar& o) const { return *this + (-o); }

QtScalar QtScalar::operator*(const QtScalar& o) const {
    if (is_zero() || o.is_zero()) return QtScalar();
    // cross-cancel before multiplying; inputs are reduced so the result is too
    QtPoly g1 = QtPoly::gcd(num_, o.den_);
    QtPoly g2 = QtPoly::gcd(o.num_, den_);
    QtScalar r;
    r.num_ = QtPoly::exact_div(num_, g1) * QtPoly::exact_div(o.num_, g2);
    r.den_ = QtPoly::exact_div(den_, g2) * QtPoly::exact_div(o.den_, g1);
    if (r.den_.trailing_coeff() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QtScalar QtScalar::inverse() const {
    if (is_zero()) throw std::domain_error("QtScalar: division by zero");
    QtScalar r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.trailing_coeff() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QtScalar QtScalar::operator/(const QtScalar& o) const { return *this * o.inverse(); }

QtScalar QtScalar::bar() const {
    // multiply numerator and denominator by q^A t^B to clear negative powers
    int A = std::max(num_.deg_q(), den_.deg_q());
    int B = std::max(num_.deg_t(), den_.deg_t());
    auto flip = [&](const QtPoly& p) {
        QtPoly r;
        for (const auto& [e, c] : p.terms()) r.set_term(A - e.first, B - e.second, c);
        return r;
    };
    return QtScalar(flip(num_), flip(den_));
}

Rational QtScalar::eval(const Rational& q0, const Rational& t0) const {
    Rational d = den_.eval(q0, t0);
    if (d == 0) {
        std::ostringstream os;
        os << "QtScalar: denominator vanishes at (q,t)=(" << q0 << "," << t0 << ")";
        throw std::domain_error(os.str());
    }
    return num_.eval(q0, t0) / d;
}

} // namespace qmacd
