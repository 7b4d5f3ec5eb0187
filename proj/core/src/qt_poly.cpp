#include "qmacd/qt_poly.hpp"

#include <stdexcept>
#include <vector>

namespace qmacd {

QtPoly::QtPoly(const BigInt& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

QtPoly::QtPoly(const BigInt& c, int qexp, int texp) {
    if (qexp < 0 || texp < 0) throw std::domain_error("QtPoly: negative exponent");
    if (c != 0) terms_[{qexp, texp}] = c;
}

bool QtPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == std::pair<int, int>{0, 0} &&
           terms_.begin()->second == 1;
}

bool QtPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == std::pair<int, int>{0, 0});
}

void QtPoly::set_term(int qexp, int texp, const BigInt& c) {
    if (qexp < 0 || texp < 0) throw std::domain_error("QtPoly: negative exponent");
    if (c == 0)
        terms_.erase({qexp, texp});
    else
        terms_[{qexp, texp}] = c;
}

int QtPoly::deg_q() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int QtPoly::deg_t() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

const BigInt& QtPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("QtPoly: leading_coeff of zero");
    return terms_.rbegin()->second;
}

const BigInt& QtPoly::trailing_coeff() const {
    if (terms_.empty()) throw std::domain_error("QtPoly: trailing_coeff of zero");
    return terms_.begin()->second;
}

QtPoly QtPoly::operator-() const {
    QtPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

QtPoly QtPoly::operator+(const QtPoly& o) const {
    QtPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

QtPoly QtPoly::operator-(const QtPoly& o) const { return *this + (-o); }

QtPoly QtPoly::operator*(const QtPoly& o) const {
    QtPoly r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            std::pair<int, int> e{e1.first + e2.first, e1.second + e2.second};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = c1 * c2;
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

BigInt QtPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        g = big_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Rational QtPoly::eval(const Rational& q0, const Rational& t0) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int k = 0; k < e.first; ++k) term *= q0;
        for (int k = 0; k < e.second; ++k) term *= t0;
        acc += term;
    }
    return acc;
}

QtPoly QtPoly::exact_div(const QtPoly& a, const QtPoly& b) {
    if (b.is_zero()) throw std::domain_error("QtPoly: division by zero polynomial");
    QtPoly rem = a;
    QtPoly quot;
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        const auto& [be, bc] = *b.terms_.rbegin();
        int dq = re.first - be.first, dt = re.second - be.second;
        if (dq < 0 || dt < 0 || rc % bc != 0)
            throw std::domain_error("QtPoly: inexact division");
        BigInt qc = rc / bc;
        quot.terms_[{dq, dt}] = qc;
        rem = rem - b * QtPoly(qc, dq, dt);
    }
    return quot;
}

namespace {

// dense univariate polynomials over BigInt (Z[t]) and (Z[t])[q],
// used only inside the gcd routine
using UPoly = std::vector<BigInt>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool uis_zero(const UPoly& p) { return p.empty(); }
int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

UPoly uscale(const UPoly& a, const BigInt& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), BigInt(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    utrim(r);
    return r;
}

BigInt ucontent(const UPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) {
        g = big_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

UPoly uexact_div_scalar(const UPoly& p, const BigInt& c) {
    UPoly r = p;
    for (auto& x : r) x /= c;
    return r;
}

UPoly uprimitive(const UPoly& p) {
    if (uis_zero(p)) return p;
    BigInt g = ucontent(p);
    if (p.back() < 0) g = -g;
    return uexact_div_scalar(p, g);
}

// pseudo-remainder of a by b (deg a >= deg b, b nonzero)
UPoly uprem(UPoly a, const UPoly& b) {
    int db = udeg(b);
    const BigInt& lb = b.back();
    while (!uis_zero(a) && udeg(a) >= db) {
        int shift = udeg(a) - db;
        BigInt la = a.back();
        a = uscale(a, lb);
        UPoly s(static_cast<size_t>(shift), BigInt(0));
        s.insert(s.end(), b.begin(), b.end());
        a = usub(a, uscale(s, la));
    }
    return a;
}

// gcd in Z[t] via primitive PRS
UPoly ugcd(UPoly a, UPoly b) {
    // gcd(0, p) = p up to sign; keep the integer content
    if (uis_zero(a)) return !uis_zero(b) && b.back() < 0 ? uscale(b, BigInt(-1)) : b;
    if (uis_zero(b)) return a.back() < 0 ? uscale(a, BigInt(-1)) : a;
    BigInt ca = ucontent(a), cb = ucontent(b);
    BigInt cg = big_gcd(ca, cb);
    a = uprimitive(a);
    b = uprimitive(b);
    if (udeg(a) < udeg(b)) std::swap(a, b);
    while (true) {
        UPoly r = uprem(a, b);
        if (uis_zero(r)) break;
        if (udeg(r) == 0) {
            b = {BigInt(1)};
            break;
        }
        a = std::move(b);
        b = uprimitive(r);
    }
    UPoly g = uscale(uprimitive(b), cg);
    return g;
}

// (Z[t])[q] layer
using BPoly = std::vector<UPoly>; // coefficient of q^k is a Z[t] poly

void btrim(BPoly& p) {
    while (!p.empty() && uis_zero(p.back())) p.pop_back();
}
bool bis_zero(const BPoly& p) { return p.empty(); }
int bdeg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

BPoly bmul_u(const BPoly& a, const UPoly& c) {
    BPoly r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(umul(x, c));
    btrim(r);
    return r;
}

BPoly bsub(const BPoly& a, const BPoly& b) {
    BPoly r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = usub(r[i], b[i]);
    btrim(r);
    return r;
}

UPoly bcontent(const BPoly& p) {
    UPoly g;
    for (const auto& c : p) g = ugcd(g, c);
    return g;
}

BPoly bexact_div_u(const BPoly& p, const UPoly& d) {
    // each coefficient is exactly divisible by d in Z[t]; do dense division
    BPoly r;
    r.reserve(p.size());
    for (const auto& c : p) {
        UPoly rem = c, quot;
        if (!uis_zero(c)) quot.resize(c.size() - d.size() + 1, BigInt(0));
        while (!uis_zero(rem)) {
            int shift = udeg(rem) - udeg(d);
            BigInt qc = rem.back() / d.back();
            quot[static_cast<size_t>(shift)] = qc;
            UPoly s(static_cast<size_t>(shift), BigInt(0));
            s.insert(s.end(), d.begin(), d.end());
            rem = usub(rem, uscale(s, qc));
        }
        r.push_back(std::move(quot));
    }
    btrim(r);
    return r;
}

BPoly bprimitive(const BPoly& p) {
    if (bis_zero(p)) return p;
    UPoly c = bcontent(p);
    return bexact_div_u(p, c);
}

// pseudo-remainder in q
BPoly bprem(BPoly a, const BPoly& b) {
    int db = bdeg(b);
    const UPoly& lb = b.back();
    while (!bis_zero(a) && bdeg(a) >= db) {
        int shift = bdeg(a) - db;
        UPoly la = a.back();
        a = bmul_u(a, lb);
        BPoly s(static_cast<size_t>(shift));
        s.insert(s.end(), b.begin(), b.end());
        a = bsub(a, bmul_u(s, la));
    }
    return a;
}

BPoly to_bpoly(const QtPoly& p) {
    BPoly r(static_cast<size_t>(p.deg_q()) + 1);
    for (const auto& [e, c] : p.terms()) {
        auto& u = r[static_cast<size_t>(e.first)];
        if (static_cast<int>(u.size()) <= e.second) u.resize(static_cast<size_t>(e.second) + 1, BigInt(0));
        u[static_cast<size_t>(e.second)] = c;
    }
    btrim(r);
    return r;
}

QtPoly from_bpoly(const BPoly& p) {
    QtPoly r;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0) r.set_term(static_cast<int>(i), static_cast<int>(j), p[i][j]);
    return r;
}

} // namespace

QtPoly QtPoly::gcd(const QtPoly& a, const QtPoly& b) {
    if (a.is_zero() && b.is_zero()) return QtPoly::zero();
    if (a.is_zero()) return b.leading_coeff() < 0 ? -b : b;
    if (b.is_zero()) return a.leading_coeff() < 0 ? -a : a;

    // fast path: gcd with a monomial is the coefficient gcd times the
    // largest monomial dividing every term of the other argument
    if (a.terms().size() == 1 || b.terms().size() == 1) {
        const QtPoly& m = a.terms().size() == 1 ? a : b;
        const QtPoly& p = a.terms().size() == 1 ? b : a;
        const auto& [me, mc] = *m.terms().begin();
        int gq = me.first, gt = me.second;
        BigInt gc = mc < 0 ? BigInt(-mc) : mc;
        for (const auto& [e, c] : p.terms()) {
            gq = std::min(gq, e.first);
            gt = std::min(gt, e.second);
            if (gc != 1) gc = big_gcd(gc, c);
        }
        return QtPoly(gc, gq, gt);
    }

    BPoly A = to_bpoly(a), B = to_bpoly(b);
    UPoly cA = bcontent(A), cB = bcontent(B);
    UPoly cg = ugcd(cA, cB);
    A = bexact_div_u(A, cA);
    B = bexact_div_u(B, cB);
    if (bdeg(A) < bdeg(B)) std::swap(A, B);
    while (true) {
        BPoly r = bprem(A, B);
        if (bis_zero(r)) break;
        if (bdeg(r) == 0) {
            B = {UPoly{BigInt(1)}};
            break;
        }
        A = std::move(B);
        B = bprimitive(r);
    }
    QtPoly g = from_bpoly(bmul_u(bprimitive(B), cg));
    if (g.leading_coeff() < 0) g = -g;
    return g;
}

} // namespace qmacd
