#include "qmacd/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qmacd {

namespace {

void check_block(const XPolynomial& f, const VarBlock& blk) {
    if (blk.offset < 0 || blk.count < 1 || blk.offset + blk.count > f.nvars())
        throw std::out_of_range("VarBlock does not fit polynomial");
}

void check_ti_index(int i, const VarBlock& blk) {
    if (i < 1 || i > blk.count - 1) throw std::out_of_range("T_i: index out of range");
}

const QtScalar kOne(1);

} // namespace

ReducedWord reduced_word(const std::vector<int>& perm) {
    // strip descents from the right: w -> w s_i shortens w when w(i) > w(i+1);
    // always picking the smallest descent makes the word canonical
    std::vector<int> w = perm;
    std::vector<int> rev;
    int n = static_cast<int>(w.size());
    while (true) {
        int i = -1;
        for (int k = 0; k + 1 < n; ++k) {
            if (w[static_cast<size_t>(k)] > w[static_cast<size_t>(k + 1)]) { i = k; break; }
        }
        if (i < 0) break;
        rev.push_back(i + 1);
        std::swap(w[static_cast<size_t>(i)], w[static_cast<size_t>(i + 1)]);
    }
    ReducedWord out;
    out.letters.assign(rev.rbegin(), rev.rend());
    return out;
}

XPolynomial apply_Ti(const XPolynomial& f, int i, const VarBlock& blk) {
    check_block(f, blk);
    check_ti_index(i, blk);
    size_t pi = static_cast<size_t>(blk.offset + i - 1);
    size_t pj = pi + 1;
    QtScalar t = QtScalar::t();
    QtScalar one_minus_t = kOne - t;
    QtScalar t_minus_one = t - kOne;
    XPolynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        int a = e[pi], b = e[pj];
        XPolynomial::ExpVec e2 = e;
        if (a == b) {
            r.add_term(e, c * t);
            continue;
        }
        std::swap(e2[pi], e2[pj]); // exponents (b, a)
        if (a > b) {
            // (1-t) x_i^{a-1}x_{i+1}^{b+1} + ... + (1-t) x_i^{b+1}x_{i+1}^{a-1}
            // + x_i^b x_{i+1}^a
            QtScalar c1 = c * one_minus_t;
            XPolynomial::ExpVec em = e;
            for (int r_ = 1; r_ <= a - b - 1; ++r_) {
                em[pi] = a - r_;
                em[pj] = b + r_;
                r.add_term(em, c1);
            }
            r.add_term(e2, c);
        } else {
            // (t-1) x_i^a x_{i+1}^b + ... + (t-1) x_i^{b-1}x_{i+1}^{a+1}
            // + t x_i^b x_{i+1}^a
            QtScalar c1 = c * t_minus_one;
            XPolynomial::ExpVec em = e;
            for (int r_ = 0; r_ <= b - a - 1; ++r_) {
                em[pi] = a + r_;
                em[pj] = b - r_;
                r.add_term(em, c1);
            }
            r.add_term(e2, c * t);
        }
    }
    return r;
}

XPolynomial apply_Ti_inv(const XPolynomial& f, int i, const VarBlock& blk) {
    // T_i^{-1} = t^{-1} - 1 + t^{-1} T_i
    QtScalar tinv = QtScalar(QtMonomial(0, -1));
    return f * (tinv - kOne) + apply_Ti(f, i, blk) * tinv;
}

XPolynomial apply_Ti_rational(const XPolynomial& f, int i, const VarBlock& blk) {
    check_block(f, blk);
    check_ti_index(i, blk);
    int n = f.nvars();
    int vi = blk.offset + i;      // 1-based x_i
    int vj = blk.offset + i + 1;  // 1-based x_{i+1}
    XPolynomial xi = XPolynomial::variable(n, vi);
    XPolynomial xj = XPolynomial::variable(n, vj);
    XPolynomial num = xi * QtScalar::t() - xj;
    XPolynomial den = xi - xj;
    XPolynomial sf = apply_swap(f, vi, vj) - f; // always divisible by x_i - x_{i+1}
    return f * QtScalar::t() + num * XPolynomial::exact_div(sf, den);
}

XPolynomial apply_omega(const XPolynomial& f, const VarBlock& blk) {
    check_block(f, blk);
    size_t off = static_cast<size_t>(blk.offset);
    size_t m = static_cast<size_t>(blk.count);
    XPolynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        XPolynomial::ExpVec e2 = e;
        int first = e[off];
        for (size_t k = 0; k + 1 < m; ++k) e2[off + k] = e[off + k + 1];
        e2[off + m - 1] = first;
        r.add_term(e2, c * QtScalar(QtMonomial(first, 0)));
    }
    return r;
}

XPolynomial apply_omega_inv(const XPolynomial& f, const VarBlock& blk) {
    check_block(f, blk);
    size_t off = static_cast<size_t>(blk.offset);
    size_t m = static_cast<size_t>(blk.count);
    XPolynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        XPolynomial::ExpVec e2 = e;
        int last = e[off + m - 1];
        for (size_t k = m - 1; k >= 1; --k) e2[off + k] = e[off + k - 1];
        e2[off] = last;
        r.add_term(e2, c * QtScalar(QtMonomial(-last, 0)));
    }
    return r;
}

XPolynomial apply_T0(const XPolynomial& f, const VarBlock& blk) {
    if (blk.count < 2) throw std::out_of_range("T_0: block too small");
    return apply_omega(apply_Ti(apply_omega_inv(f, blk), 1, blk), blk);
}

XPolynomial apply_T0_direct(const XPolynomial& f, const VarBlock& blk) {
    // On monomials, substituting u = x_1, v = q x_n turns T_0 into the
    // T_i monomial rule with the roles of (x_i, x_{i+1}) played by (v, u).
    check_block(f, blk);
    if (blk.count < 2) throw std::out_of_range("T_0: block too small");
    size_t p1 = static_cast<size_t>(blk.offset);
    size_t pn = static_cast<size_t>(blk.offset + blk.count - 1);
    QtScalar t = QtScalar::t();
    QtScalar one_minus_t = kOne - t;
    QtScalar t_minus_one = t - kOne;
    XPolynomial r(f.nvars());
    auto qpow = [](int k) { return QtScalar(QtMonomial(k, 0)); };
    for (const auto& [e, c] : f.terms()) {
        int a = e[p1], b = e[pn]; // u-exponent a, v-exponent b
        if (a == b) {
            r.add_term(e, c * t);
            continue;
        }
        XPolynomial::ExpVec e2 = e;
        e2[p1] = b;
        e2[pn] = a;
        if (b > a) {
            // v-exponent > u-exponent: descending v-exponents b-1..a+1
            QtScalar c1 = c * one_minus_t;
            XPolynomial::ExpVec em = e;
            for (int r_ = 1; r_ <= b - a - 1; ++r_) {
                em[p1] = a + r_;
                em[pn] = b - r_;
                r.add_term(em, c1 * qpow(-r_));
            }
            r.add_term(e2, c * qpow(a - b));
        } else {
            QtScalar c1 = c * t_minus_one;
            XPolynomial::ExpVec em = e;
            for (int r_ = 0; r_ <= a - b - 1; ++r_) {
                em[p1] = a - r_;
                em[pn] = b + r_;
                r.add_term(em, c1 * qpow(r_));
            }
            r.add_term(e2, c * t * qpow(a - b));
        }
    }
    return r;
}

XPolynomial apply_T0_inv(const XPolynomial& f, const VarBlock& blk) {
    QtScalar tinv = QtScalar(QtMonomial(0, -1));
    return f * (tinv - kOne) + apply_T0(f, blk) * tinv;
}

XPolynomial apply_Yi(const XPolynomial& f, int i, const VarBlock& blk) {
    check_block(f, blk);
    int n = blk.count;
    if (i < 1 || i > n) throw std::out_of_range("Y_i: index out of range");
    XPolynomial g = f;
    for (int j = i - 1; j >= 1; --j) g = apply_Ti_inv(g, j, blk);
    g = apply_omega(g, blk);
    for (int j = n - 1; j >= i; --j) g = apply_Ti(g, j, blk);
    return g * QtScalar(QtMonomial(0, i - n));
}

XPolynomial apply_Tij_inv(const XPolynomial& f, int i, int j, const VarBlock& blk) {
    if (i < 1 || j <= i || j > blk.count) throw std::out_of_range("T_ij^{-1}: indices");
    // T_i^{-1}...T_{j-2}^{-1} T_{j-1}^{-1} T_{j-2}^{-1}...T_i^{-1}, rightmost first
    XPolynomial g = f;
    for (int k = i; k <= j - 2; ++k) g = apply_Ti_inv(g, k, blk);
    g = apply_Ti_inv(g, j - 1, blk);
    for (int k = j - 2; k >= i; --k) g = apply_Ti_inv(g, k, blk);
    return g;
}

XPolynomial apply_Tij(const XPolynomial& f, int i, int j, const VarBlock& blk) {
    if (i < 1 || j <= i || j > blk.count) throw std::out_of_range("T_ij: indices");
    XPolynomial g = f;
    for (int k = i; k <= j - 2; ++k) g = apply_Ti(g, k, blk);
    g = apply_Ti(g, j - 1, blk);
    for (int k = j - 2; k >= i; --k) g = apply_Ti(g, k, blk);
    return g;
}

XPolynomial apply_Iij_inv(const XPolynomial& f, int i, int j, const VarBlock& blk) {
    if (i < 1 || j < i || j > blk.count - 1) throw std::out_of_range("I_ij^{-1}: indices");
    // word T_i^{-1}..T_j^{-1} T_j^{-1}..T_i^{-1}, rightmost factor first
    XPolynomial g = f;
    for (int k = i; k <= j; ++k) g = apply_Ti_inv(g, k, blk);
    for (int k = j; k >= i; --k) g = apply_Ti_inv(g, k, blk);
    return g;
}

XPolynomial apply_Tw(const XPolynomial& f, const ReducedWord& w, const VarBlock& blk) {
    XPolynomial g = f;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        g = apply_Ti(g, *it, blk);
    return g;
}

XPolynomial apply_Uplus(const XPolynomial& f, const VarBlock& blk) {
    check_block(f, blk);
    int n = blk.count;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    XPolynomial acc(f.nvars());
    do {
        acc += apply_Tw(f, reduced_word(perm), blk);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace qmacd
