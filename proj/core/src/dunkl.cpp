#include "qmacd/dunkl.hpp"

#include <stdexcept>

namespace qmacd {

namespace {

QtScalar tpow(int k) { return QtScalar(QtMonomial(0, k)); }

} // namespace

XPolynomial apply_Di(const XPolynomial& f, int i, const VarBlock& blk) {
    int n = blk.count;
    if (i < 1 || i > n) throw std::out_of_range("D_i: index out of range");
    XPolynomial h = apply_Yi(f, i, blk);
    XPolynomial bracket = h;
    if (i < n) {
        QtScalar tinv_minus_one = tpow(-1) - QtScalar(1);
        XPolynomial acc(f.nvars());
        for (int j = i + 1; j <= n; ++j)
            acc += apply_Tij_inv(h, i, j, blk) * tpow(j - i);
        bracket += acc * tinv_minus_one;
    }
    XPolynomial g = f - bracket * tpow(n - 1);
    return divide_by_xi(g, blk.offset + i);
}

XPolynomial apply_Di_alt(const XPolynomial& f, int i, const VarBlock& blk) {
    int n = blk.count;
    if (i < 1 || i > n) throw std::out_of_range("D_i: index out of range");
    XPolynomial h = apply_Yi(f, i, blk);
    XPolynomial g =
        i < n ? f - apply_Iij_inv(h, i, n - 1, blk) * tpow(2 * n - i - 1)
              : f - h * tpow(n - 1);
    return divide_by_xi(g, blk.offset + i);
}

XPolynomial apply_Di_alt2(const XPolynomial& f, int i, const VarBlock& blk) {
    int n = blk.count;
    if (i < 1 || i > n) throw std::out_of_range("D_i: index out of range");
    XPolynomial g = f;
    for (int j = i - 1; j >= 1; --j) g = apply_Ti_inv(g, j, blk);
    g = apply_omega(g, blk);
    for (int j = n - 1; j >= i; --j) g = apply_Ti_inv(g, j, blk);
    return divide_by_xi(f - g * tpow(n - 1), blk.offset + i);
}

XPolynomial apply_Di_conj(const XPolynomial& f, int i, const VarBlock& blk) {
    int n = blk.count;
    if (i < 1 || i > n) throw std::out_of_range("D_i: index out of range");
    XPolynomial g = f;
    for (int j = i; j <= n - 1; ++j) g = apply_Ti(g, j, blk);
    g = apply_Di(g, n, blk);
    for (int j = n - 1; j >= i; --j) g = apply_Ti(g, j, blk);
    return g * tpow(i - n);
}

XPolynomial apply_phi(const XPolynomial& f, const VarBlock& blk) {
    int n = blk.count;
    XPolynomial g = f;
    for (int j = 1; j <= n - 1; ++j) g = apply_Ti_inv(g, j, blk);
    return g.times_xi(blk.offset + n);
}

XPolynomial apply_phi_form(const XPolynomial& f, int i, const VarBlock& blk) {
    int n = blk.count;
    if (i < 1 || i > n) throw std::out_of_range("Phi_q form: index");
    XPolynomial g = f;
    for (int j = 1; j <= i - 1; ++j) g = apply_Ti_inv(g, j, blk);
    g = g.times_xi(blk.offset + i);
    for (int j = i; j <= n - 1; ++j) g = apply_Ti(g, j, blk);
    return g * tpow(i - n);
}

XPolynomial apply_phihat(const XPolynomial& f, const VarBlock& blk) {
    int n = blk.count;
    XPolynomial g = apply_Di(f, n, blk);
    for (int j = n - 1; j >= 1; --j) g = apply_Ti(g, j, blk);
    return g;
}

XPolynomial apply_phihat_form(const XPolynomial& f, int i, const VarBlock& blk) {
    int n = blk.count;
    if (i < 1 || i > n) throw std::out_of_range("PhiHat_q form: index");
    XPolynomial g = f;
    for (int j = n - 1; j >= i; --j) g = apply_Ti_inv(g, j, blk);
    g = apply_Di(g, i, blk);
    for (int j = i - 1; j >= 1; --j) g = apply_Ti(g, j, blk);
    return g * tpow(n - i);
}

XPolynomial apply_E0m(const XPolynomial& f, int m) {
    int n = f.nvars();
    if (m < 1 || m > n) throw std::out_of_range("E_{0,m}: index out of range");
    if (!is_symmetric_in(f, m, n))
        throw std::invalid_argument("E_{0,m}: input not symmetric in x_m..x_n");

    // g_i = (1 - tau_i) f / x_i, a polynomial since 1 - tau_i kills the
    // x_i-free part
    auto g_of = [&](int i) {
        XPolynomial d(n);
        for (const auto& [e, c] : f.terms()) {
            int ei = e[static_cast<size_t>(i - 1)];
            if (ei == 0) continue;
            XPolynomial::ExpVec e2 = e;
            e2[static_cast<size_t>(i - 1)] -= 1;
            d.add_term(e2, c * (QtScalar(1) - QtScalar(QtMonomial(ei, 0))));
        }
        return d;
    };

    auto diff = [&](int p, int q_) {
        return XPolynomial::variable(n, p) - XPolynomial::variable(n, q_);
    };

    // single common denominator V = prod_{m<=p<q<=n} (x_p - x_q)
    XPolynomial numer(n);
    for (int i = m; i <= n; ++i) {
        XPolynomial term = g_of(i);
        for (int j = m; j <= n; ++j) {
            if (j == i) continue;
            term = term * (XPolynomial::variable(n, i) * QtScalar::t() - XPolynomial::variable(n, j));
        }
        for (int p = m; p < n; ++p)
            for (int q_ = p + 1; q_ <= n; ++q_)
                if (p != i && q_ != i) term = term * diff(p, q_);
        if ((i - m) % 2 == 1) term = -term;
        numer += term;
    }
    XPolynomial V = XPolynomial::constant(n, QtScalar(1));
    for (int p = m; p < n; ++p)
        for (int q_ = p + 1; q_ <= n; ++q_) V = V * diff(p, q_);
    return XPolynomial::exact_div(numer, V);
}

} // namespace qmacd
