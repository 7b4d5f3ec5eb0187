#include "qmacd/xpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qmacd {

XPolynomial XPolynomial::constant(int n, const QtScalar& c) {
    XPolynomial f(n);
    f.add_term(ExpVec(static_cast<size_t>(n), 0), c);
    return f;
}

XPolynomial XPolynomial::monomial(int n, const ExpVec& exp, const QtScalar& c) {
    XPolynomial f(n);
    f.add_term(exp, c);
    return f;
}

XPolynomial XPolynomial::monomial(const Composition& eta, const QtScalar& c) {
    return monomial(eta.size(), eta.entries(), c);
}

XPolynomial XPolynomial::variable(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("XPolynomial::variable: index");
    ExpVec e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    return monomial(n, e);
}

void XPolynomial::check_exp(const ExpVec& exp) const {
    if (static_cast<int>(exp.size()) != n_)
        throw std::invalid_argument("XPolynomial: exponent vector length mismatch");
    for (int e : exp)
        if (e < 0) throw std::invalid_argument("XPolynomial: negative exponent");
}

void XPolynomial::add_term(const ExpVec& exp, const QtScalar& c) {
    check_exp(exp);
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QtScalar XPolynomial::coeff(const ExpVec& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? QtScalar() : it->second;
}

int XPolynomial::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool XPolynomial::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int w = std::accumulate(e.begin(), e.end(), 0);
        if (d < 0) d = w;
        else if (w != d) return false;
    }
    return true;
}

XPolynomial XPolynomial::operator-() const {
    XPolynomial r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

XPolynomial XPolynomial::operator+(const XPolynomial& o) const {
    if (n_ != o.n_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("XPolynomial: variable count mismatch");
    XPolynomial r = terms_.empty() && n_ == 0 ? XPolynomial(o.n_) : *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

XPolynomial XPolynomial::operator-(const XPolynomial& o) const { return *this + (-o); }

XPolynomial XPolynomial::operator*(const XPolynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("XPolynomial: variable count mismatch");
    XPolynomial r(n_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e(e1);
            for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

XPolynomial XPolynomial::operator*(const QtScalar& c) const {
    XPolynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

XPolynomial XPolynomial::times_xi(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("times_xi: index");
    XPolynomial r(n_);
    for (const auto& [e, c] : terms_) {
        ExpVec e2 = e;
        e2[static_cast<size_t>(i - 1)] += 1;
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

XPolynomial XPolynomial::degree_slice(int d) const {
    XPolynomial r(n_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
    return r;
}

XPolynomial XPolynomial::bidegree_slice(int split, int dx, int dy) const {
    XPolynomial r(n_);
    for (const auto& [e, c] : terms_) {
        int wx = std::accumulate(e.begin(), e.begin() + split, 0);
        int wy = std::accumulate(e.begin() + split, e.end(), 0);
        if (wx == dx && wy == dy) r.terms_.emplace(e, c);
    }
    return r;
}

XPolynomial XPolynomial::exact_div(const XPolynomial& f, const XPolynomial& g) {
    if (g.is_zero()) throw std::domain_error("XPolynomial: division by zero");
    if (f.nvars() != g.nvars()) throw std::invalid_argument("XPolynomial: variable count mismatch");
    XPolynomial rem = f;
    XPolynomial quot(f.nvars());
    const auto& [ge, gc] = *g.terms_.rbegin(); // lex-leading term of divisor
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        ExpVec e(re);
        bool ok = true;
        for (size_t k = 0; k < e.size(); ++k) {
            e[k] -= ge[k];
            if (e[k] < 0) { ok = false; break; }
        }
        if (!ok) throw std::domain_error("XPolynomial: inexact division");
        QtScalar c = rc / gc;
        quot.add_term(e, c);
        rem -= g * XPolynomial::monomial(f.nvars(), e, c);
    }
    return quot;
}

XPolynomial apply_swap(const XPolynomial& f, int i, int j) {
    int n = f.nvars();
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::out_of_range("apply_swap: indices");
    XPolynomial r(n);
    for (const auto& [e, c] : f.terms()) {
        XPolynomial::ExpVec e2 = e;
        std::swap(e2[static_cast<size_t>(i - 1)], e2[static_cast<size_t>(j - 1)]);
        r.add_term(e2, c);
    }
    return r;
}

XPolynomial apply_qshift(const XPolynomial& f, int i) {
    int n = f.nvars();
    if (i < 1 || i > n) throw std::out_of_range("apply_qshift: index");
    XPolynomial r(n);
    for (const auto& [e, c] : f.terms()) {
        int ei = e[static_cast<size_t>(i - 1)];
        r.add_term(e, c * QtScalar(QtMonomial(ei, 0)));
    }
    return r;
}

XPolynomial divide_by_xi(const XPolynomial& f, int i) {
    int n = f.nvars();
    if (i < 1 || i > n) throw std::out_of_range("divide_by_xi: index");
    XPolynomial r(n);
    for (const auto& [e, c] : f.terms()) {
        if (e[static_cast<size_t>(i - 1)] < 1) {
            std::ostringstream os;
            os << "divide_by_xi: term not divisible by x_" << i << " (exponents";
            for (int k : e) os << ' ' << k;
            os << ")";
            throw std::domain_error(os.str());
        }
        XPolynomial::ExpVec e2 = e;
        e2[static_cast<size_t>(i - 1)] -= 1;
        r.add_term(e2, c);
    }
    return r;
}

QtScalar principal_specialize(const XPolynomial& f) {
    QtScalar acc;
    for (const auto& [e, c] : f.terms()) {
        int texp = 0;
        for (size_t k = 0; k < e.size(); ++k) texp += static_cast<int>(k) * e[k];
        acc += c * QtScalar(QtMonomial(0, texp));
    }
    return acc;
}

XPolynomial bar_coeffs(const XPolynomial& f) {
    XPolynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) r.add_term(e, c.bar());
    return r;
}

bool is_symmetric_in(const XPolynomial& f, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        if (apply_swap(f, i, i + 1) != f) return false;
    return true;
}

XPolynomial monomial_symmetric(int n, const Composition& lambda, int lo, int hi) {
    int m = hi - lo + 1;
    if (lambda.size() > m) throw std::invalid_argument("monomial_symmetric: too many parts");
    std::vector<int> exps(static_cast<size_t>(m), 0);
    for (int i = 0; i < lambda.size(); ++i) exps[static_cast<size_t>(i)] = lambda[i];
    std::sort(exps.begin(), exps.end());
    std::set<std::vector<int>> perms;
    do {
        perms.insert(exps);
    } while (std::next_permutation(exps.begin(), exps.end()));
    XPolynomial r(n);
    for (const auto& p : perms) {
        XPolynomial::ExpVec e(static_cast<size_t>(n), 0);
        for (int k = 0; k < m; ++k) e[static_cast<size_t>(lo - 1 + k)] = p[static_cast<size_t>(k)];
        r.add_term(e, QtScalar(1));
    }
    return r;
}

} // namespace qmacd
