#include "qmacd/macdonald.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmacd {

CompositionStats composition_stats(const Composition& eta, int n) {
    if (eta.size() != n) throw std::invalid_argument("composition_stats: length mismatch");
    CompositionStats st;
    st.eta = eta;
    st.n = n;
    st.d = st.dprime = st.e = QtScalar(1);
    QtScalar one(1);
    for (int i = 0; i < n; ++i) {
        std::vector<int> arm_i, armco_i, leg_i, legco_i;
        for (int j = 1; j <= eta[i]; ++j) {
            int a = eta[i] - j;
            int ap = j - 1;
            int l = 0, lp = 0;
            for (int k = 0; k < n; ++k) {
                if (k > i) {
                    if (j <= eta[k] && eta[k] <= eta[i]) ++l;
                    if (eta[k] > eta[i]) ++lp;
                } else if (k < i) {
                    if (j <= eta[k] + 1 && eta[k] + 1 <= eta[i]) ++l;
                    if (eta[k] >= eta[i]) ++lp;
                }
            }
            arm_i.push_back(a);
            armco_i.push_back(ap);
            leg_i.push_back(l);
            legco_i.push_back(lp);
            st.d *= one - QtScalar(QtMonomial(a + 1, l + 1));
            st.dprime *= one - QtScalar(QtMonomial(a + 1, l));
            st.e *= one - QtScalar(QtMonomial(ap + 1, n - lp));
        }
        st.arm.push_back(std::move(arm_i));
        st.armco.push_back(std::move(armco_i));
        st.leg.push_back(std::move(leg_i));
        st.legco.push_back(std::move(legco_i));
    }
    for (int i = 0; i < n; ++i) {
        int c = 0;
        for (int k = 0; k < n; ++k) {
            if (k < i && eta[k] >= eta[i]) ++c;
            if (k > i && eta[k] > eta[i]) ++c;
        }
        st.etabar.emplace_back(eta[i], -c);
    }
    return st;
}

QtMonomial delta(const Composition& eta, int i) {
    int n = eta.size();
    if (i < 1 || i > n - 1) throw std::out_of_range("delta: index out of range");
    auto st = composition_stats(eta, n);
    return st.etabar[static_cast<size_t>(i - 1)] / st.etabar[static_cast<size_t>(i)];
}

namespace {

// Phi_q = x_n T_{n-1}^{-1} ... T_1^{-1}, local to the E-recursion
XPolynomial raising_phi(const XPolynomial& f) {
    int n = f.nvars();
    XPolynomial g = f;
    VarBlock blk = VarBlock::whole(f);
    for (int j = 1; j <= n - 1; ++j) g = apply_Ti_inv(g, j, blk);
    return g.times_xi(n);
}

} // namespace

XPolynomial MacdonaldTable::nonsym_macdonald(const Composition& eta) {
    {
        std::lock_guard<std::mutex> lk(mutex_);
        auto it = cache_.find(eta.entries());
        if (it != cache_.end()) return it->second;
    }
    int n = eta.size();
    XPolynomial result(n);
    if (eta.weight() == 0) {
        result = XPolynomial::constant(n, QtScalar(1));
    } else if (eta[n - 1] >= 1) {
        // eta = Phi nu with nu = (eta_n - 1, eta_1, ..., eta_{n-1});
        // invert Phi_q E_nu = t^{-#{i>=2 : nu_i <= nu_1}} E_{Phi nu}
        std::vector<int> nu_e(static_cast<size_t>(n));
        nu_e[0] = eta[n - 1] - 1;
        for (int i = 1; i < n; ++i) nu_e[static_cast<size_t>(i)] = eta[i - 1];
        Composition nu(nu_e);
        int count = 0;
        for (int i = 1; i < n; ++i)
            if (nu[i] <= nu[0]) ++count;
        result = raising_phi(nonsym_macdonald(nu)) * QtScalar(QtMonomial(0, count));
    } else {
        // largest descent i: eta_i > eta_{i+1}; nu = s_i eta has nu_i < nu_{i+1}
        int i = 0;
        for (int k = n - 1; k >= 1; --k) {
            if (eta[k - 1] > eta[k]) { i = k; break; }
        }
        std::vector<int> nu_e = eta.entries();
        std::swap(nu_e[static_cast<size_t>(i - 1)], nu_e[static_cast<size_t>(i)]);
        Composition nu(nu_e);
        XPolynomial Enu = nonsym_macdonald(nu);
        QtMonomial d = delta(nu, i);
        QtScalar coeff = (QtScalar::t() - QtScalar(1)) /
                         (QtScalar(1) - QtScalar(QtMonomial(-d.qexp, -d.texp)));
        QtScalar tinv(QtMonomial(0, -1));
        result = (apply_Ti(Enu, i) - Enu * coeff) * tinv;
    }
    std::lock_guard<std::mutex> lk(mutex_);
    cache_.emplace(eta.entries(), result);
    return result;
}

XPolynomial MacdonaldTable::nonsym_macdonald_oracle(const Composition& eta) const {
    int n = eta.size();
    // basis: monomials x^nu with nu preceq eta of the same weight
    std::vector<Composition> basis;
    for (const auto& nu : compositions_of_weight(n, eta.weight()))
        if (nu == eta || prec_order(nu, eta)) basis.push_back(nu);
    int dim = static_cast<int>(basis.size());
    std::map<std::vector<int>, int> index;
    for (int k = 0; k < dim; ++k) index[basis[static_cast<size_t>(k)].entries()] = k;

    auto st = composition_stats(eta, n);

    // stack rows of (Y_i - t^{etabar_i}) over all i
    std::vector<std::vector<QtScalar>> rows;
    for (int i = 1; i <= n; ++i) {
        std::vector<std::vector<QtScalar>> cols(
            static_cast<size_t>(dim), std::vector<QtScalar>(static_cast<size_t>(dim)));
        for (int k = 0; k < dim; ++k) {
            XPolynomial img = apply_Yi(XPolynomial::monomial(basis[static_cast<size_t>(k)]), i);
            for (const auto& [e, c] : img.terms()) {
                auto it = index.find(e);
                if (it == index.end())
                    throw std::runtime_error("oracle: Y_i image escapes triangular span");
                cols[static_cast<size_t>(k)][static_cast<size_t>(it->second)] = c;
            }
        }
        QtScalar ev{st.etabar[static_cast<size_t>(i - 1)]};
        for (int r = 0; r < dim; ++r) {
            std::vector<QtScalar> row(static_cast<size_t>(dim));
            for (int k = 0; k < dim; ++k) {
                row[static_cast<size_t>(k)] = cols[static_cast<size_t>(k)][static_cast<size_t>(r)];
                if (k == r) row[static_cast<size_t>(k)] -= ev;
            }
            rows.push_back(std::move(row));
        }
    }

    // Gaussian elimination to row echelon form
    int rank = 0;
    std::vector<bool> pivot_col(static_cast<size_t>(dim), false);
    for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (!rows[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) { piv = r; break; }
        }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
        QtScalar inv = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)].inverse();
        for (int k = col; k < dim; ++k) rows[static_cast<size_t>(rank)][static_cast<size_t>(k)] *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            QtScalar f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            for (int k = col; k < dim; ++k)
                rows[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
                    f * rows[static_cast<size_t>(rank)][static_cast<size_t>(k)];
        }
        pivot_col[static_cast<size_t>(col)] = true;
        ++rank;
    }
    if (rank != dim - 1)
        throw std::runtime_error("oracle: joint eigenspace dimension != 1");

    // back-substitute the single free column
    int free_col = -1;
    for (int k = 0; k < dim; ++k)
        if (!pivot_col[static_cast<size_t>(k)]) { free_col = k; break; }
    std::vector<QtScalar> sol(static_cast<size_t>(dim));
    sol[static_cast<size_t>(free_col)] = QtScalar(1);
    int r = 0;
    for (int col = 0; col < dim; ++col) {
        if (!pivot_col[static_cast<size_t>(col)]) continue;
        // row r has pivot 1 at col: x_col = -sum_{k>col} row[k] x_k
        QtScalar v;
        for (int k = col + 1; k < dim; ++k)
            v -= rows[static_cast<size_t>(r)][static_cast<size_t>(k)] * sol[static_cast<size_t>(k)];
        sol[static_cast<size_t>(col)] = v;
        ++r;
    }

    int lead = index.at(eta.entries());
    QtScalar norm = sol[static_cast<size_t>(lead)];
    if (norm.is_zero()) throw std::runtime_error("oracle: leading coefficient vanished");
    QtScalar ninv = norm.inverse();
    XPolynomial E(n);
    for (int k = 0; k < dim; ++k)
        E.add_term(basis[static_cast<size_t>(k)].entries(), sol[static_cast<size_t>(k)] * ninv);
    return E;
}

XPolynomial MacdonaldTable::symmetric_macdonald(const Composition& kappa) {
    if (!kappa.is_partition())
        throw std::invalid_argument("symmetric_macdonald: not a partition");
    int n = kappa.size();
    QtScalar dpk = composition_stats(kappa, n).dprime;
    std::vector<int> perm = kappa.entries();
    std::sort(perm.begin(), perm.end());
    XPolynomial acc(n);
    do {
        Composition eta(perm);
        QtScalar dpe = composition_stats(eta, n).dprime;
        acc += nonsym_macdonald(eta) * (QtScalar(1) / dpe);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc * dpk;
}

QtScalar MacdonaldTable::a_eta(const Composition& eta) {
    int n = eta.size();
    auto st = composition_stats(eta, n);
    int legsum = 0;
    for (const auto& col : st.leg)
        for (int l : col) legsum += l;
    QtScalar pspec = principal_specialize(symmetric_macdonald(eta.sorted()));
    return t_factorial(n) * QtScalar(QtMonomial(0, legsum)) * st.e / (pspec * st.d);
}

namespace {

QtScalar ti_case_coeff(const QtMonomial& d) {
    // (t-1)/(1 - t^{-delta})
    return (QtScalar::t() - QtScalar(1)) /
           (QtScalar(1) - QtScalar(QtMonomial(-d.qexp, -d.texp)));
}

QtScalar swap_coeff(const QtMonomial& d) {
    // (1-t^{delta+1})(1-t^{delta-1}) / (1-t^{delta})^2
    QtScalar one(1);
    QtScalar td(d);
    QtScalar tdp(QtMonomial(d.qexp, d.texp + 1));
    QtScalar tdm(QtMonomial(d.qexp, d.texp - 1));
    return (one - tdp) * (one - tdm) / ((one - td) * (one - td));
}

} // namespace

std::pair<QtScalar, QtScalar> ti_on_E(const Composition& eta, int i) {
    int a = eta[i - 1], b = eta[i];
    if (a == b) return {QtScalar::t(), QtScalar()};
    QtMonomial d = delta(eta, i);
    if (a < b) return {ti_case_coeff(d), QtScalar::t()};
    return {ti_case_coeff(d), swap_coeff(d)};
}

std::pair<QtScalar, QtScalar> ti_inv_on_E(const Composition& eta, int i) {
    QtScalar tinv(QtMonomial(0, -1));
    int a = eta[i - 1], b = eta[i];
    if (a == b) return {tinv, QtScalar()};
    QtMonomial d = delta(eta, i);
    // (t^{-1}-1)/(1-t^{delta})
    QtScalar diag = (tinv - QtScalar(1)) / (QtScalar(1) - QtScalar(d));
    if (a < b) return {diag, QtScalar(1)};
    return {diag, tinv * swap_coeff(d)};
}

QtScalar t_factorial(int n) {
    QtScalar one(1), t = QtScalar::t();
    QtScalar acc(1);
    for (int i = 1; i <= n; ++i)
        acc *= (one - QtScalar(QtMonomial(0, i))) / (one - t);
    return acc;
}

} // namespace qmacd
