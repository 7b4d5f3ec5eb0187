#include "qmacd/kernel.hpp"

#include <chrono>
#include <functional>
#include <limits>
#include <numeric>

#include "qmacd/format.hpp"

namespace qmacd {

namespace {

/// embed an n-variable polynomial into a 2n-variable ring at the given offset
XPolynomial embed(const XPolynomial& f, int n2, int offset) {
    XPolynomial r(n2);
    for (const auto& [e, c] : f.terms()) {
        XPolynomial::ExpVec e2(static_cast<size_t>(n2), 0);
        for (size_t k = 0; k < e.size(); ++k) e2[static_cast<size_t>(offset) + k] = e[k];
        r.add_term(e2, c);
    }
    return r;
}

double elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string first_difference(const XPolynomial& L, const XPolynomial& R) {
    XPolynomial diff = L - R;
    if (diff.is_zero()) return {};
    const auto& [e, c] = *diff.terms().begin();
    std::ostringstream os;
    os << "monomial [";
    for (size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
    os << "] lhs=" << to_string(L.coeff(e)) << " rhs=" << to_string(R.coeff(e));
    return os.str();
}

void record(Report& rep, const std::string& name, const XPolynomial& L, const XPolynomial& R,
            const std::chrono::steady_clock::time_point& t0) {
    CheckResult r;
    r.name = name;
    r.pass = (L == R);
    if (!r.pass) r.detail = first_difference(L, R);
    r.millis = elapsed_ms(t0);
    rep.results.push_back(std::move(r));
}

/// least common multiple of all coefficient denominators
QtPoly common_denominator(const XPolynomial& f) {
    QtPoly L = QtPoly::one();
    for (const auto& [e, c] : f.terms()) {
        const QtPoly& d = c.den();
        if (d.is_one()) continue;
        L = L * QtPoly::exact_div(d, QtPoly::gcd(L, d));
    }
    return L;
}

/// f with every coefficient multiplied by L; every denominator must divide L.
/// The operator identities below are linear over Q(q,t) and all operators
/// involved have polynomial action coefficients, so checking them on L*f is
/// equivalent to checking them on f while keeping all later arithmetic in
/// Z[q,t] (no per-addition gcd reduction).
XPolynomial cleared(const XPolynomial& f, const QtPoly& L) {
    XPolynomial r(f.nvars());
    for (const auto& [e, c] : f.terms())
        r.add_term(e, QtScalar(c.num() * QtPoly::exact_div(L, c.den())));
    return r;
}

/// acc/G += S * P where P has denominator-free coefficients and S is a
/// reduced rational prefactor: rescale both sides to the shared
/// denominator G' = lcm(G, den(S))
void accumulate_product(XPolynomial& acc, QtPoly& G, const XPolynomial& P, const QtScalar& S) {
    if (S.is_zero() || P.is_zero()) return;
    QtPoly g = QtPoly::gcd(G, S.den());
    QtPoly grow = QtPoly::exact_div(S.den(), g); // G' = G * grow
    QtPoly scale = QtPoly::exact_div(G, g);      // numerator picks up G/g
    if (!grow.is_one()) {
        acc = acc * QtScalar(grow);
        G = G * grow;
    }
    acc += P * QtScalar(S.num() * scale);
}

bool try_exact_div(const QtPoly& a, const QtPoly& b, QtPoly& q) {
    try {
        q = QtPoly::exact_div(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

/// coefficient vector of the d-th cyclotomic polynomial (coefficients are
/// tiny for d < 105, so plain long long is ample)
const std::vector<long long>& cyclotomic(int d) {
    static std::vector<std::vector<long long>> table{{}, {-1, 1}}; // Phi_1 = x - 1
    while (static_cast<int>(table.size()) <= d) {
        int n = static_cast<int>(table.size());
        // x^n - 1 divided by all Phi_e, e | n, e < n
        std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
        p[0] = -1;
        p[static_cast<size_t>(n)] = 1;
        for (int e = 1; e < n; ++e) {
            if (n % e != 0) continue;
            const auto& f = table[static_cast<size_t>(e)];
            std::vector<long long> quot(p.size() - f.size() + 1, 0);
            for (size_t i = quot.size(); i-- > 0;) {
                long long c = p[i + f.size() - 1] / f.back();
                quot[i] = c;
                for (size_t j = 0; j < f.size(); ++j) p[i + j] -= c * f[j];
            }
            p = std::move(quot);
        }
        table.push_back(std::move(p));
    }
    return table[static_cast<size_t>(d)];
}

/// acc/G with each coefficient reduced to lowest terms.
/// G is a product of denominators, so in practice it splits into irreducible
/// factors of the form Phi_d(q^a t^b) with gcd(a,b) = 1 (every binomial
/// 1 - q^A t^B is such a product); factoring it once and reducing each
/// numerator by trial division is far cheaper than a full polynomial gcd per
/// term. If a non-constant residual survives, fall back to the
/// canonicalizing constructor.
XPolynomial reduce_cleared(const XPolynomial& acc, const QtPoly& G) {
    // split off the monomial part
    int mq = std::numeric_limits<int>::max(), mt = mq;
    for (const auto& [e, c] : G.terms()) {
        mq = std::min(mq, e.first);
        mt = std::min(mt, e.second);
    }
    QtPoly rest = (mq || mt) ? QtPoly::exact_div(G, QtPoly(BigInt(1), mq, mt)) : G;

    std::vector<std::pair<QtPoly, int>> factors;
    QtPoly quo;
    int dq = rest.deg_q(), dt = rest.deg_t();
    for (int a = 0; a <= dq && !rest.is_constant(); ++a) {
        for (int b = (a == 0 ? 1 : 0); b <= dt; ++b) {
            if (std::gcd(a, b) != 1) continue; // primitive monomials only
            for (int d = 1; !rest.is_constant(); ++d) {
                const auto& phi = cyclotomic(d);
                int pdeg = static_cast<int>(phi.size()) - 1;
                if (pdeg * a > rest.deg_q() || pdeg * b > rest.deg_t()) break;
                QtPoly f;
                for (int k = 0; k <= pdeg; ++k)
                    if (phi[static_cast<size_t>(k)] != 0)
                        f.set_term(a * k, b * k, BigInt(phi[static_cast<size_t>(k)]));
                int m = 0;
                while (try_exact_div(rest, f, quo)) {
                    rest = quo;
                    ++m;
                }
                if (m) factors.emplace_back(std::move(f), m);
            }
        }
    }
    bool clean = rest.is_constant(); // leftover integer content is fine

    XPolynomial r(acc.nvars());
    for (const auto& [e, c] : acc.terms()) {
        QtPoly num = c.num();
        QtPoly den = rest; // constant (or residual) part stays in the denominator
        for (const auto& [f, m] : factors) {
            int k = 0;
            while (k < m && try_exact_div(num, f, quo)) {
                num = quo;
                ++k;
            }
            for (; k < m; ++k) den = den * f;
        }
        // cancel the shared monomial part
        int nq = std::numeric_limits<int>::max(), nt = nq;
        for (const auto& [ne, nc] : num.terms()) {
            nq = std::min(nq, ne.first);
            nt = std::min(nt, ne.second);
        }
        int sq = std::min(mq, nq), st = std::min(mt, nt);
        if (sq || st) num = QtPoly::exact_div(num, QtPoly(BigInt(1), sq, st));
        if (mq - sq || mt - st) den = den * QtPoly(BigInt(1), mq - sq, mt - st);
        r.add_term(e, clean ? QtScalar::from_coprime(num, den) : QtScalar(num, den));
    }
    return r;
}

} // namespace

KernelTruncation build_KA(int n, int N, MacdonaldTable& table) {
    if (n < 1 || N < 0) throw std::invalid_argument("build_KA: need n >= 1, N >= 0");
    KernelTruncation K;
    K.n = n;
    K.N = N;
    // accumulate numerators over a running common denominator G so that the
    // cross-term additions stay in Z[q,t]; reduce once per final term
    XPolynomial acc(2 * n);
    QtPoly G = QtPoly::one();
    for (const auto& eta : compositions_up_to_weight(n, N)) {
        auto st = composition_stats(eta, n);
        QtScalar A = st.d / (st.dprime * st.e);
        K.per_eta[eta.entries()] = A;
        XPolynomial E = table.nonsym_macdonald(eta);
        XPolynomial Ex = embed(E, 2 * n, 0);
        XPolynomial Ey = embed(bar_coeffs(E), 2 * n, n);
        // clear each factor first so the product stays over Z[q,t]
        QtPoly Lx = common_denominator(Ex);
        QtPoly Ly = common_denominator(Ey);
        XPolynomial P = cleared(Ex, Lx) * cleared(Ey, Ly);
        accumulate_product(acc, G, P, A / QtScalar(Lx * Ly));
    }
    K.value = reduce_cleared(acc, G);
    return K;
}

KernelTruncation build_0F0(int n, int N, MacdonaldTable& table) {
    if (n < 1 || N < 0) throw std::invalid_argument("build_0F0: need n >= 1, N >= 0");
    KernelTruncation K;
    K.n = n;
    K.N = N;
    XPolynomial acc(2 * n);
    QtPoly G = QtPoly::one();
    for (const auto& kappa : partitions_up_to_weight(n, N)) {
        int b = 0;
        for (int i = 0; i < n; ++i) b += i * kappa[i];
        XPolynomial P = table.symmetric_macdonald(kappa);
        QtScalar coeff = QtScalar(QtMonomial(0, b)) /
                         (composition_stats(kappa, n).dprime * principal_specialize(P));
        K.per_eta[kappa.entries()] = coeff;
        XPolynomial Px = embed(P, 2 * n, 0);
        XPolynomial Py = embed(P, 2 * n, n);
        QtPoly Lx = common_denominator(Px);
        QtPoly Ly = common_denominator(Py);
        XPolynomial PP = cleared(Px, Lx) * cleared(Py, Ly);
        accumulate_product(acc, G, PP, coeff / QtScalar(Lx * Ly));
    }
    K.value = reduce_cleared(acc, G);
    return K;
}

XPolynomial conjugate_bar_y(const KernelTruncation& K, const XPolynomial& f,
                            const std::function<XPolynomial(const XPolynomial&, const VarBlock&)>& op) {
    return bar_coeffs(op(bar_coeffs(f), K.yblock()));
}

Report check_theorem52(const KernelTruncation& K, const std::string& which) {
    Report rep;
    int n = K.n, N = K.N;
    VarBlock xb = K.xblock();
    XPolynomial KC = cleared(K.value, common_denominator(K.value));

    if (which.find('a') != std::string::npos) {
        for (int i = 1; i <= n - 1; ++i) {
            auto t0 = std::chrono::steady_clock::now();
            XPolynomial L = apply_Ti(KC, i, xb);
            XPolynomial R = conjugate_bar_y(K, KC, [i](const XPolynomial& g, const VarBlock& b) {
                return apply_Ti_inv(g, i, b);
            });
            record(rep, "thm5.2(a) T_" + std::to_string(i) + "^(x) = bar(T_" + std::to_string(i) + "^-1)^(y)", L, R, t0);

            t0 = std::chrono::steady_clock::now();
            XPolynomial L2 = apply_Ti_inv(KC, i, xb);
            XPolynomial R2 = conjugate_bar_y(K, KC, [i](const XPolynomial& g, const VarBlock& b) {
                return apply_Ti(g, i, b);
            });
            record(rep, "thm5.2(a) T_" + std::to_string(i) + "^-1(x) = bar(T_" + std::to_string(i) + ")^(y)", L2, R2, t0);
        }
    }

    if (which.find('b') != std::string::npos) {
        auto t0 = std::chrono::steady_clock::now();
        XPolynomial L = apply_phihat(KC, xb);
        XPolynomial R = conjugate_bar_y(K, KC, [](const XPolynomial& g, const VarBlock& b) {
            return apply_phi(g, b);
        });
        CheckResult r;
        r.name = "thm5.2(b) PhiHat^(x) = bar(Phi)^(y) on slices (m-1,m)";
        for (int m = 1; m <= N && r.pass; ++m) {
            XPolynomial Ls = L.bidegree_slice(n, m - 1, m);
            XPolynomial Rs = R.bidegree_slice(n, m - 1, m);
            if (Ls != Rs) {
                r.pass = false;
                r.detail = "slice (" + std::to_string(m - 1) + "," + std::to_string(m) + "): " +
                           first_difference(Ls, Rs);
            }
        }
        r.millis = elapsed_ms(t0);
        rep.results.push_back(std::move(r));
    }

    if (which.find('c') != std::string::npos) {
        for (int i = 1; i <= n; ++i) {
            auto t0 = std::chrono::steady_clock::now();
            XPolynomial L = apply_Di(KC, i, xb);
            XPolynomial R = KC.times_xi(n + i);
            CheckResult r;
            r.name = "thm5.2(c) D_" + std::to_string(i) + "^(x) = y_" + std::to_string(i) +
                     " on slices (m,m+1)";
            for (int m = 0; m <= N - 1 && r.pass; ++m) {
                XPolynomial Ls = L.bidegree_slice(n, m, m + 1);
                XPolynomial Rs = R.bidegree_slice(n, m, m + 1);
                if (Ls != Rs) {
                    r.pass = false;
                    r.detail = "slice (" + std::to_string(m) + "," + std::to_string(m + 1) + "): " +
                               first_difference(Ls, Rs);
                }
            }
            r.millis = elapsed_ms(t0);
            rep.results.push_back(std::move(r));
        }
    }
    return rep;
}

Report check_prop54(int n, int N, MacdonaldTable& table) {
    return check_prop54(build_KA(n, N, table), table);
}

Report check_prop54(const KernelTruncation& KA, MacdonaldTable& table) {
    Report rep;
    auto t0 = std::chrono::steady_clock::now();
    int n = KA.n, N = KA.N;
    KernelTruncation F = build_0F0(n, N, table);
    // scale both sides by one common denominator so the symmetrizer runs
    // over Z[q,t] coefficients
    QtPoly D = common_denominator(KA.value);
    D = D * QtPoly::exact_div(common_denominator(F.value),
                              QtPoly::gcd(D, common_denominator(F.value)));
    XPolynomial L = apply_Uplus(cleared(KA.value, D), KA.xblock());
    XPolynomial R = cleared(F.value, D) * t_factorial(n);
    CheckResult r;
    r.name = "prop5.4 U+^(x) K_A = [n]_t! 0F0 (n=" + std::to_string(n) + ", N=" + std::to_string(N) + ")";
    for (int m = 0; m <= N && r.pass; ++m) {
        XPolynomial Ls = L.bidegree_slice(n, m, m);
        XPolynomial Rs = R.bidegree_slice(n, m, m);
        if (Ls != Rs) {
            r.pass = false;
            r.detail = "weight slice " + std::to_string(m) + ": " + first_difference(Ls, Rs);
        }
    }
    r.millis = elapsed_ms(t0);
    rep.results.push_back(std::move(r));
    return rep;
}

} // namespace qmacd
