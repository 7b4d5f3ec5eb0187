#pragma once

/**
 * @file xpoly.hpp
 * @brief Sparse multivariate polynomials in x_1..x_n over Q(q,t).
 *
 * Exponent vectors are dense fixed-length int arrays; the term map is
 * ordered lexicographically on them, which fixes the iteration order for
 * deterministic output. No negative x-exponents: degree-lowering operators
 * perform exact division and report non-divisibility as an error.
 */

#include <vector>

#include "qmacd/composition.hpp"
#include "qmacd/qt_scalar.hpp"

namespace qmacd {

class XPolynomial {
public:
    using ExpVec = std::vector<int>;
    using TermMap = std::map<ExpVec, QtScalar>;

    XPolynomial() = default;
    explicit XPolynomial(int n) : n_(n) {}

    static XPolynomial constant(int n, const QtScalar& c);
    static XPolynomial monomial(int n, const ExpVec& exp, const QtScalar& c = QtScalar(1));
    static XPolynomial monomial(const Composition& eta, const QtScalar& c = QtScalar(1));
    /// the variable x_i (1-based)
    static XPolynomial variable(int n, int i);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int num_terms() const { return static_cast<int>(terms_.size()); }

    void add_term(const ExpVec& exp, const QtScalar& c);
    QtScalar coeff(const ExpVec& exp) const;

    int total_degree() const;
    bool is_homogeneous() const;

    XPolynomial operator-() const;
    XPolynomial operator+(const XPolynomial& o) const;
    XPolynomial operator-(const XPolynomial& o) const;
    XPolynomial operator*(const XPolynomial& o) const;
    XPolynomial operator*(const QtScalar& c) const;
    XPolynomial& operator+=(const XPolynomial& o) { return *this = *this + o; }
    XPolynomial& operator-=(const XPolynomial& o) { return *this = *this - o; }

    bool operator==(const XPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const XPolynomial& o) const { return !(*this == o); }

    /// multiply by x_i (1-based)
    XPolynomial times_xi(int i) const;

    /// the part of total degree d (in the given variable range, or all)
    XPolynomial degree_slice(int d) const;
    /// the part with degree dx in vars [0,split) and dy in vars [split,n)
    XPolynomial bidegree_slice(int split, int dx, int dy) const;

    /// exact division; throws std::domain_error when not exactly divisible
    static XPolynomial exact_div(const XPolynomial& f, const XPolynomial& g);

private:
    void check_exp(const ExpVec& exp) const;

    int n_ = 0;
    TermMap terms_;
};

inline XPolynomial operator*(const QtScalar& c, const XPolynomial& f) { return f * c; }

/// s_{ij} f: exponents at positions i,j (1-based) swapped termwise
XPolynomial apply_swap(const XPolynomial& f, int i, int j);

/// tau_i f: each term multiplied by q^{e_i}
XPolynomial apply_qshift(const XPolynomial& f, int i);

/// exact quotient f / x_i; error if some term lacks x_i
XPolynomial divide_by_xi(const XPolynomial& f, int i);

/// substitute x_i = t^{i-1}
QtScalar principal_specialize(const XPolynomial& f);

/// apply the bar involution to every coefficient (exponents unchanged)
XPolynomial bar_coeffs(const XPolynomial& f);

/// true iff f is invariant under s_i for every i in [lo, hi) (1-based)
bool is_symmetric_in(const XPolynomial& f, int lo, int hi);

/// monomial symmetric polynomial m_lambda in variables x_lo..x_hi (1-based,
/// inclusive) of an n-variable ring; other variables do not occur
XPolynomial monomial_symmetric(int n, const Composition& lambda, int lo, int hi);

} // namespace qmacd
