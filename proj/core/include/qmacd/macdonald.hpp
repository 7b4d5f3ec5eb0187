#pragma once

/**
 * @file macdonald.hpp
 * @brief Composition statistics (arm/leg data, eigenvalue exponents, the
 *        constants d, d', e) and non-symmetric / symmetric Macdonald
 *        polynomials with two independent construction routes.
 */

#include <mutex>
#include <optional>

#include "qmacd/hecke.hpp"

namespace qmacd {

struct CompositionStats {
    Composition eta;
    int n = 0;
    // per node (i,j), 1 <= j <= eta_i; arm[i] has eta_i entries
    std::vector<std::vector<int>> arm, armco, leg, legco;
    // eigenvalue t^{eta-bar_i} = q^{eta_i} t^{-c_i} as a Laurent monomial
    std::vector<QtMonomial> etabar;
    QtScalar d, dprime, e;
};

CompositionStats composition_stats(const Composition& eta, int n);

/// t^{delta_{i,eta}} = t^{etabar_i - etabar_{i+1}}, a Laurent monomial
QtMonomial delta(const Composition& eta, int i);

/// Memoizing builder for non-symmetric Macdonald polynomials E_eta(x;q,t).
/// The cache is shared across calls and safe for concurrent use.
class MacdonaldTable {
public:
    /// monic triangular joint eigenfunction of the Y_i, by the
    /// raising-operator / T_i recursion
    XPolynomial nonsym_macdonald(const Composition& eta);

    /// independent route: exact joint eigen-solve of the Y_i restricted to
    /// the monomials { x^nu : nu preceq eta } by Gaussian elimination
    XPolynomial nonsym_macdonald_oracle(const Composition& eta) const;

    /// symmetric Macdonald polynomial P_kappa via the d'-weighted sum of
    /// E_eta over distinct rearrangements of the partition kappa
    XPolynomial symmetric_macdonald(const Composition& kappa);

    /// proportionality constant in U+ E_eta = a_eta P_{eta+}
    QtScalar a_eta(const Composition& eta);

private:
    std::map<std::vector<int>, XPolynomial> cache_;
    mutable std::mutex mutex_;
};

/// coefficients (on E_eta, on E_{s_i eta}) of T_i E_eta per the three-case
/// action formula; the second coefficient is 0 when eta_i = eta_{i+1}
std::pair<QtScalar, QtScalar> ti_on_E(const Composition& eta, int i);
/// same for T_i^{-1} E_eta
std::pair<QtScalar, QtScalar> ti_inv_on_E(const Composition& eta, int i);

/// [n]_t! = prod_{i=1}^n (1-t^i)/(1-t)
QtScalar t_factorial(int n);

} // namespace qmacd
