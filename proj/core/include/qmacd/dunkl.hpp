#pragma once

/**
 * @file dunkl.hpp
 * @brief q-Dunkl operators D_i, the raising/lowering operators Phi_q and
 *        PhiHat_q, and the symmetric-function operator E_{0,m}.
 *
 * The D_i lower degree by one; their defining bracket always produces an
 * x_i-divisible polynomial, and a failed division here means an upstream
 * operator is broken, so it is reported as an error.
 */

#include "qmacd/hecke.hpp"

namespace qmacd {

/// D_i f per the defining bracket form
XPolynomial apply_Di(const XPolynomial& f, int i, const VarBlock& blk);

/// alternative route: x_i^{-1}(1 - t^{2n-i-1} I_{i,n-1}^{-1} Y_i)
XPolynomial apply_Di_alt(const XPolynomial& f, int i, const VarBlock& blk);

/// second alternative: x_i^{-1}(1 - t^{n-1} T_i^{-1}..T_{n-1}^{-1} omega T_1^{-1}..T_{i-1}^{-1})
XPolynomial apply_Di_alt2(const XPolynomial& f, int i, const VarBlock& blk);

/// conjugated route: t^{-n+i} T_i..T_{n-1} D_n T_{n-1}..T_i
XPolynomial apply_Di_conj(const XPolynomial& f, int i, const VarBlock& blk);

/// raising operator Phi_q = x_n T_{n-1}^{-1} ... T_1^{-1}
XPolynomial apply_phi(const XPolynomial& f, const VarBlock& blk);
/// i-indexed factorization t^{-n+i} T_{n-1}..T_i x_i T_{i-1}^{-1}..T_1^{-1}
XPolynomial apply_phi_form(const XPolynomial& f, int i, const VarBlock& blk);

/// lowering operator PhiHat_q = T_1 T_2 ... T_{n-1} D_n
XPolynomial apply_phihat(const XPolynomial& f, const VarBlock& blk);
/// i-indexed factorization t^{n-i} T_1..T_{i-1} D_i T_i^{-1}..T_{n-1}^{-1}
XPolynomial apply_phihat_form(const XPolynomial& f, int i, const VarBlock& blk);

/// (1-q) E_{0,m} f for f symmetric in x_m..x_n; contract error otherwise
XPolynomial apply_E0m(const XPolynomial& f, int m);

inline XPolynomial apply_Di(const XPolynomial& f, int i) { return apply_Di(f, i, VarBlock::whole(f)); }
inline XPolynomial apply_phi(const XPolynomial& f) { return apply_phi(f, VarBlock::whole(f)); }
inline XPolynomial apply_phihat(const XPolynomial& f) { return apply_phihat(f, VarBlock::whole(f)); }

} // namespace qmacd
