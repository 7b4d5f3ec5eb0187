#pragma once

/**
 * @file hecke.hpp
 * @brief Polynomial representation of the type-A affine Hecke algebra:
 *        T_i, T_i^{-1}, T_0, omega, Y_i, words T_w and the symmetrizer U+.
 *
 * Every operator takes a VarBlock describing which contiguous run of
 * variables it acts on; the kernel module uses this to run the same
 * operators on the x-block and the y-block of the doubled ring.
 * Indices i are 1-based within the block.
 */

#include <vector>

#include "qmacd/xpoly.hpp"

namespace qmacd {

struct VarBlock {
    int offset = 0; // 0-based first variable
    int count = 0;  // number of variables n in the block

    static VarBlock whole(const XPolynomial& f) { return {0, f.nvars()}; }
};

/// reduced decomposition of a permutation; letters in 1..n-1
struct ReducedWord {
    std::vector<int> letters;
};

/// canonical reduced word for a permutation given in one-line form (1-based)
ReducedWord reduced_word(const std::vector<int>& perm);

XPolynomial apply_Ti(const XPolynomial& f, int i, const VarBlock& blk);
XPolynomial apply_Ti_inv(const XPolynomial& f, int i, const VarBlock& blk);

/// independent route for T_i: the defining rational expression of the
/// Demazure-Lustig operator, evaluated by exact polynomial division
XPolynomial apply_Ti_rational(const XPolynomial& f, int i, const VarBlock& blk);

XPolynomial apply_omega(const XPolynomial& f, const VarBlock& blk);
XPolynomial apply_omega_inv(const XPolynomial& f, const VarBlock& blk);

/// T_0 via omega T_1 omega^{-1}
XPolynomial apply_T0(const XPolynomial& f, const VarBlock& blk);
/// T_0 from its defining rational expression, monomial by monomial
XPolynomial apply_T0_direct(const XPolynomial& f, const VarBlock& blk);
XPolynomial apply_T0_inv(const XPolynomial& f, const VarBlock& blk);

XPolynomial apply_Yi(const XPolynomial& f, int i, const VarBlock& blk);

/// T_{ij}^{-1}: the palindromic product of T^{-1}'s, i < j
XPolynomial apply_Tij_inv(const XPolynomial& f, int i, int j, const VarBlock& blk);
/// T_{ij}: the mirrored palindrome of plain T's, i < j
XPolynomial apply_Tij(const XPolynomial& f, int i, int j, const VarBlock& blk);
/// I_{ij}^{-1} = T_i^{-1}...T_j^{-1} T_j^{-1}...T_i^{-1}, i <= j
XPolynomial apply_Iij_inv(const XPolynomial& f, int i, int j, const VarBlock& blk);

XPolynomial apply_Tw(const XPolynomial& f, const ReducedWord& w, const VarBlock& blk);

/// U+ f = sum over S_n of T_w f
XPolynomial apply_Uplus(const XPolynomial& f, const VarBlock& blk);

// whole-polynomial conveniences
inline XPolynomial apply_Ti(const XPolynomial& f, int i) { return apply_Ti(f, i, VarBlock::whole(f)); }
inline XPolynomial apply_Ti_inv(const XPolynomial& f, int i) { return apply_Ti_inv(f, i, VarBlock::whole(f)); }
inline XPolynomial apply_omega(const XPolynomial& f) { return apply_omega(f, VarBlock::whole(f)); }
inline XPolynomial apply_omega_inv(const XPolynomial& f) { return apply_omega_inv(f, VarBlock::whole(f)); }
inline XPolynomial apply_T0(const XPolynomial& f) { return apply_T0(f, VarBlock::whole(f)); }
inline XPolynomial apply_Yi(const XPolynomial& f, int i) { return apply_Yi(f, i, VarBlock::whole(f)); }
inline XPolynomial apply_Tij_inv(const XPolynomial& f, int i, int j) { return apply_Tij_inv(f, i, j, VarBlock::whole(f)); }
inline XPolynomial apply_Iij_inv(const XPolynomial& f, int i, int j) { return apply_Iij_inv(f, i, j, VarBlock::whole(f)); }
inline XPolynomial apply_Uplus(const XPolynomial& f) { return apply_Uplus(f, VarBlock::whole(f)); }

} // namespace qmacd
