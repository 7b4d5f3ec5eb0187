#pragma once

/**
 * @file verify.hpp
 * @brief Machine-checkable suites for the operator identities: Hecke
 *        relations, Macdonald eigenstructure, q-Dunkl lemmas, the
 *        raising/lowering propositions and the kernel theorems.
 *
 * All degree-preserving identities are checked by applying both sides to
 * every monomial of degree <= options.degree, which verifies them on that
 * whole subspace. Identities with x_i^{-1} factors are checked in cleared
 * polynomial form on multiples of x_n.
 */

#include <cstdint>

#include "qmacd/kernel.hpp"

namespace qmacd {

struct VerifyOptions {
    int degree = 4;     // monomial sweep degree bound
    int sample = 0;     // 0 = exhaustive; otherwise cap the number of
                        // monomials per identity, drawn with the seed below
    std::uint64_t seed = 0;
    int jobs = 1;
};

Report run_hecke_suite(int n, const VerifyOptions& opt = {});
Report run_macdonald_suite(int n, const VerifyOptions& opt = {});
Report run_dunkl_suite(int n, const VerifyOptions& opt = {});
Report run_raising_suite(int n, const VerifyOptions& opt = {});
/// Theorem 5.2 + Prop 5.4 at truncation N = opt.degree, plus Lemma 5.3
Report run_kernel_suite(int n, const VerifyOptions& opt = {});

} // namespace qmacd
