#pragma once

/**
 * @file kernel.hpp
 * @brief Degree-truncated bilinear kernels K_A(x;y;q,t) and 0F0(x;y;q,t)
 *        on the doubled ring, and the graded verification of their
 *        defining operator properties.
 */

#include <string>

#include "qmacd/dunkl.hpp"
#include "qmacd/macdonald.hpp"

namespace qmacd {

struct KernelTruncation {
    int n = 0;
    int N = 0;             // weight bound |eta| <= N
    XPolynomial value;     // 2n variables: x_1..x_n, y_1..y_n
    std::map<std::vector<int>, QtScalar> per_eta; // A_eta = d/(d' e)

    VarBlock xblock() const { return {0, n}; }
    VarBlock yblock() const { return {n, n}; }
};

/// K_A truncated to |eta| <= N: sum A_eta E_eta(x;q,t) E_eta(y;q^{-1},t^{-1})
KernelTruncation build_KA(int n, int N, MacdonaldTable& table);

/// 0F0 truncated: sum over partitions of t^{b(kappa)} /
/// (d'_kappa P_kappa(1,..,t^{n-1})) P_kappa(x) P_kappa(y)
KernelTruncation build_0F0(int n, int N, MacdonaldTable& table);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail; // counterexample description when !pass
    double millis = 0.0;
};

struct Report {
    std::vector<CheckResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

/// barred operator acting on the y-block: bar . op . bar
XPolynomial conjugate_bar_y(const KernelTruncation& K, const XPolynomial& f,
                            const std::function<XPolynomial(const XPolynomial&, const VarBlock&)>& op);

/// Theorem 5.2 properties (a), (b), (c) with graded truncation accounting
Report check_theorem52(const KernelTruncation& K, const std::string& which = "abc");

/// U+^(x) K_A = [n]_t! 0F0, exactly, per weight slice
Report check_prop54(int n, int N, MacdonaldTable& table);

/// same check, reusing an already-built truncated kernel
Report check_prop54(const KernelTruncation& KA, MacdonaldTable& table);

} // namespace qmacd
