// Acceptance gate: one pass/fail line per criterion, exit nonzero on any
// failure. Everything is exact arithmetic in Q(q,t); no tolerances.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "qmacd/verify.hpp"

using namespace qmacd;

namespace {

int g_failures = 0;

void report(int num, const std::string& title, bool pass, double secs,
            const std::string& detail = "") {
    std::printf("criterion %d: %-52s %s  (%.1f s)\n", num, title.c_str(),
                pass ? "PASS" : "FAIL", secs);
    if (!pass) {
        ++g_failures;
        if (!detail.empty()) std::printf("  first failure: %s\n", detail.c_str());
    }
    std::fflush(stdout);
}

std::string first_failure(const Report& rep) {
    for (const auto& r : rep.results)
        if (!r.pass) return r.name + (r.detail.empty() ? "" : ": " + r.detail);
    return "";
}

VerifyOptions options(int degree) {
    VerifyOptions opt;
    opt.degree = degree;
    unsigned hw = std::thread::hardware_concurrency();
    opt.jobs = hw ? static_cast<int>(hw) : 2;
    return opt;
}

using Suite = Report (*)(int, const VerifyOptions&);

void run_suite_criterion(int num, const std::string& title, Suite suite, int degree) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    for (int n : {2, 3}) {
        Report r = suite(n, options(degree));
        rep.results.insert(rep.results.end(), r.results.begin(), r.results.end());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(num, title, rep.all_pass(), secs, first_failure(rep));
}

// criterion 4: the suite plus the two worked values at n=2
void run_raising_criterion() {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    for (int n : {2, 3}) {
        Report r = run_raising_suite(n, options(4));
        rep.results.insert(rep.results.end(), r.results.begin(), r.results.end());
    }

    MacdonaldTable table;
    {
        // Phi E_{(0,0)} = t^{-1} E_{(0,1)}
        XPolynomial lhs = apply_phi(table.nonsym_macdonald(Composition({0, 0})));
        XPolynomial rhs = table.nonsym_macdonald(Composition({0, 1}));
        rhs = rhs * QtScalar(QtMonomial{0, -1});
        CheckResult c;
        c.name = "worked value: raising operator on the constant";
        c.pass = (lhs == rhs);
        rep.results.push_back(c);
    }
    {
        // PhiHat E_{(0,1)} = t(1-qt)
        XPolynomial lhs = apply_phihat(table.nonsym_macdonald(Composition({0, 1})));
        QtPoly p;
        p.set_term(0, 1, 1);  //  t
        p.set_term(1, 2, -1); // -qt^2
        XPolynomial rhs(2);
        rhs.add_term({0, 0}, QtScalar(p));
        CheckResult c;
        c.name = "worked value: lowering operator on degree one";
        c.pass = (lhs == rhs);
        rep.results.push_back(c);
    }

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(4, "raising/lowering operators and eigenfunction shifts",
           rep.all_pass(), secs, first_failure(rep));
}

// criterion 6: symmetrizer proportionality constant and bar-invariance, |eta| <= 3
void run_symmetrizer_criterion() {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    auto show = [](const Composition& c) {
        std::string s = "(";
        for (int i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
        return s + ")";
    };
    for (int n : {2, 3}) {
        MacdonaldTable table;
        for (const Composition& eta : compositions_up_to_weight(n, 3)) {
            CheckResult c;
            c.name = "U+ E_eta = a_eta P (n=" + std::to_string(n) + ", eta=" + show(eta) + ")";
            XPolynomial lhs = apply_Uplus(table.nonsym_macdonald(eta));
            XPolynomial rhs = table.symmetric_macdonald(eta.sorted());
            rhs = rhs * table.a_eta(eta);
            c.pass = (lhs == rhs);
            rep.results.push_back(c);
        }
        for (const Composition& kappa : partitions_up_to_weight(n, 3)) {
            CheckResult c;
            c.name = "P_kappa bar-invariance (n=" + std::to_string(n) + ", kappa=" + show(kappa) + ")";
            XPolynomial P = table.symmetric_macdonald(kappa);
            c.pass = (bar_coeffs(P) == P);
            rep.results.push_back(c);
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(6, "symmetrizer constant and bar-invariant P polynomials",
           rep.all_pass(), secs, first_failure(rep));
}

// criterion 7: two CLI runs produce byte-identical JSON
void run_determinism_criterion() {
    auto t0 = std::chrono::steady_clock::now();
    const char* bin = std::getenv("QMACD_BIN");
    bool pass = false;
    std::string detail;
    if (!bin) {
        detail = "QMACD_BIN not set";
    } else {
        auto capture = [&](std::string& out) -> bool {
            std::string cmd = std::string(bin) +
                " kernel --n 2 --degree 3 --check a,b,c,uplus 2>/dev/null";
            FILE* pipe = popen(cmd.c_str(), "r");
            if (!pipe) return false;
            std::array<char, 4096> buf{};
            size_t got;
            while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
                out.append(buf.data(), got);
            int status = pclose(pipe);
            return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
        };
        std::string a, b;
        bool oka = capture(a), okb = capture(b);
        pass = oka && okb && !a.empty() && a == b;
        if (!pass) detail = !oka || !okb ? "CLI run failed" : "outputs differ";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(7, "byte-identical JSON across repeated kernel runs", pass, secs, detail);
}

} // namespace

int main() {
    run_suite_criterion(1, "affine Hecke operator relations", &run_hecke_suite, 4);
    run_suite_criterion(2, "Macdonald eigenstructure and action constants", &run_macdonald_suite, 4);
    run_suite_criterion(3, "q-Dunkl operator lemmas and commutativity", &run_dunkl_suite, 4);
    run_raising_criterion();
    run_suite_criterion(5, "kernel truncation operator properties", &run_kernel_suite, 4);
    run_symmetrizer_criterion();
    run_determinism_criterion();

    if (g_failures == 0) {
        std::printf("all 7 criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
