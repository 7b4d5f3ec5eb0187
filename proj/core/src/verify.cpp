#include "qmacd/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "qmacd/format.hpp"

namespace qmacd {

namespace {

using Op = std::function<XPolynomial(const XPolynomial&)>;
using Task = std::function<CheckResult()>;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string clip(std::string s) {
    if (s.size() > 240) {
        s.resize(240);
        s += "...";
    }
    return s;
}

QtScalar tpow(int k) { return QtScalar(QtMonomial(0, k)); }
QtScalar qtpow(int a, int b) { return QtScalar(QtMonomial(a, b)); }

std::vector<XPolynomial> monomial_sweep(int n, const VerifyOptions& opt) {
    std::vector<XPolynomial> out;
    for (const auto& eta : compositions_up_to_weight(n, opt.degree))
        out.push_back(XPolynomial::monomial(eta));
    if (opt.sample > 0 && static_cast<int>(out.size()) > opt.sample) {
        std::mt19937_64 rng(opt.seed);
        std::shuffle(out.begin(), out.end(), rng);
        out.resize(static_cast<size_t>(opt.sample));
    }
    return out;
}

/// lhs(f) == rhs(f) for every f in fs; reports the first counterexample
CheckResult check_each(const std::string& name, const std::vector<XPolynomial>& fs,
                       const Op& lhs, const Op& rhs) {
    auto t0 = Clock::now();
    CheckResult r;
    r.name = name;
    try {
        for (const auto& f : fs) {
            XPolynomial a = lhs(f);
            XPolynomial b = rhs(f);
            if (a != b) {
                r.pass = false;
                r.detail = clip("f = " + to_string(f) + ": lhs = " + to_string(a) +
                                ", rhs = " + to_string(b));
                break;
            }
        }
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = clip(std::string("exception: ") + e.what());
    }
    r.millis = ms_since(t0);
    return r;
}

/// run a custom check body with uniform timing and exception capture
CheckResult check_body(const std::string& name,
                       const std::function<void(CheckResult&)>& body) {
    auto t0 = Clock::now();
    CheckResult r;
    r.name = name;
    try {
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = clip(std::string("exception: ") + e.what());
    }
    r.millis = ms_since(t0);
    return r;
}

Report run_tasks(const std::vector<Task>& tasks, int jobs) {
    Report rep;
    rep.results.resize(tasks.size());
    jobs = std::max(1, jobs);
    if (jobs == 1 || tasks.size() <= 1) {
        for (size_t k = 0; k < tasks.size(); ++k) rep.results[k] = tasks[k]();
        return rep;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            rep.results[k] = tasks[k]();
        }
    };
    std::vector<std::thread> pool;
    int width = std::min<int>(jobs, static_cast<int>(tasks.size()));
    pool.reserve(static_cast<size_t>(width));
    for (int j = 0; j < width; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return rep;
}

std::string tag(int n, const std::string& s) {
    return "n=" + std::to_string(n) + " " + s;
}

} // namespace

Report run_hecke_suite(int n, const VerifyOptions& opt) {
    VarBlock blk{0, n};
    auto fs = monomial_sweep(n, opt);
    QtScalar one(1), t = QtScalar::t(), tinv = tpow(-1);
    std::vector<Task> tasks;

    auto xi = [n](const XPolynomial& f, int i) { return f.times_xi(i); };

    for (int i = 1; i <= n - 1; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "quadratic relation of T_" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_Ti(apply_Ti(f, i, blk), i, blk); },
                              [=](const XPolynomial& f) { return apply_Ti(f, i, blk) * (t - one) + f * t; });
        });
        tasks.push_back([=] {
            return check_each(tag(n, "T_" + std::to_string(i) + " inverse"), fs,
                              [=](const XPolynomial& f) { return apply_Ti(apply_Ti_inv(f, i, blk), i, blk); },
                              [](const XPolynomial& f) { return f; });
        });
        tasks.push_back([=] {
            return check_each(tag(n, "T_" + std::to_string(i) + " agrees with rational route"), fs,
                              [=](const XPolynomial& f) { return apply_Ti(f, i, blk); },
                              [=](const XPolynomial& f) { return apply_Ti_rational(f, i, blk); });
        });
    }
    for (int i = 1; i <= n - 2; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "braid relation at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) {
                                  return apply_Ti(apply_Ti(apply_Ti(f, i, blk), i + 1, blk), i, blk);
                              },
                              [=](const XPolynomial& f) {
                                  return apply_Ti(apply_Ti(apply_Ti(f, i + 1, blk), i, blk), i + 1, blk);
                              });
        });
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            tasks.push_back([=] {
                return check_each(tag(n, "[T_" + std::to_string(i) + ", T_" + std::to_string(j) + "] = 0"), fs,
                                  [=](const XPolynomial& f) { return apply_Ti(apply_Ti(f, j, blk), i, blk); },
                                  [=](const XPolynomial& f) { return apply_Ti(apply_Ti(f, i, blk), j, blk); });
            });
        }
    for (int i = 2; i <= n - 1; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "omega T_" + std::to_string(i) + " = T_" + std::to_string(i - 1) + " omega"), fs,
                              [=](const XPolynomial& f) { return apply_omega(apply_Ti(f, i, blk), blk); },
                              [=](const XPolynomial& f) { return apply_Ti(apply_omega(f, blk), i - 1, blk); });
        });
    }
    tasks.push_back([=] {
        return check_each(tag(n, "omega inverse"), fs,
                          [=](const XPolynomial& f) { return apply_omega_inv(apply_omega(f, blk), blk); },
                          [](const XPolynomial& f) { return f; });
    });
    tasks.push_back([=] {
        return check_each(tag(n, "omega T_1 = T_0 omega"), fs,
                          [=](const XPolynomial& f) { return apply_omega(apply_Ti(f, 1, blk), blk); },
                          [=](const XPolynomial& f) { return apply_T0(apply_omega(f, blk), blk); });
    });
    tasks.push_back([=] {
        return check_each(tag(n, "quadratic relation of T_0"), fs,
                          [=](const XPolynomial& f) { return apply_T0(apply_T0(f, blk), blk); },
                          [=](const XPolynomial& f) { return apply_T0(f, blk) * (t - one) + f * t; });
    });
    tasks.push_back([=] {
        return check_each(tag(n, "T_0 conjugation route = direct route"), fs,
                          [=](const XPolynomial& f) { return apply_T0(f, blk); },
                          [=](const XPolynomial& f) { return apply_T0_direct(f, blk); });
    });
    tasks.push_back([=] {
        return check_each(tag(n, "T_0 inverse"), fs,
                          [=](const XPolynomial& f) { return apply_T0(apply_T0_inv(f, blk), blk); },
                          [](const XPolynomial& f) { return f; });
    });

    // commutation identities of T_i^{+-1} and omega with multiplication by x
    for (int i = 1; i <= n - 1; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "T_i^{-1} x_{i+1} = t^{-1} x_i T_i at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_Ti_inv(xi(f, i + 1), i, blk); },
                              [=](const XPolynomial& f) { return xi(apply_Ti(f, i, blk), i) * tinv; });
        });
        tasks.push_back([=] {
            return check_each(tag(n, "T_i^{-1} x_i = x_{i+1} T_i^{-1} + (t^{-1}-1) x_i at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_Ti_inv(xi(f, i), i, blk); },
                              [=](const XPolynomial& f) {
                                  return xi(apply_Ti_inv(f, i, blk), i + 1) + xi(f, i) * (tinv - one);
                              });
        });
        tasks.push_back([=] {
            return check_each(tag(n, "T_i x_i = t x_{i+1} T_i^{-1} at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_Ti(xi(f, i), i, blk); },
                              [=](const XPolynomial& f) { return xi(apply_Ti_inv(f, i, blk), i + 1) * t; });
        });
        tasks.push_back([=] {
            return check_each(tag(n, "T_i x_{i+1} = x_i T_i + (t-1) x_{i+1} at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_Ti(xi(f, i + 1), i, blk); },
                              [=](const XPolynomial& f) {
                                  return xi(apply_Ti(f, i, blk), i) + xi(f, i + 1) * (t - one);
                              });
        });
        tasks.push_back([=] {
            return check_each(tag(n, "omega x_{i+1} = x_i omega at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_omega(xi(f, i + 1), blk); },
                              [=](const XPolynomial& f) { return xi(apply_omega(f, blk), i); });
        });
    }
    tasks.push_back([=] {
        return check_each(tag(n, "omega x_1 = q x_n omega"), fs,
                          [=](const XPolynomial& f) { return apply_omega(xi(f, 1), blk); },
                          [=](const XPolynomial& f) { return xi(apply_omega(f, blk), n) * qtpow(1, 0); });
    });

    // Y-relations
    for (int i = 1; i <= n - 1; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "T_i Y_{i+1} T_i = t Y_i at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) {
                                  return apply_Ti(apply_Yi(apply_Ti(f, i, blk), i + 1, blk), i, blk);
                              },
                              [=](const XPolynomial& f) { return apply_Yi(f, i, blk) * t; });
        });
        tasks.push_back([=] {
            return check_each(tag(n, "T_i^{-1} Y_{i+1} = (t^{-1}-1) Y_{i+1} + Y_i T_i^{-1} at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_Ti_inv(apply_Yi(f, i + 1, blk), i, blk); },
                              [=](const XPolynomial& f) {
                                  return apply_Yi(f, i + 1, blk) * (tinv - one) +
                                         apply_Yi(apply_Ti_inv(f, i, blk), i, blk);
                              });
        });
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            tasks.push_back([=] {
                return check_each(tag(n, "[T_" + std::to_string(i) + ", Y_" + std::to_string(j) + "] = 0"), fs,
                                  [=](const XPolynomial& f) { return apply_Ti(apply_Yi(f, j, blk), i, blk); },
                                  [=](const XPolynomial& f) { return apply_Yi(apply_Ti(f, i, blk), j, blk); });
            });
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            tasks.push_back([=] {
                return check_each(tag(n, "[Y_" + std::to_string(i) + ", Y_" + std::to_string(j) + "] = 0"), fs,
                                  [=](const XPolynomial& f) { return apply_Yi(apply_Yi(f, j, blk), i, blk); },
                                  [=](const XPolynomial& f) { return apply_Yi(apply_Yi(f, i, blk), j, blk); });
            });
        }

    // commutation of Y_i with multiplication by x_n
    for (int i = 1; i <= n - 1; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "Y_i x_n commutation at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_Yi(xi(f, n), i, blk); },
                              [=](const XPolynomial& f) {
                                  // x_n Y_i + t^{-n+i}(1-t) x_n T_i..T_{n-2} omega T_1^{-1}..T_{i-1}^{-1}
                                  XPolynomial g = f;
                                  for (int j = i - 1; j >= 1; --j) g = apply_Ti_inv(g, j, blk);
                                  g = apply_omega(g, blk);
                                  for (int j = n - 2; j >= i; --j) g = apply_Ti(g, j, blk);
                                  return xi(apply_Yi(f, i, blk), n) +
                                         xi(g, n) * (tpow(i - n) * (one - t));
                              });
        });
    }
    tasks.push_back([=] {
        return check_each(tag(n, "Y_n x_n = q t^{-n+1} x_n omega T_1..T_{n-1}"), fs,
                          [=](const XPolynomial& f) { return apply_Yi(xi(f, n), n, blk); },
                          [=](const XPolynomial& f) {
                              XPolynomial g = f;
                              for (int j = n - 1; j >= 1; --j) g = apply_Ti(g, j, blk);
                              g = apply_omega(g, blk);
                              return xi(g, n) * qtpow(1, 1 - n);
                          });
    });

    // interval operators: inversion and the telescoping expansion of I_{ij}^{-1}
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n; ++j) {
            tasks.push_back([=] {
                return check_each(tag(n, "T_{ij} T_{ij}^{-1} = id at (" + std::to_string(i) + "," + std::to_string(j) + ")"), fs,
                                  [=](const XPolynomial& f) { return apply_Tij(apply_Tij_inv(f, i, j, blk), i, j, blk); },
                                  [](const XPolynomial& f) { return f; });
            });
        }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) {
            if (i >= j) continue; // expansion stated for i < j
            tasks.push_back([=] {
                return check_each(tag(n, "I_{ij}^{-1} expansion at (" + std::to_string(i) + "," + std::to_string(j) + ")"), fs,
                                  [=](const XPolynomial& f) { return apply_Iij_inv(f, i, j, blk); },
                                  [=](const XPolynomial& f) {
                                      XPolynomial acc = f * tpow(i - j - 1);
                                      for (int p = i + 1; p <= j + 1; ++p)
                                          acc += apply_Tij_inv(f, i, p, blk) * (tpow(p - j - 1) * (tinv - one));
                                      return acc;
                                  });
            });
        }

    return run_tasks(tasks, opt.jobs);
}

Report run_macdonald_suite(int n, const VerifyOptions& opt) {
    auto table = std::make_shared<MacdonaldTable>();
    auto etas = std::make_shared<std::vector<Composition>>(compositions_up_to_weight(n, opt.degree));
    QtScalar one(1);
    std::vector<Task> tasks;

    tasks.push_back([=] {
        return check_body(tag(n, "E_eta is a joint Y-eigenfunction"), [&](CheckResult& r) {
            for (const auto& eta : *etas) {
                XPolynomial E = table->nonsym_macdonald(eta);
                auto st = composition_stats(eta, n);
                for (int i = 1; i <= n; ++i) {
                    if (apply_Yi(E, i) != E * QtScalar(st.etabar[static_cast<size_t>(i - 1)])) {
                        r.pass = false;
                        r.detail = clip("eta = " + to_string(XPolynomial::monomial(eta)) +
                                        ", i = " + std::to_string(i));
                        return;
                    }
                }
            }
        });
    });
    tasks.push_back([=] {
        return check_body(tag(n, "E_eta is monic and triangular"), [&](CheckResult& r) {
            for (const auto& eta : *etas) {
                XPolynomial E = table->nonsym_macdonald(eta);
                if (E.coeff(eta.entries()) != one) {
                    r.pass = false;
                    r.detail = clip("leading coefficient != 1 at eta = " +
                                    to_string(XPolynomial::monomial(eta)));
                    return;
                }
                for (const auto& [e, c] : E.terms()) {
                    Composition nu(e);
                    if (nu == eta) continue;
                    if (nu.weight() != eta.weight() || !prec_order(nu, eta)) {
                        r.pass = false;
                        r.detail = clip("non-triangular term " + to_string(XPolynomial::monomial(nu)) +
                                        " in E at eta = " + to_string(XPolynomial::monomial(eta)));
                        return;
                    }
                }
            }
        });
    });
    tasks.push_back([=] {
        return check_body(tag(n, "recursion route matches eigen-solver oracle"), [&](CheckResult& r) {
            for (const auto& eta : *etas) {
                if (table->nonsym_macdonald(eta) != table->nonsym_macdonald_oracle(eta)) {
                    r.pass = false;
                    r.detail = clip("mismatch at eta = " + to_string(XPolynomial::monomial(eta)));
                    return;
                }
            }
        });
    });
    tasks.push_back([=] {
        return check_body(tag(n, "T_i action constants on E_eta"), [&](CheckResult& r) {
            for (const auto& eta : *etas) {
                XPolynomial E = table->nonsym_macdonald(eta);
                for (int i = 1; i <= n - 1; ++i) {
                    std::vector<int> se = eta.entries();
                    std::swap(se[static_cast<size_t>(i - 1)], se[static_cast<size_t>(i)]);
                    auto [c1, c2] = ti_on_E(eta, i);
                    XPolynomial rhs = E * c1;
                    if (!c2.is_zero()) rhs += table->nonsym_macdonald(Composition(se)) * c2;
                    if (apply_Ti(E, i) != rhs) {
                        r.pass = false;
                        r.detail = clip("T action at eta = " + to_string(XPolynomial::monomial(eta)) +
                                        ", i = " + std::to_string(i));
                        return;
                    }
                    auto [d1, d2] = ti_inv_on_E(eta, i);
                    XPolynomial rhs2 = E * d1;
                    if (!d2.is_zero()) rhs2 += table->nonsym_macdonald(Composition(se)) * d2;
                    if (apply_Ti_inv(E, i) != rhs2) {
                        r.pass = false;
                        r.detail = clip("T^{-1} action at eta = " + to_string(XPolynomial::monomial(eta)) +
                                        ", i = " + std::to_string(i));
                        return;
                    }
                }
            }
        });
    });
    tasks.push_back([=] {
        return check_body(tag(n, "d, d', e ratio identities"), [&](CheckResult& r) {
            for (const auto& eta : *etas) {
                auto st = composition_stats(eta, n);
                // raising: Phi eta = (eta_2, ..., eta_n, eta_1 + 1)
                std::vector<int> pe(static_cast<size_t>(n));
                for (int i = 1; i < n; ++i) pe[static_cast<size_t>(i - 1)] = eta[i];
                pe[static_cast<size_t>(n - 1)] = eta[0] + 1;
                auto stp = composition_stats(Composition(pe), n);
                QtMonomial e1 = st.etabar[0];
                QtScalar big = one - QtScalar(QtMonomial(e1.qexp + 1, e1.texp + n));
                QtScalar small = one - QtScalar(QtMonomial(e1.qexp + 1, e1.texp + n - 1));
                if (stp.d / st.d != big || stp.e / st.e != big || stp.dprime / st.dprime != small) {
                    r.pass = false;
                    r.detail = clip("raising ratios at eta = " + to_string(XPolynomial::monomial(eta)));
                    return;
                }
                for (int i = 1; i <= n - 1; ++i) {
                    std::vector<int> se = eta.entries();
                    std::swap(se[static_cast<size_t>(i - 1)], se[static_cast<size_t>(i)]);
                    auto sts = composition_stats(Composition(se), n);
                    if (sts.e != st.e) {
                        r.pass = false;
                        r.detail = clip("e not swap-invariant at eta = " +
                                        to_string(XPolynomial::monomial(eta)) + ", i = " + std::to_string(i));
                        return;
                    }
                    if (eta[i - 1] <= eta[i]) continue;
                    QtMonomial dl = delta(eta, i);
                    QtScalar td(dl), tdp(QtMonomial(dl.qexp, dl.texp + 1)), tdm(QtMonomial(dl.qexp, dl.texp - 1));
                    if (sts.d / st.d != (one - tdp) / (one - td) ||
                        sts.dprime / st.dprime != (one - td) / (one - tdm)) {
                        r.pass = false;
                        r.detail = clip("swap ratios at eta = " + to_string(XPolynomial::monomial(eta)) +
                                        ", i = " + std::to_string(i));
                        return;
                    }
                }
            }
        });
    });

    int wsym = std::min(opt.degree, 3);
    tasks.push_back([=] {
        return check_body(tag(n, "U+ E_eta = a_eta P_{eta+}"), [&](CheckResult& r) {
            for (const auto& eta : compositions_up_to_weight(n, wsym)) {
                XPolynomial lhs = apply_Uplus(table->nonsym_macdonald(eta));
                XPolynomial rhs = table->symmetric_macdonald(eta.sorted()) * table->a_eta(eta);
                if (lhs != rhs) {
                    r.pass = false;
                    r.detail = clip("eta = " + to_string(XPolynomial::monomial(eta)));
                    return;
                }
            }
        });
    });
    tasks.push_back([=] {
        return check_body(tag(n, "P_kappa is bar-invariant"), [&](CheckResult& r) {
            for (const auto& kappa : partitions_up_to_weight(n, wsym)) {
                XPolynomial P = table->symmetric_macdonald(kappa);
                if (bar_coeffs(P) != P) {
                    r.pass = false;
                    r.detail = clip("kappa = " + to_string(XPolynomial::monomial(kappa)));
                    return;
                }
            }
        });
    });

    return run_tasks(tasks, opt.jobs);
}

Report run_dunkl_suite(int n, const VerifyOptions& opt) {
    VarBlock blk{0, n};
    auto fs = monomial_sweep(n, opt);
    QtScalar one(1), t = QtScalar::t(), tinv = tpow(-1), q = QtScalar::q();
    std::vector<Task> tasks;

    for (int i = 1; i <= n; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "D_" + std::to_string(i) + " route agreement (defining / interval / word / conjugated)"), fs,
                              [=](const XPolynomial& f) { return apply_Di(f, i, blk); },
                              [=](const XPolynomial& f) {
                                  XPolynomial a = apply_Di_alt(f, i, blk);
                                  XPolynomial b = apply_Di_alt2(f, i, blk);
                                  XPolynomial c = apply_Di_conj(f, i, blk);
                                  if (a != b || b != c)
                                      throw std::runtime_error("alternative D_i routes disagree");
                                  return a;
                              });
        });
    }

    for (int i = 1; i <= n - 1; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "T_i D_{i+1} = t D_i T_i^{-1} at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_Ti(apply_Di(f, i + 1, blk), i, blk); },
                              [=](const XPolynomial& f) { return apply_Di(apply_Ti_inv(f, i, blk), i, blk) * t; });
        });
        tasks.push_back([=] {
            return check_each(tag(n, "T_i D_i = D_{i+1} T_i + (t-1) D_i at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_Ti(apply_Di(f, i, blk), i, blk); },
                              [=](const XPolynomial& f) {
                                  return apply_Di(apply_Ti(f, i, blk), i + 1, blk) +
                                         apply_Di(f, i, blk) * (t - one);
                              });
        });
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            tasks.push_back([=] {
                return check_each(tag(n, "[T_" + std::to_string(i) + ", D_" + std::to_string(j) + "] = 0"), fs,
                                  [=](const XPolynomial& f) { return apply_Ti(apply_Di(f, j, blk), i, blk); },
                                  [=](const XPolynomial& f) { return apply_Di(apply_Ti(f, i, blk), j, blk); });
            });
        }
    }

    for (int i = 1; i <= n - 1; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "omega D_{i+1} = D_i omega at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_omega(apply_Di(f, i + 1, blk), blk); },
                              [=](const XPolynomial& f) { return apply_Di(apply_omega(f, blk), i, blk); });
        });
    }
    tasks.push_back([=] {
        return check_each(tag(n, "q omega D_1 = D_n omega"), fs,
                          [=](const XPolynomial& f) { return apply_omega(apply_Di(f, 1, blk), blk) * q; },
                          [=](const XPolynomial& f) { return apply_Di(apply_omega(f, blk), n, blk); });
    });

    // affine generator relations
    tasks.push_back([=] {
        return check_each(tag(n, "T_0 D_1 = q^{-1} t D_n T_0^{-1}"), fs,
                          [=](const XPolynomial& f) { return apply_T0(apply_Di(f, 1, blk), blk); },
                          [=](const XPolynomial& f) {
                              return apply_Di(apply_T0_inv(f, blk), n, blk) * qtpow(-1, 1);
                          });
    });
    tasks.push_back([=] {
        return check_each(tag(n, "T_0 D_n = q D_1 T_0 + (t-1) D_n"), fs,
                          [=](const XPolynomial& f) { return apply_T0(apply_Di(f, n, blk), blk); },
                          [=](const XPolynomial& f) {
                              return apply_Di(apply_T0(f, blk), 1, blk) * q +
                                     apply_Di(f, n, blk) * (t - one);
                          });
    });
    for (int i = 2; i <= n - 1; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "[T_0, D_" + std::to_string(i) + "] = 0"), fs,
                              [=](const XPolynomial& f) { return apply_T0(apply_Di(f, i, blk), blk); },
                              [=](const XPolynomial& f) { return apply_Di(apply_T0(f, blk), i, blk); });
        });
    }

    // commutators of D and Y
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            tasks.push_back([=] {
                return check_each(tag(n, "[D_" + std::to_string(i) + ", Y_" + std::to_string(j) + "] commutator formula"), fs,
                                  [=](const XPolynomial& f) {
                                      return apply_Di(apply_Yi(f, j, blk), i, blk) -
                                             apply_Yi(apply_Di(f, i, blk), j, blk);
                                  },
                                  [=](const XPolynomial& f) {
                                      if (i < j) {
                                          XPolynomial g = apply_Tij(apply_Di(f, j, blk), i, j, blk);
                                          return apply_Yi(g, j, blk) * (tpow(i - j) * (one - t));
                                      }
                                      XPolynomial g = apply_Tij(apply_Di(f, i, blk), j, i, blk);
                                      return apply_Yi(g, i, blk) * (tpow(j - i) * (one - t));
                                  });
            });
        }
    for (int i = 1; i <= n; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "D_i Y_i - q Y_i D_i expansion at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) {
                                  return apply_Di(apply_Yi(f, i, blk), i, blk) -
                                         apply_Yi(apply_Di(f, i, blk), i, blk) * q;
                              },
                              [=](const XPolynomial& f) {
                                  XPolynomial acc(f.nvars());
                                  for (int p = i + 1; p <= n; ++p) {
                                      XPolynomial g = apply_Tij(apply_Di(f, p, blk), i, p, blk);
                                      acc += apply_Yi(g, p, blk) * tpow(i - p);
                                  }
                                  acc = acc * (t - one);
                                  XPolynomial acc2(f.nvars());
                                  for (int p = 1; p <= i - 1; ++p)
                                      acc2 += apply_Tij(apply_Di(f, i, blk), p, i, blk) * tpow(p - i);
                                  if (i > 1) acc += apply_Yi(acc2, i, blk) * (q * (t - one));
                                  return acc;
                              });
        });
    }

    // cleared-form identities: x_i [D_i, Y_n] and the x_n^{-1} commutators
    for (int i = 1; i <= n - 1; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "x_i [D_i, Y_n] rearrangement at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) {
                                  return (apply_Di(apply_Yi(f, n, blk), i, blk) -
                                          apply_Yi(apply_Di(f, i, blk), n, blk)).times_xi(i);
                              },
                              [=](const XPolynomial& f) {
                                  XPolynomial u = f - apply_Yi(f, n, blk) * tpow(n - 1);
                                  XPolynomial g = apply_Tij_inv(apply_Yi(u, i, blk), i, n, blk);
                                  return g * (tpow(n - i) * (tinv - one));
                              });
        });
        tasks.push_back([=] {
            // [D_i, x_n^{-1}] applied to x_n g, cleared by x_i x_n
            return check_each(tag(n, "D_i and x_n^{-1} commutator (cleared) at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& g) {
                                  return apply_Di(g, i, blk).times_xi(n).times_xi(i) -
                                         apply_Di(g.times_xi(n), i, blk).times_xi(i);
                              },
                              [=](const XPolynomial& g) {
                                  XPolynomial h = apply_Tij_inv(apply_Yi(g.times_xi(n), i, blk), i, n, blk);
                                  return h * (tpow(2 * n - i - 1) * (tinv - one));
                              });
        });
        tasks.push_back([=] {
            // Y_i x_n^{-1} expansion applied to x_n g, cleared by x_i x_n
            return check_each(tag(n, "Y_i and x_n^{-1} commutator (cleared) at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& g) {
                                  return apply_Yi(g, i, blk).times_xi(n).times_xi(i);
                              },
                              [=](const XPolynomial& g) {
                                  XPolynomial h = apply_Yi(g.times_xi(n), i, blk);
                                  return h.times_xi(i) +
                                         apply_Tij_inv(h, i, n, blk).times_xi(n) *
                                             (tpow(n - i - 1) * (t - one));
                              });
        });
        tasks.push_back([=] {
            // [T_{in}^{-1}, x_n^{-1}] expansion applied to x_n g, cleared by x_i..x_n
            return check_each(tag(n, "T_{in}^{-1} and x_n^{-1} commutator (cleared) at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& g) {
                                  auto x_range = [&](const XPolynomial& h, int skip) {
                                      XPolynomial out = h;
                                      for (int k = i; k <= n; ++k)
                                          if (k != skip) out = out.times_xi(k);
                                      return out;
                                  };
                                  return x_range(apply_Tij_inv(g, i, n, blk), 0) -
                                         x_range(apply_Tij_inv(g.times_xi(n), i, n, blk), n);
                              },
                              [=](const XPolynomial& g) {
                                  auto x_range = [&](const XPolynomial& h, int skip) {
                                      XPolynomial out = h;
                                      for (int k = i; k <= n; ++k)
                                          if (k != skip) out = out.times_xi(k);
                                      return out;
                                  };
                                  XPolynomial f = g.times_xi(n);
                                  XPolynomial h = apply_Tij_inv(f, i, n, blk);
                                  XPolynomial acc = x_range(h, i) - x_range(h, n);
                                  // middle term: pushing x_n^{-1} through the single T_{n-1}
                                  // letter of T_{in}^{-1} leaves the word I_{i,n-2}^{-1}
                                  // (empty when i = n-1)
                                  XPolynomial mid = i <= n - 2 ? apply_Iij_inv(f, i, n - 2, blk) : f;
                                  acc += x_range(mid, n) * (tinv - one);
                                  for (int p = i + 1; p <= n - 1; ++p) {
                                      // word T_i^{-1}..T_{p-2}^{-1} T_p^{-1}..T_{n-1}^{-1}..T_i^{-1},
                                      // i.e. the T_{in}^{-1} palindrome with letter p-1 dropped
                                      // from the ascending half; rightmost letter applies first
                                      std::vector<int> letters;
                                      for (int k = i; k <= p - 2; ++k) letters.push_back(k);
                                      for (int k = p; k <= n - 1; ++k) letters.push_back(k);
                                      for (int k = n - 2; k >= i; --k) letters.push_back(k);
                                      XPolynomial w = f;
                                      for (auto it = letters.rbegin(); it != letters.rend(); ++it)
                                          w = apply_Ti_inv(w, *it, blk);
                                      acc += x_range(w, p) * (tinv - one);
                                  }
                                  return acc;
                              });
        });
    }

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            tasks.push_back([=] {
                return check_each(tag(n, "[D_" + std::to_string(i) + ", D_" + std::to_string(j) + "] = 0"), fs,
                                  [=](const XPolynomial& f) { return apply_Di(apply_Di(f, j, blk), i, blk); },
                                  [=](const XPolynomial& f) { return apply_Di(apply_Di(f, i, blk), j, blk); });
            });
        }

    return run_tasks(tasks, opt.jobs);
}

Report run_raising_suite(int n, const VerifyOptions& opt) {
    VarBlock blk{0, n};
    auto fs = monomial_sweep(n, opt);
    auto table = std::make_shared<MacdonaldTable>();
    QtScalar q = QtScalar::q();
    std::vector<Task> tasks;

    for (int j = 1; j <= n - 1; ++j) {
        tasks.push_back([=] {
            return check_each(tag(n, "Y_j Phi = Phi Y_{j+1} at j=" + std::to_string(j)), fs,
                              [=](const XPolynomial& f) { return apply_Yi(apply_phi(f, blk), j, blk); },
                              [=](const XPolynomial& f) { return apply_phi(apply_Yi(f, j + 1, blk), blk); });
        });
    }
    tasks.push_back([=] {
        return check_each(tag(n, "Y_n Phi = q Phi Y_1"), fs,
                          [=](const XPolynomial& f) { return apply_Yi(apply_phi(f, blk), n, blk); },
                          [=](const XPolynomial& f) { return apply_phi(apply_Yi(f, 1, blk), blk) * q; });
    });
    for (int j = 2; j <= n; ++j) {
        tasks.push_back([=] {
            return check_each(tag(n, "Y_j PhiHat = PhiHat Y_{j-1} at j=" + std::to_string(j)), fs,
                              [=](const XPolynomial& f) { return apply_Yi(apply_phihat(f, blk), j, blk); },
                              [=](const XPolynomial& f) { return apply_phihat(apply_Yi(f, j - 1, blk), blk); });
        });
    }
    tasks.push_back([=] {
        return check_each(tag(n, "Y_1 PhiHat = q^{-1} PhiHat Y_n"), fs,
                          [=](const XPolynomial& f) { return apply_Yi(apply_phihat(f, blk), 1, blk); },
                          [=](const XPolynomial& f) {
                              return apply_phihat(apply_Yi(f, n, blk), blk) * qtpow(-1, 0);
                          });
    });
    for (int i = 1; i <= n; ++i) {
        tasks.push_back([=] {
            return check_each(tag(n, "Phi factorization at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_phi(f, blk); },
                              [=](const XPolynomial& f) { return apply_phi_form(f, i, blk); });
        });
        tasks.push_back([=] {
            return check_each(tag(n, "PhiHat factorization at i=" + std::to_string(i)), fs,
                              [=](const XPolynomial& f) { return apply_phihat(f, blk); },
                              [=](const XPolynomial& f) { return apply_phihat_form(f, i, blk); });
        });
    }

    tasks.push_back([=] {
        return check_body(tag(n, "Phi raises E_eta with the t-count coefficient"), [&](CheckResult& r) {
            for (const auto& eta : compositions_up_to_weight(n, opt.degree)) {
                std::vector<int> pe(static_cast<size_t>(n));
                for (int i = 1; i < n; ++i) pe[static_cast<size_t>(i - 1)] = eta[i];
                pe[static_cast<size_t>(n - 1)] = eta[0] + 1;
                int count = 0;
                for (int i = 2; i <= n; ++i)
                    if (eta[i - 1] <= eta[0]) ++count;
                XPolynomial lhs = apply_phi(table->nonsym_macdonald(eta), blk);
                XPolynomial rhs = table->nonsym_macdonald(Composition(pe)) * tpow(-count);
                if (lhs != rhs) {
                    r.pass = false;
                    r.detail = clip("eta = " + to_string(XPolynomial::monomial(eta)));
                    return;
                }
            }
        });
    });
    tasks.push_back([=] {
        return check_body(tag(n, "PhiHat lowers E_eta with the d'-ratio coefficient"), [&](CheckResult& r) {
            for (const auto& eta : compositions_up_to_weight(n, opt.degree)) {
                if (eta[n - 1] < 1) continue;
                std::vector<int> pe(static_cast<size_t>(n));
                pe[0] = eta[n - 1] - 1;
                for (int i = 1; i < n; ++i) pe[static_cast<size_t>(i)] = eta[i - 1];
                Composition nu(pe);
                int count = 0;
                for (int i = 1; i <= n - 1; ++i)
                    if (eta[i - 1] < eta[n - 1]) ++count;
                QtScalar ratio = composition_stats(eta, n).dprime /
                                 composition_stats(nu, n).dprime;
                XPolynomial lhs = apply_phihat(table->nonsym_macdonald(eta), blk);
                XPolynomial rhs = table->nonsym_macdonald(nu) * (tpow(count) * ratio);
                if (lhs != rhs) {
                    r.pass = false;
                    r.detail = clip("eta = " + to_string(XPolynomial::monomial(eta)));
                    return;
                }
            }
        });
    });

    return run_tasks(tasks, opt.jobs);
}

Report run_kernel_suite(int n, const VerifyOptions& opt) {
    int N = opt.degree;
    MacdonaldTable table;
    Report rep;

    KernelTruncation K = build_KA(n, N, table);
    Report thm = check_theorem52(K);
    rep.results.insert(rep.results.end(), thm.results.begin(), thm.results.end());

    Report sym = check_prop54(K, table);
    rep.results.insert(rep.results.end(), sym.results.begin(), sym.results.end());

    // sum of D_i over i >= m against the divided-difference operator E_{0,m},
    // on a spanning set of the symmetric polynomials of degree <= N
    for (int m = 1; m <= n; ++m) {
        rep.results.push_back(check_body(
            tag(n, "sum_{i>=m} D_i matches E_{0,m} on symmetric input, m=" + std::to_string(m)),
            [&](CheckResult& r) {
                for (const auto& lambda : partitions_up_to_weight(n, N)) {
                    XPolynomial f = monomial_symmetric(n, lambda, 1, n);
                    VarBlock blk{0, n};
                    XPolynomial lhs(n);
                    for (int i = m; i <= n; ++i) lhs += apply_Di(f, i, blk);
                    if (lhs != apply_E0m(f, m)) {
                        r.pass = false;
                        r.detail = clip("lambda = " + to_string(XPolynomial::monomial(lambda)));
                        return;
                    }
                }
            }));
    }

    return rep;
}

} // namespace qmacd
