#include "qmacd/format.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace qmacd {

namespace {

void append_power(std::ostream& os, const char* var, int e) {
    if (e == 0) return;
    os << var;
    if (e != 1) os << '^' << e;
}

} // namespace

std::string to_string(const QtPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigInt a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        bool has_var = e.first != 0 || e.second != 0;
        if (a != 1 || !has_var) os << a;
        append_power(os, "q", e.first);
        append_power(os, "t", e.second);
        first = false;
    }
    return os.str();
}

std::string to_string(const QtScalar& s) {
    std::string num = to_string(s.num());
    if (s.den().is_one()) return num;
    std::string den = to_string(s.den());
    if (s.num().terms().size() > 1) num = "(" + num + ")";
    if (s.den().terms().size() > 1) den = "(" + den + ")";
    return num + "/" + den;
}

std::string to_string(const QtMonomial& m) {
    if (m.qexp == 0 && m.texp == 0) return "1";
    std::ostringstream os;
    bool need1 = true;
    if (m.qexp != 0) { append_power(os, "q", m.qexp); need1 = false; }
    if (m.texp != 0) { append_power(os, "t", m.texp); need1 = false; }
    if (need1) os << '1';
    return os.str();
}

std::string to_string(const XPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << " + ";
        std::string cs = to_string(c);
        bool has_var = false;
        for (int k : e)
            if (k != 0) has_var = true;
        if (!has_var) {
            os << cs;
        } else {
            if (cs != "1") {
                bool atomic = c.den().is_one() && c.num().terms().size() == 1;
                os << (atomic ? cs : "(" + cs + ")") << "*";
            }
            bool firstv = true;
            for (size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (!firstv) os << "*";
                os << "x" << (k + 1);
                if (e[k] != 1) os << "^" << e[k];
                firstv = false;
            }
        }
        first = false;
    }
    return os.str();
}

std::string to_latex(const QtScalar& s) {
    if (s.den().is_one()) return to_string(s.num());
    return "\\frac{" + to_string(s.num()) + "}{" + to_string(s.den()) + "}";
}

std::string to_latex(const XPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << " + ";
        std::string cs = to_latex(c);
        bool has_var = false;
        for (int k : e)
            if (k != 0) has_var = true;
        if (!has_var) {
            os << cs;
        } else {
            if (cs != "1") os << cs << " ";
            for (size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                os << "x_{" << (k + 1) << "}";
                if (e[k] != 1) os << "^{" << e[k] << "}";
            }
        }
        first = false;
    }
    return os.str();
}

namespace {

nlohmann::json poly_to_json(const QtPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json term = nlohmann::json::array();
        if (c >= std::numeric_limits<int64_t>::min() && c <= std::numeric_limits<int64_t>::max())
            term.push_back(static_cast<int64_t>(c));
        else
            term.push_back(c.str());
        term.push_back(e.first);
        term.push_back(e.second);
        arr.push_back(std::move(term));
    }
    return arr;
}

QtPoly poly_from_json(const nlohmann::json& j) {
    QtPoly p;
    for (const auto& term : j) {
        BigInt c = term[0].is_string() ? BigInt(term[0].get<std::string>())
                                       : BigInt(term[0].get<int64_t>());
        p.set_term(term[1].get<int>(), term[2].get<int>(), c);
    }
    return p;
}

} // namespace

nlohmann::json scalar_to_json(const QtScalar& s) {
    return {{"num", poly_to_json(s.num())}, {"den", poly_to_json(s.den())}};
}

QtScalar scalar_from_json(const nlohmann::json& j) {
    return QtScalar(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

nlohmann::json xpoly_to_json(const XPolynomial& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back({{"exp", e}, {"coeff", scalar_to_json(c)}});
    return {{"n", f.nvars()}, {"terms", std::move(terms)}};
}

XPolynomial xpoly_from_json(const nlohmann::json& j) {
    XPolynomial f(j.at("n").get<int>());
    for (const auto& term : j.at("terms"))
        f.add_term(term.at("exp").get<std::vector<int>>(), scalar_from_json(term.at("coeff")));
    return f;
}

nlohmann::json stats_to_json(const CompositionStats& st) {
    nlohmann::json ev = nlohmann::json::array();
    for (const auto& m : st.etabar)
        ev.push_back({{"q", m.qexp}, {"t", m.texp}, {"display", to_string(m)}});
    return {{"eta", st.eta.entries()}, {"n", st.n},
            {"arm", st.arm},           {"armco", st.armco},
            {"leg", st.leg},           {"legco", st.legco},
            {"etabar", ev},            {"d", to_string(st.d)},
            {"dprime", to_string(st.dprime)}, {"e", to_string(st.e)}};
}

} // namespace qmacd
