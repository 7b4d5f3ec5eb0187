#pragma once

/**
 * @file format.hpp
 * @brief Canonical display strings, LaTeX, and the JSON wire format.
 *
 * Display strings order terms by ascending total degree, then lex with
 * q > t, matching the term order of QtPoly, so output is bit-stable.
 */

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "qmacd/macdonald.hpp"

namespace qmacd {

std::string to_string(const QtPoly& p);
std::string to_string(const QtScalar& s);
std::string to_string(const QtMonomial& m);
std::string to_string(const XPolynomial& f);

std::string to_latex(const QtScalar& s);
std::string to_latex(const XPolynomial& f);

nlohmann::json scalar_to_json(const QtScalar& s);
QtScalar scalar_from_json(const nlohmann::json& j);

nlohmann::json xpoly_to_json(const XPolynomial& f);
XPolynomial xpoly_from_json(const nlohmann::json& j);

nlohmann::json stats_to_json(const CompositionStats& st);

} // namespace qmacd
