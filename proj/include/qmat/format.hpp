#pragma once

// Text, LaTeX and JSON renderers, plus JSON readers for elements and
// matrices.  Internal v-exponents are shown as (half-integer) q-powers.

#include "qmat/algebra.hpp"
#include "qmat/chebyshev.hpp"
#include "qmat/coeff.hpp"
#include "qmat/identities.hpp"
#include "qmat/matrix.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qmat {

using Json = nlohmann::json;

/// q^{k/2}: "" for k = 0, "q", "q^-1", "q^{1/2}", "q^{-3/2}".
std::string q_power_text(int k);
/// "q", "q^{-1}", "q^{\frac{1}{2}}", "q^{-\frac{3}{2}}".
std::string q_power_latex(int k);

/// A QCoeff in q notation, e.g. "q - q^-1".
std::string to_text_q(const QCoeff& x);
std::string to_latex(const QCoeff& x);

/// "a^2 + bc", "q^-1 ac + q^-1 cd", "(q - q^-1) bc".
std::string to_text(const Element& x);
/// "q^{\frac{1}{2}}ab + c^{2}".
std::string to_latex(const Element& x);
std::string monomial_text(const Monomial& m);
std::string monomial_latex(const Monomial& m);

/// "x^4 - 3x^2 y + y^2"
std::string to_text(const FPoly& p);
std::string to_latex(const FPoly& p);

/// "PASS name(params) [note]" or "FAIL name(params) {witness}"
std::string to_text(const CheckReport& r);

/// [[exponent, "coefficient"], ...] by decreasing exponent.
Json to_json(const QCoeff& x);
/// { "terms": [ { "m": [i,j,k,l], "c": <qcoeff> }, ... ] } in canonical order.
Json to_json(const Element& x);
/// { "e11": ..., "e12": ..., "e21": ..., "e22": ... }
Json to_json(const QMatrix2& x);
/// { "terms": [[x_exp, y_exp, "coefficient"], ...] } by decreasing x-exponent.
Json to_json(const FPoly& p);
Json to_json(const Witness& w);
Json to_json(const CheckReport& r);
Json to_json(const std::vector<CheckReport>& reports);

/// Readers throw std::invalid_argument on malformed input.
QCoeff qcoeff_from_json(const Json& j);
Element element_from_json(const Json& j);
QMatrix2 matrix_from_json(const Json& j);

}  // namespace qmat
