#pragma once

#include "exring/polynomial.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace exring {

/// Text form, e.g. "2*X[1,1]^2*X[2,2] + 4*X[1,1]*X[1,2]*X[2,1]". Variables
/// appear in decreasing order, unit coefficients are omitted on non-constant
/// terms, and the zero polynomial prints as "0".
std::string format_polynomial(const Polynomial& p);

/// Inverse of format_polynomial; also accepts the Unicode minus sign and
/// repeated variables within a term. Throws std::invalid_argument.
Polynomial parse_polynomial(std::string_view text, int rows, int cols);

/// {"dims":[k,n],"terms":[{"coeff":"num/den","exp":[[...],...]}]}
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ExponentMatrix& m);
/// Array of rows. A 0 x n matrix serializes as [], so `cols_hint` supplies n
/// in that case; -1 infers it from the array.
ExponentMatrix matrix_from_json(const nlohmann::json& j, int cols_hint = -1);

}  // namespace exring
