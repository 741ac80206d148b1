#pragma once

#include <nlohmann/json.hpp>

#include "singerlab/matrix.hpp"
#include "singerlab/reflect.hpp"
#include "singerlab/verify.hpp"

namespace singerlab {

inline constexpr int kJsonSchema = 1;

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const FieldRef& field);

/// {"factors": [matrix...], "product": matrix}
nlohmann::json to_json(const FactorizationList& f);
/// Throws ParseError if the factors do not multiply to the product.
FactorizationList factorization_from_json(const nlohmann::json& j, const FieldRef& field);

nlohmann::json to_json(const Field& f);

/// Report object including "schema" and "ok".
nlohmann::json to_json(const VerifyReport& r);

}  // namespace singerlab
