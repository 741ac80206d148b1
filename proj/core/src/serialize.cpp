#include "singerlab/serialize.hpp"

#include "singerlab/errors.hpp"

namespace singerlab {

using json = nlohmann::json;

json to_json(const Matrix& m) { return to_text(m); }

Matrix matrix_from_json(const json& j, const FieldRef& field) {
  if (!j.is_string()) throw ParseError("matrix JSON must be a string");
  return parse_matrix(j.get<std::string>(), field);
}

json to_json(const FactorizationList& f) {
  json factors = json::array();
  for (const auto& t : f.factors) factors.push_back(to_json(t));
  return {{"factors", factors}, {"product", to_json(f.product)}};
}

FactorizationList factorization_from_json(const json& j, const FieldRef& field) {
  if (!j.is_object() || !j.contains("factors") || !j.contains("product") || !j["factors"].is_array()) {
    throw ParseError("factorization JSON needs 'factors' and 'product'");
  }
  FactorizationList f{{}, matrix_from_json(j["product"], field)};
  for (const auto& t : j["factors"]) f.factors.push_back(matrix_from_json(t, field));
  if (!(product_of(f.factors, field, f.product.n()) == f.product)) {
    throw ParseError("factorization JSON: factors do not multiply to the product");
  }
  return f;
}

json to_json(const Field& f) {
  return {{"p", f.p()}, {"k", f.k()}, {"q", f.q()}, {"modulus", f.modulus()},
          {"primitive_element", f.primitive_element()}};
}

json to_json(const VerifyReport& r) {
  return {{"schema", kJsonSchema},
          {"report", r.name},
          {"ok", r.ok()},
          {"params", r.params},
          {"checked", r.checked},
          {"violations", r.violations},
          {"exceptional_pairs", r.exceptional_pairs},
          {"stats", r.stats},
          {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace singerlab
