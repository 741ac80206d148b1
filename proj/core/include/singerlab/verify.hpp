#pragma once

#include <cstdint>

#include <nlohmann/json.hpp>

#include "singerlab/ff.hpp"
#include "singerlab/groupgen.hpp"

namespace singerlab {

/// Outcome of one exhaustive check. `violations` and `exceptional_pairs` are
/// JSON arrays sorted by their serialized form.
struct VerifyReport {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t checked = 0;
  nlohmann::json violations = nlohmann::json::array();
  nlohmann::json exceptional_pairs = nlohmann::json::array();
  nlohmann::json stats = nlohmann::json::object();
  std::uint64_t elapsed_ms = 0;

  bool ok() const { return violations.empty(); }
};

struct VerifyOptions {
  /// main1 only: one representative per conjugacy class plus random conjugate spot-checks.
  bool classes = false;
  std::uint64_t seed = 1;
  std::uint64_t cap = default_closure_cap();
  std::uint64_t budget = kDefaultEnumerationBudget;
};

/// Every g: strongly quasi-Coxeter iff Singer; each non-Singer g also gets a
/// non-generating minimal factorization (stabilizing one if reducible,
/// determinant-restricted one if irreducible).
VerifyReport verify_main1(std::size_t n, const FieldRef& field, const VerifyOptions& opts = {});
/// Every Singer c and reflection t: <c, t> is proper exactly when n = 2, q > 2
/// and t normalizes <c>; those t are normalizing_reflections(c), q + 1 of them.
VerifyReport verify_main2(std::size_t n, const FieldRef& field, const VerifyOptions& opts = {});
/// Every primitive f and monic g != f with g(0) != 0: <C_f, C_g> is proper
/// exactly when n = 2 and C_g lies in a proper normalizer of <C_f>; also
/// dim fix(C_f C_g^-1) = n - 1.
VerifyReport verify_gill(std::size_t n, const FieldRef& field, const VerifyOptions& opts = {});
/// The six Singer and three irreducibility characterizations agree on every element.
VerifyReport verify_singer_equiv(std::size_t n, const FieldRef& field, const VerifyOptions& opts = {});
/// reflection_length equals the Cayley-graph distance on every element.
VerifyReport verify_length_oracle(std::size_t n, const FieldRef& field, const VerifyOptions& opts = {});

}  // namespace singerlab
