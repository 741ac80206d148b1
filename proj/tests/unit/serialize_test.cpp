#include <random>

#include <gtest/gtest.h>

#include "seed.hpp"
#include "singerlab/errors.hpp"
#include "singerlab/serialize.hpp"

using namespace singerlab;

TEST(Serialize, MatrixRoundTrip) {
  std::mt19937_64 rng(testsupport::seed());
  const FieldRef f = make_field(3, 2);
  for (int i = 0; i < 50; ++i) {
    std::vector<Value> e(9);
    for (auto& v : e) v = static_cast<Value>(rng() % 9);
    const Matrix m(f, 3, e);
    const nlohmann::json j = nlohmann::json::parse(to_json(m).dump());
    EXPECT_EQ(matrix_from_json(j, f), m);
  }
  EXPECT_THROW(matrix_from_json(42, f), ParseError);
}

TEST(Serialize, FactorizationRoundTrip) {
  const FieldRef f5 = make_field(5, 1);
  const Matrix g = parse_matrix("3,0;0,4", f5);
  for (const auto& l : enumerate_minimal_factorizations(g)) {
    const FactorizationList back = factorization_from_json(nlohmann::json::parse(to_json(l).dump()), f5);
    EXPECT_EQ(back.factors, l.factors);
    EXPECT_EQ(back.product, g);
  }
  nlohmann::json bad = to_json(minimal_factorization(g));
  bad["product"] = "1,0;0,1";
  EXPECT_THROW(factorization_from_json(bad, f5), ParseError);
  EXPECT_THROW(factorization_from_json(nlohmann::json::object(), f5), ParseError);
}

TEST(Serialize, ReportAndFieldSchema) {
  const nlohmann::json r = to_json(verify_gill(2, make_field(3, 1)));
  EXPECT_EQ(r["schema"], 1);
  EXPECT_EQ(r["report"], "gill");
  EXPECT_TRUE(r["ok"].get<bool>());
  for (const char* key : {"params", "checked", "violations", "exceptional_pairs", "elapsed_ms"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
  const nlohmann::json f = to_json(*make_field(3, 2, std::vector<Value>{2, 1, 1}));
  EXPECT_EQ(f["modulus"], (std::vector<Value>{2, 1, 1}));
  EXPECT_EQ(f["q"], 9);
}
