#include <map>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "seed.hpp"
#include "singerlab/errors.hpp"
#include "singerlab/groupgen.hpp"
#include "singerlab/reflect.hpp"
#include "singerlab/singer.hpp"

using namespace singerlab;

namespace {

Matrix M(const FieldRef& f, const char* text) { return parse_matrix(text, f); }

std::vector<Subspace> invariant_proper_subspaces(const Matrix& g) {
  std::vector<Subspace> out;
  for (auto& w : enumerate_subspaces(g.n(), g.field_ref())) {
    if (w.dim() > 0 && w.dim() < g.n() && stabilizes(g, w)) out.push_back(std::move(w));
  }
  return out;
}

void expect_stabilizing(const Matrix& g, const Subspace& w) {
  const FactorizationList f = stabilizing_factorization(g, w);
  ASSERT_EQ(f.length(), reflection_length(g)) << to_text(g);
  ASSERT_EQ(product_of(f.factors, g.field_ref(), g.n()), g);
  for (const auto& t : f.factors) {
    ASSERT_TRUE(is_reflection(t));
    ASSERT_TRUE(stabilizes(t, w));
  }
}

}  // namespace

TEST(Reflection, Predicates) {
  const FieldRef f3 = make_field(3, 1);
  const FieldRef f5 = make_field(5, 1);
  EXPECT_TRUE(is_reflection(M(f3, "1,0;2,2")));
  EXPECT_TRUE(is_reflection(M(f5, "2,2;2,0")));
  EXPECT_TRUE(is_reflection(M(f5, "1,1;0,1")));  // transvection
  EXPECT_FALSE(is_reflection(Matrix::identity(f3, 2)));
  EXPECT_EQ(reflection_length(Matrix::identity(f3, 2)), 0u);
  EXPECT_EQ(reflection_length(M(f3, "1,0;2,2")), 1u);
  EXPECT_EQ(reflection_length(M(f3, "0,1;1,2")), 2u);
}

TEST(Reflection, CountsMatchFormulaAndScan) {
  const std::map<std::pair<int, int>, std::size_t> expected{{{2, 3}, 20}, {{3, 2}, 21}, {{2, 2}, 3}, {{2, 5}, 114}};
  for (const auto& [nq, count] : expected) {
    const auto [n, p] = nq;
    const FieldRef f = make_field(p, 1);
    const auto refl = enumerate_reflections(n, f);
    EXPECT_EQ(refl.size(), count);
    EXPECT_EQ(oracle::all_reflections(n, p).size(), count);
    long long qn = 1;
    for (int i = 0; i < n; ++i) qn *= p;
    EXPECT_EQ(static_cast<long long>(count), (qn - 1) / (p - 1) * (qn / p * (p - 1) - 1));
    std::set<std::vector<Value>> distinct;
    for (const auto& t : refl) {
      EXPECT_TRUE(is_reflection(t));
      distinct.insert(t.entries());
    }
    EXPECT_EQ(distinct.size(), count);
  }
}

TEST(Reflection, ParameterRoundTrip) {
  for (const FieldRef& f : {make_field(3, 1), make_field(2, 2)}) {
    for (const auto& t : enumerate_reflections(2, f)) {
      const auto param = reflection_param(t);
      ASSERT_TRUE(param.has_value());
      EXPECT_EQ(reflection_matrix(f, *param), t);
      const auto lead = std::find_if(param->phi.begin(), param->phi.end(), [](Value v) { return v != 0; });
      EXPECT_EQ(*lead, 1u);
    }
  }
  EXPECT_FALSE(reflection_param(Matrix::identity(make_field(3, 1), 2)).has_value());
  // 1 + phi(w) = 0 is not invertible
  EXPECT_THROW(reflection_matrix(make_field(3, 1), {{1, 0}, {2, 0}}), ContractError);
}

TEST(MinimalFactorization, DiagonalElementOverF5) {
  const FieldRef f5 = make_field(5, 1);
  const Matrix g = M(f5, "3,0;0,4");
  const FactorizationList f = minimal_factorization(g);
  EXPECT_EQ(f.length(), 2u);
  EXPECT_EQ(product_of(f.factors, f5, 2), g);
  const auto all = enumerate_minimal_factorizations(g);
  const bool has_worked = std::any_of(all.begin(), all.end(), [&](const FactorizationList& l) {
    return to_text(l.factors[0]) == "2,2;2,0" && to_text(l.factors[1]) == "0,2;4,3";
  });
  EXPECT_TRUE(has_worked);
}

TEST(MinimalFactorization, ExhaustiveSmallGroups) {
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::uint32_t>>{{2, 3}, {3, 2}, {2, 5}}) {
    const FieldRef f = make_field(p, 1);
    for (const auto& g : enumerate_gl(n, f)) {
      const FactorizationList l = minimal_factorization(g);
      ASSERT_EQ(l.length(), reflection_length(g));
      ASSERT_EQ(product_of(l.factors, f, n), g);
      const Subspace fix = fixed_space(g);
      for (const auto& t : l.factors) {
        ASSERT_TRUE(is_reflection(t));
        ASSERT_TRUE(fix.is_subspace_of(fixed_space(t)));
      }
    }
  }
  const FieldRef f3 = make_field(3, 1);
  EXPECT_TRUE(minimal_factorization(Matrix::identity(f3, 2)).factors.empty());
  EXPECT_EQ(minimal_factorization(M(f3, "1,0;2,2")).factors, std::vector<Matrix>{M(f3, "1,0;2,2")});
}

TEST(Enumeration, CountsAgainstBruteForcePairs) {
  for (int p : {2, 3}) {
    const FieldRef f = make_field(p, 1);
    const auto refl = oracle::all_reflections(2, p);
    std::map<oracle::IntMat, long long> pair_count;
    for (const auto& a : refl) {
      for (const auto& b : refl) ++pair_count[oracle::mul(a, b, p)];
    }
    for (const auto& g : enumerate_gl(2, f)) {
      if (reflection_length(g) != 2) continue;
      const auto list = enumerate_minimal_factorizations(g);
      EXPECT_EQ(static_cast<long long>(list.size()), pair_count[oracle::to_int(g)]) << to_text(g);
    }
  }
  // 3-cycle in S_3 = GL_2(F_2)
  EXPECT_EQ(enumerate_minimal_factorizations(M(make_field(2, 1), "0,1;1,1")).size(), 3u);
  EXPECT_EQ(enumerate_minimal_factorizations(Matrix::identity(make_field(2, 1), 2)).size(), 1u);
}

TEST(Enumeration, FixedSpaceIsIntersectionOfFactorFixedSpaces) {
  const FieldRef f = make_field(3, 1);
  for (const auto& g : enumerate_gl(2, f)) {
    for (const auto& l : enumerate_minimal_factorizations(g)) {
      Subspace meet = Subspace::full(f, 2);
      for (const auto& t : l.factors) meet = meet.intersect(fixed_space(t));
      ASSERT_EQ(meet, fixed_space(g));
    }
  }
}

TEST(Enumeration, ReversedFactorizationsUsuallyFail) {
  const FieldRef f = make_field(3, 1);
  const Matrix c = M(f, "0,1;1,2");
  std::size_t reversed_ok = 0;
  const auto list = enumerate_minimal_factorizations(c);
  for (const auto& l : list) reversed_ok += l.factors[1] * l.factors[0] == c;
  EXPECT_LT(reversed_ok, list.size());
}

TEST(Enumeration, BudgetGuard) {
  const FieldRef f = make_field(3, 1);
  EXPECT_THROW(enumerate_minimal_factorizations(parse_matrix("0,1;1,2", f), 3), BudgetExceeded);
  EXPECT_THROW(ReflectionSet(3, f, 10), BudgetExceeded);
}

TEST(Stabilizing, DiagonalElementOverF5) {
  const FieldRef f5 = make_field(5, 1);
  const Matrix g = M(f5, "3,0;0,4");
  const Subspace w(f5, 2, {{1, 0}});
  expect_stabilizing(g, w);
  const FactorizationList f = stabilizing_factorization(g, w);
  EXPECT_LT(group_closure(f.factors).order, gl_order(2, 5));
  EXPECT_THROW(stabilizing_factorization(g, Subspace(f5, 2, {{1, 1}})), ContractError);
  EXPECT_THROW(stabilizing_factorization(g, Subspace::full(f5, 2)), ContractError);
  EXPECT_THROW(stabilizing_factorization(g, Subspace::zero(f5, 2)), ContractError);
}

TEST(Stabilizing, StandardComplementWouldNotBeMinimal) {
  // With U = span(e2) the restriction to W is 2 and the remainder is a
  // second reflection; g itself is a single reflection.
  const FieldRef f5 = make_field(5, 1);
  const Matrix g = M(f5, "2,1;0,1");
  ASSERT_EQ(reflection_length(g), 1u);
  expect_stabilizing(g, Subspace(f5, 2, {{1, 0}}));
}

TEST(Stabilizing, IdentityOnW) {
  const FieldRef f3 = make_field(3, 1);
  const Matrix g = M(f3, "1,0,0;0,1,0;1,2,2");
  const Subspace w(f3, 3, {{0, 0, 1}});
  ASSERT_TRUE(stabilizes(g, w));
  expect_stabilizing(g, w);
}

TEST(Stabilizing, ExhaustiveOverInvariantSubspaces) {
  for (auto [n, p, k] : std::vector<std::tuple<std::size_t, std::uint32_t, unsigned>>{
           {2, 5, 1}, {2, 2, 2}, {3, 2, 1}, {2, 3, 1}}) {
    const FieldRef f = make_field(p, k);
    for (const auto& g : enumerate_gl(n, f)) {
      for (const auto& w : invariant_proper_subspaces(g)) expect_stabilizing(g, w);
    }
  }
}

TEST(Stabilizing, RandomReducibleElementsOfGL3F3) {
  std::mt19937_64 rng(testsupport::seed());
  const FieldRef f = make_field(3, 1);
  const auto group = enumerate_gl(3, f);
  int tested = 0;
  while (tested < 100) {
    const Matrix& g = group[rng() % group.size()];
    const auto subs = invariant_proper_subspaces(g);
    if (subs.empty()) continue;
    expect_stabilizing(g, subs[rng() % subs.size()]);
    ++tested;
  }
}

TEST(DetSubgroup, OrderTwelveElementOfGL2F5) {
  const FieldRef f5 = make_field(5, 1);
  const Matrix g = M(f5, "0,1;1,2");
  ASSERT_TRUE(is_irreducible_element(g));
  ASSERT_EQ(matrix_order(g), 12u);
  ASSERT_EQ(det(g), 4u);
  const auto list = factorizations_in_det_subgroup(g, 4);
  EXPECT_EQ(list.size(), 12u);

  // brute force: ordered reflection pairs with determinants in {1, 4}
  long long brute = 0;
  const auto refl = oracle::all_reflections(2, 5);
  const auto target = oracle::to_int(g);
  for (const auto& a : refl) {
    for (const auto& b : refl) {
      const int da = oracle::det_laplace(a, 5);
      const int db = oracle::det_laplace(b, 5);
      if ((da == 1 || da == 4) && (db == 1 || db == 4) && oracle::mul(a, b, 5) == target) ++brute;
    }
  }
  EXPECT_EQ(brute, 12);

  for (const auto& l : list) {
    for (const auto& t : l.factors) EXPECT_TRUE(det(t) == 1 || det(t) == 4);
    EXPECT_LT(group_closure(l.factors).order, gl_order(2, 5));
  }
}

TEST(DetSubgroup, FullUnitGroupIsUnrestricted) {
  const FieldRef f5 = make_field(5, 1);
  const Matrix g = M(f5, "0,1;1,2");
  EXPECT_EQ(factorizations_in_det_subgroup(g, f5->primitive_element()).size(),
            enumerate_minimal_factorizations(g).size());
  EXPECT_THROW(factorizations_in_det_subgroup(g, 1), ContractError);
  EXPECT_THROW(factorizations_in_det_subgroup(g, 0), ContractError);
}
