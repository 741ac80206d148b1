#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "singerlab/matrix.hpp"

namespace singerlab {

/// t = I + w phi, with phi a nonzero row vector whose first nonzero entry is 1,
/// w a nonzero column vector, and det(t) = 1 + phi(w) != 0.
struct ReflectionParam {
  Vector phi;
  Vector w;

  friend bool operator==(const ReflectionParam&, const ReflectionParam&) = default;
};

Matrix reflection_matrix(const FieldRef& field, const ReflectionParam& param);
/// Recovers (phi, w) from a reflection; empty if t is not a reflection.
std::optional<ReflectionParam> reflection_param(const Matrix& t);

/// Ordered reflection factors and their left-to-right product.
struct FactorizationList {
  std::vector<Matrix> factors;
  Matrix product;

  std::size_t length() const { return factors.size(); }
};

/// dim fix(M) = n - 1. Transvections count.
bool is_reflection(const Matrix& m);

/// n - dim fix(g)
std::size_t reflection_length(const Matrix& g);

/// All reflections of GL_n(F_q) with their inverses, ordered by phi (as a
/// base-q numeral, first coordinate least significant) and then w.
class ReflectionSet {
 public:
  ReflectionSet(std::size_t n, FieldRef field, std::uint64_t budget = kDefaultEnumerationBudget);

  /// Process-wide cached instance; thread-safe.
  static std::shared_ptr<const ReflectionSet> get(std::size_t n, const FieldRef& field);

  std::size_t n() const { return n_; }
  const FieldRef& field() const { return field_; }
  const std::vector<Matrix>& reflections() const { return reflections_; }
  const std::vector<Matrix>& inverses() const { return inverses_; }
  std::size_t size() const { return reflections_.size(); }

 private:
  std::size_t n_;
  FieldRef field_;
  std::vector<Matrix> reflections_;
  std::vector<Matrix> inverses_;
};

/// Every reflection exactly once: (q^n-1)/(q-1) hyperplanes times
/// q^(n-1)(q-1) - 1 maps each.
std::vector<Matrix> enumerate_reflections(std::size_t n, const FieldRef& field,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

/// Greedy minimum-length factorization: the first reflection t (in
/// ReflectionSet order) with reflection_length(t^-1 g) = k - 1, then recurse.
FactorizationList minimal_factorization(const Matrix& g);

/// Called with each minimal factorization's factors; return false to stop.
using FactorizationVisitor = std::function<bool(const std::vector<Matrix>&)>;
/// Optional per-factor filter applied during the search.
using FactorFilter = std::function<bool(const Matrix&)>;

/// Depth-first enumeration of all ordered minimum-length factorizations,
/// pruning any prefix t_1..t_i whose remainder does not have length k - i.
/// Throws BudgetExceeded once more than `budget` partial products are formed.
void for_each_minimal_factorization(const Matrix& g, const FactorizationVisitor& visit,
                                    const FactorFilter& filter = {},
                                    std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<FactorizationList> enumerate_minimal_factorizations(const Matrix& g,
                                                                std::uint64_t budget = kDefaultEnumerationBudget);

/// Minimum-length factorization of g whose factors all stabilize W:
/// factor g|W inside GL(W) and extend by the identity on a complement U, then
/// factor the remainder (which fixes W pointwise). U starts as the span of the
/// non-pivot standard basis vectors of W and is sheared so that the remainder
/// loses no fixed vectors, which keeps the total length minimal.
/// Throws ContractError unless 0 < dim W < n and g stabilizes W.
FactorizationList stabilizing_factorization(const Matrix& g, const Subspace& w);

/// Minimal factorizations of g whose factors all have determinant in
/// X = <generator> <= F_q^x. Throws ContractError if det(g) is not in X.
std::vector<FactorizationList> factorizations_in_det_subgroup(const Matrix& g, Value generator,
                                                              std::uint64_t budget = kDefaultEnumerationBudget);

/// Product of the factors left to right; identity for an empty list.
Matrix product_of(const std::vector<Matrix>& factors, const FieldRef& field, std::size_t n);

}  // namespace singerlab
