#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "singerlab/matrix.hpp"

namespace singerlab {

/// prod_{i<n} (q^n - q^i)
std::uint64_t gl_order(std::size_t n, std::uint64_t q);

/// Default element cap for closures: 2e7, or SINGERLAB_CAP when set.
std::uint64_t default_closure_cap();

struct ClosureResult {
  std::uint64_t order = 0;
  /// Present only when requested and the closure completed.
  std::optional<std::vector<Matrix>> elements;
  std::vector<Matrix> generators;
  /// Order is only a lower bound when set.
  bool hit_cap = false;
};

/// Breadth-first closure from I under left multiplication by the generators.
/// Throws ContractError for an empty generator list.
ClosureResult group_closure(const std::vector<Matrix>& gens, std::uint64_t cap = default_closure_cap(),
                            bool keep_elements = false);
/// As above; an empty list yields the trivial group of GL_n(field).
ClosureResult group_closure(const std::vector<Matrix>& gens, std::size_t n, const FieldRef& field,
                            std::uint64_t cap = default_closure_cap(), bool keep_elements = false);

/// Closure order reaches |GL_n(F_q)|. Throws BudgetExceeded if the cap is hit first.
bool generates_full(const std::vector<Matrix>& gens, std::uint64_t cap = default_closure_cap());

/// Memoizes closure orders by the set of generators (order and duplicates ignored).
class GenerationOracle {
 public:
  GenerationOracle(std::size_t n, FieldRef field, std::uint64_t cap = default_closure_cap());

  std::uint64_t order(const std::vector<Matrix>& gens);
  bool generates(const std::vector<Matrix>& gens) { return order(gens) == full_; }
  std::uint64_t full_order() const { return full_; }
  std::uint64_t closures_computed() const { return computed_; }
  std::uint64_t lookups() const { return lookups_; }

 private:
  std::size_t n_;
  FieldRef field_;
  std::uint64_t cap_;
  std::uint64_t full_;
  std::uint64_t computed_ = 0;
  std::uint64_t lookups_ = 0;
  std::map<std::vector<Value>, std::uint64_t> memo_;
};

/// h c h^-1 lies in <c>.
bool normalizes(const Matrix& h, const Matrix& c);

/// {h in GL_n(F_q) : h c h^-1 in <c>} by scanning the whole group; elements retained.
ClosureResult normalizer_of_cyclic(const Matrix& c);

enum class QcClass { strong, weak_only, not_weak };
std::string to_string(QcClass c);

struct QcAnalysis {
  QcClass cls = QcClass::not_weak;
  std::uint64_t factorizations = 0;
  std::uint64_t generating = 0;
  /// First non-generating minimal factorization found, if any.
  std::optional<std::vector<Matrix>> non_generating;
  /// Whether every factorization was visited (false after an early exit).
  bool exhaustive = true;
};

/// Classifies g by the minimal factorizations whose factors generate GL_n(F_q).
/// With early_exit the search stops once both kinds of factorization are seen.
QcAnalysis analyze_qc(const Matrix& g, GenerationOracle& oracle, bool early_exit = true,
                      std::uint64_t budget = kDefaultEnumerationBudget);
QcClass classify_qc(const Matrix& g);

/// Word length of every element of GL_n(F_q) over the reflections, by BFS from I.
std::unordered_map<Matrix, std::size_t, MatrixHash> cayley_distances(std::size_t n, const FieldRef& field);

}  // namespace singerlab
