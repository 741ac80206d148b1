#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "singerlab/ff.hpp"
#include "singerlab/matrix.hpp"
#include "singerlab/poly.hpp"

namespace singerlab {

/// An ordered F_q-basis of F_{q^n}, with F_{q^n} built as F_{p^(kn)} and F_q
/// identified with its order-q subfield.
class EmbeddingBasis {
 public:
  /// Power basis (1, x, ..., x^(n-1)) of the class of x in the extension.
  EmbeddingBasis(FieldRef ground, unsigned n);
  /// Explicit basis; throws ContractError if it is not F_q-independent.
  EmbeddingBasis(FieldRef ground, FieldRef ext, std::vector<Value> basis);

  const FieldRef& ground() const { return ground_; }
  const FieldRef& ext() const { return ext_; }
  const std::vector<Value>& basis() const { return basis_; }
  unsigned degree() const { return static_cast<unsigned>(basis_.size()); }

  /// Image of a ground-field element in the extension.
  Value lift(Value ground_value) const { return lift_[ground_value]; }
  /// Coordinates over F_q of an extension element in this basis.
  Vector coordinates(Value ext_value) const;
  /// Whether the element generates F_{q^n} over F_q (its Frobenius orbit has n elements).
  bool is_field_generator(Value ext_value) const;

 private:
  void build();

  FieldRef ground_;
  FieldRef ext_;
  std::vector<Value> basis_;
  std::vector<Value> lift_;
  std::vector<std::uint32_t> coord_index_;
};

/// Matrix of multiplication by alpha in basis B. Throws ContractError for
/// alpha = 0.
Matrix embed(Value alpha, const EmbeddingBasis& basis);

/// char_poly(g) is irreducible.
bool is_irreducible_element(const Matrix& g);
/// g stabilizes no subspace of dimension 1..n-1 (exhaustive).
bool is_irreducible_oracle(const Matrix& g, std::uint64_t budget = kDefaultEnumerationBudget);
/// char_poly(g) is primitive.
bool is_singer(const Matrix& g);

/// Basis (v, gv, ..., g^(n-1) v) for the first nonzero v (in base-q counting
/// order) whose cyclic span is everything, as the columns of P. Then
/// P^-1 g P = companion(char_poly(g)). Empty if g has no cyclic vector.
std::optional<Matrix> cyclic_basis(const Matrix& g);

/// Precomputed data for the elementwise equivalence checks on one GL_n(F_q).
struct EquivalenceContext {
  EquivalenceContext(std::size_t n, const FieldRef& field);

  std::size_t n;
  FieldRef field;
  EmbeddingBasis embedding;
  ConjugacyClasses classes;
  /// Classes meeting the embedded image of a primitive element / field generator.
  std::unordered_set<std::size_t> primitive_image_classes;
  std::unordered_set<std::size_t> generator_image_classes;
  /// Largest order of x modulo an irreducible polynomial of degree n.
  std::uint64_t max_irreducible_order = 0;
};

/// The six characterizations of a Singer cycle, each evaluated on its own route.
struct SingerConditions {
  bool embedded_primitive = false;      // conjugate to embed(zeta, B) for a primitive zeta
  bool irreducible_max_order = false;   // no invariant subspace and order = max irreducible order
  bool order_is_maximal = false;        // order(g) = q^n - 1
  bool char_poly_primitive = false;     // is_singer
  bool transitive = false;              // orbit of e_1 has q^n - 1 vectors
  bool primitive_eigenvalue = false;    // char_poly has a primitive root in F_{q^n}

  bool all_agree() const;
};

/// The three characterizations of an irreducible element.
struct IrreducibleConditions {
  bool embedded_generator = false;
  bool char_poly_irreducible = false;
  bool no_invariant_subspace = false;

  bool all_agree() const;
};

SingerConditions singer_oracles(const Matrix& g, const EquivalenceContext& ctx);
IrreducibleConditions irreducible_oracles(const Matrix& g, const EquivalenceContext& ctx);

/// Size of the orbit of v under <g>.
std::uint64_t orbit_size(const Matrix& g, std::span<const Value> v);

/// For a Singer cycle c in GL_2(F_q): the reflection t with t^2 = 1 and
/// t c t = c^q. Built in the companion basis of c from zeta, the class of x in
/// F_q[x]/(char_poly(c)), as [[1, 0], [-zeta^-1 - zeta^-q, -1]], then
/// conjugated back. Throws ContractError unless n = 2 and c is Singer.
Matrix normalizer_reflection(const Matrix& c);

/// {c^k t c^-k : k = 0..q} with t = normalizer_reflection(c), duplicates
/// removed; q + 1 matrices.
std::vector<Matrix> normalizing_reflections(const Matrix& c);

}  // namespace singerlab
