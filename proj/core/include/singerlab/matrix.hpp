#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "singerlab/ff.hpp"
#include "singerlab/poly.hpp"

namespace singerlab {

using Vector = std::vector<Value>;

/// Dense square matrix over F_q, row-major. Matrices act on column vectors.
class Matrix {
 public:
  Matrix(FieldRef field, std::size_t n, std::vector<Value> entries);

  static Matrix identity(FieldRef field, std::size_t n);
  static Matrix zero(FieldRef field, std::size_t n);
  static Matrix diagonal(FieldRef field, std::span<const Value> diag);
  /// Matrix whose j-th column is columns[j].
  static Matrix from_columns(FieldRef field, std::span<const Vector> columns);

  std::size_t n() const { return n_; }
  Value operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  FieldElem elem(std::size_t i, std::size_t j) const { return field_->elem((*this)(i, j)); }
  const std::vector<Value>& entries() const { return entries_; }
  const Field& field() const { return *field_; }
  const FieldRef& field_ref() const { return field_; }

  Vector column(std::size_t j) const;
  bool is_identity() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
  }

 private:
  FieldRef field_;
  std::size_t n_;
  std::vector<Value> entries_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept;
};

/// Subspace of F_q^n stored as its reduced row-echelon basis, so equality of
/// subspaces is equality of bases.
class Subspace {
 public:
  /// Canonicalizes any spanning set (zero rows allowed).
  Subspace(FieldRef field, std::size_t ambient_dim, std::vector<Vector> spanning);

  static Subspace zero(FieldRef field, std::size_t n) { return {std::move(field), n, {}}; }
  static Subspace full(FieldRef field, std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const Field& field() const { return *field_; }
  const FieldRef& field_ref() const { return field_; }

  bool contains(std::span<const Value> v) const;
  /// Coordinates of v in the RREF basis (its entries at the pivot columns).
  /// Only meaningful when contains(v).
  Vector coordinates(std::span<const Value> v) const;
  Subspace intersect(const Subspace& other) const;
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  FieldRef field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
/// A * v for a column vector v.
Vector apply_vec(const Matrix& a, std::span<const Value> v);
Matrix transpose(const Matrix& a);

Value det(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Throws ContractError for singular input.
Matrix inverse(const Matrix& a);
/// a^e; negative e requires a invertible.
Matrix mat_pow(const Matrix& a, std::int64_t e);
/// g a g^-1
Matrix conjugate(const Matrix& a, const Matrix& g, const Matrix& g_inv);

/// det(xI - A), via Hessenberg reduction and the Hessenberg determinant
/// recurrence.
Poly char_poly(const Matrix& a);

/// {v : A v = 0}
Subspace kernel(const Matrix& a);
/// {v : A v = v}
Subspace fixed_space(const Matrix& a);
/// A maps every basis vector of W back into W.
bool stabilizes(const Matrix& a, const Subspace& w);
/// Smallest A-invariant subspace containing v: span{v, Av, A^2 v, ...}.
Subspace cyclic_span(const Matrix& a, std::span<const Value> v);

/// Default work budget shared by the enumerators.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Every subspace of F_q^n (of dimension `dim` if given) exactly once,
/// ordered by dimension, then pivot set, then free entries.
/// Throws BudgetExceeded if the count exceeds `budget`.
std::vector<Subspace> enumerate_subspaces(std::size_t n, const FieldRef& field, std::optional<std::size_t> dim = {},
                                          std::uint64_t budget = kDefaultEnumerationBudget);

/// Every element of GL_n(F_q), row-major lexicographic order.
/// Throws BudgetExceeded when q^(n^2) exceeds `budget`.
std::vector<Matrix> enumerate_gl(std::size_t n, const FieldRef& field, std::uint64_t budget = 20'000'000);

/// Least m >= 1 with A^m = I. Throws ContractError for singular input.
std::uint64_t matrix_order(const Matrix& a);

/// "r0c0,r0c1;r1c0,r1c1" with integer encodings.
std::string to_text(const Matrix& a);
/// Inverse of to_text; rows separated by ';'. Throws ParseError.
Matrix parse_matrix(std::string_view text, const FieldRef& field);
std::string to_text(const Vector& v);

}  // namespace singerlab

namespace singerlab {

/// Conjugacy classes of GL_n(F_q) by brute-force conjugation. Classes are
/// listed in order of their first member in enumerate_gl order; `class_of`
/// maps every element to its class index.
struct ConjugacyClasses {
  std::vector<std::vector<Matrix>> classes;
  std::unordered_map<Matrix, std::size_t, MatrixHash> class_of;
};
ConjugacyClasses conjugacy_classes(std::size_t n, const FieldRef& field);

}  // namespace singerlab

namespace singerlab {

/// Rectangular helpers: `rows` is a list of equal-length rows with `cols` entries.
/// Basis of {v : M v = 0}.
std::vector<Vector> nullspace(const Field& field, std::vector<Vector> rows, std::size_t cols);
/// Some v with M v = rhs (free variables zero), or empty if inconsistent.
std::optional<Vector> solve(const Field& field, std::vector<Vector> rows, const Vector& rhs);

}  // namespace singerlab
