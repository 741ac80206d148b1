#pragma once

#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "singerlab/intmath.hpp"

namespace singerlab {

/// Integer encoding of a field element: the residue polynomial's coefficient
/// vector read as base-p digits, little-endian. 0 and 1 are the additive and
/// multiplicative identities.
using Value = std::uint32_t;

class Field;
class FieldElem;

/// Shared handle to an immutable field. Matrices and polynomials keep their
/// field alive through this handle.
using FieldRef = std::shared_ptr<const Field>;

/// The finite field F_q = F_p[x] / (modulus) with q = p^k.
///
/// Raw `Value` arithmetic lives here so the matrix and closure code can run on
/// plain integers; `FieldElem` is the tagged value type for everything else.
class Field {
 public:
  /// Fields with q above this bound are rejected.
  static constexpr std::uint32_t kMaxOrder = 1U << 16;
  /// Full q x q add/mul tables are built up to this order.
  static constexpr std::uint32_t kFullTableOrder = 256;

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus over F_p, little-endian, length k + 1. For k = 1 this is x.
  const std::vector<Value>& modulus() const { return modulus_; }
  /// Fingerprint of (p, k, modulus); equal fields have equal ids.
  std::uint64_t id() const { return id_; }

  bool operator==(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  Value zero() const { return 0; }
  Value one() const { return 1; }

  Value add(Value a, Value b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Value neg(Value a) const { return neg_[a]; }
  Value sub(Value a, Value b) const { return add(a, neg_[b]); }
  Value mul(Value a, Value b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    if (a == 0 || b == 0) return 0;
    const std::uint32_t s = log_[a] + log_[b];
    return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
  }
  /// Throws DivisionByZero for a = 0.
  Value inv(Value a) const;
  Value div(Value a, Value b) const { return mul(a, inv(b)); }
  /// a^e; negative e goes through the inverse.
  Value pow(Value a, std::int64_t e) const;
  /// a^(q0) where q0 must be a power of p whose exponent divides k.
  Value frobenius(Value a, std::uint64_t q0) const;
  /// Least m >= 1 with a^m = 1. Throws ContractError for a = 0.
  std::uint64_t element_order(Value a) const;
  bool is_primitive_element(Value a) const;
  /// Least (by encoding) primitive element.
  Value primitive_element() const { return generator_; }
  /// Factorization of q - 1, cached at construction.
  const Factorization& unit_group_factorization() const { return unit_factorization_; }

  /// Image of an integer in the prime subfield.
  Value from_int(std::int64_t n) const;
  bool in_prime_subfield(Value a) const { return a < p_; }
  bool contains(Value a) const { return a < q_; }
  std::vector<Value> digits(Value a) const;
  Value from_digits(std::span<const Value> digits) const;

  FieldElem elem(Value v) const;

 private:
  friend FieldRef make_field(std::uint32_t p, unsigned k, std::optional<std::vector<Value>> modulus);
  Field(std::uint32_t p, unsigned k, std::vector<Value> modulus);

  Value add_digits(Value a, Value b) const;
  Value slow_mul(Value a, Value b) const;
  void build_tables();

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<Value> modulus_;
  std::uint64_t id_ = 0;
  Value generator_ = 1;
  Factorization unit_factorization_;

  std::vector<Value> add_table_;
  std::vector<Value> mul_table_;
  std::vector<Value> neg_;
  std::vector<Value> inv_;
  std::vector<std::uint32_t> log_;
  std::vector<Value> exp_;
};

/// Builds F_{p^k}. Without a modulus, the lexicographically least monic
/// irreducible of degree k (by (c0, ..., c_{k-1})) is used.
/// Throws ContractError for non-prime p, k = 0, q > 2^16, or a modulus that is
/// not monic irreducible of degree k.
FieldRef make_field(std::uint32_t p, unsigned k, std::optional<std::vector<Value>> modulus = std::nullopt);

/// Field element tagged with its field. Mixing fields is a contract violation
/// caught by assertions in debug builds.
class FieldElem {
 public:
  FieldElem(const Field& field, Value value) : field_(&field), value_(value) {
    assert(value < field.q());
  }

  Value value() const { return value_; }
  const Field& field() const { return *field_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  FieldElem inv() const { return {*field_, field_->inv(value_)}; }
  FieldElem pow(std::int64_t e) const { return {*field_, field_->pow(value_, e)}; }
  FieldElem operator-() const { return {*field_, field_->neg(value_)}; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {*a.field_, a.field_->add(a.value_, b.value_)};
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {*a.field_, a.field_->sub(a.value_, b.value_)};
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {*a.field_, a.field_->mul(a.value_, b.value_)};
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {*a.field_, a.field_->div(a.value_, b.value_)};
  }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return a.value_ == b.value_;
  }

 private:
  static void check_same([[maybe_unused]] const FieldElem& a, [[maybe_unused]] const FieldElem& b) {
    assert(a.field_ == b.field_ || *a.field_ == *b.field_);
  }

  const Field* field_;
  Value value_;
};

inline FieldElem Field::elem(Value v) const { return {*this, v}; }

inline FieldElem frobenius(const FieldElem& a, std::uint64_t base_order) {
  return a.field().elem(a.field().frobenius(a.value(), base_order));
}
inline std::uint64_t element_order(const FieldElem& a) { return a.field().element_order(a.value()); }
inline bool is_primitive_element(const FieldElem& a) { return a.field().is_primitive_element(a.value()); }

}  // namespace singerlab
