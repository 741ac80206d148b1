#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singerlab/ff.hpp"

namespace singerlab {

class Matrix;

/// Polynomial over F_q, coefficients little-endian with no trailing zeros.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly(FieldRef field, std::vector<Value> coeffs);

  static Poly zero(FieldRef field) { return {std::move(field), {}}; }
  static Poly constant(FieldRef field, Value c) { return {std::move(field), {c}}; }
  static Poly x(FieldRef field) { return {std::move(field), {0, 1}}; }
  /// c * x^d
  static Poly monomial(FieldRef field, Value c, unsigned d);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Coefficient of x^i; zero past the degree.
  Value coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Value leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  const std::vector<Value>& coeffs() const { return coeffs_; }
  const Field& field() const { return *field_; }
  const FieldRef& field_ref() const { return field_; }

  Value eval(Value at) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return *a.field_ == *b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldRef field_;
  std::vector<Value> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
/// Scales by a field constant.
Poly scale(const Poly& a, Value c);

/// Quotient and remainder. Throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& m);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly make_monic(const Poly& f);
/// f^e mod m by square-and-multiply.
Poly powmod(const Poly& f, std::uint64_t e, const Poly& m);

/// Rabin's irreducibility test. Throws ContractError for constants.
bool is_irreducible(const Poly& f);
/// Irreducible and x has order q^n - 1 modulo f. Throws ContractError for
/// non-monic input.
bool is_primitive_poly(const Poly& f);
/// Multiplicative order of x in F_q[x]/(f). Requires f irreducible with
/// f(0) != 0.
std::uint64_t order_of_x(const Poly& f);

/// Companion matrix: subdiagonal ones and last column (-a_0, ..., -a_{n-1}).
/// Throws ContractError for non-monic or constant input.
Matrix companion(const Poly& f);

/// All monic polynomials of degree n ordered lexicographically on
/// (c_0, c_1, ..., c_{n-1}). With nonzero_constant, c_0 = 0 is skipped.
std::vector<Poly> enumerate_monic(unsigned n, const FieldRef& field, bool nonzero_constant);
/// Monic irreducible polynomials of degree n in enumerate_monic order.
std::vector<Poly> enumerate_irreducible(unsigned n, const FieldRef& field);
/// Primitive polynomials of degree n in enumerate_monic order.
std::vector<Poly> enumerate_primitive(unsigned n, const FieldRef& field);
/// First primitive polynomial of degree n in enumerate_monic order.
Poly find_primitive_poly(unsigned n, const FieldRef& field);

/// "c0,c1,..." with integer encodings; "0" for the zero polynomial.
std::string to_text(const Poly& f);
/// Inverse of to_text. Throws ParseError.
Poly parse_poly(std::string_view text, const FieldRef& field);

struct PolyHash {
  std::size_t operator()(const Poly& f) const noexcept;
};

}  // namespace singerlab
