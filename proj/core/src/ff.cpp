#include "singerlab/ff.hpp"

#include <string>

#include "singerlab/errors.hpp"
#include "singerlab/poly.hpp"

namespace singerlab {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffU;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Field::Field(std::uint32_t p, unsigned k, std::vector<Value> modulus)
    : p_(p), k_(k), q_(static_cast<std::uint32_t>(checked_pow(p, k))), modulus_(std::move(modulus)) {
  id_ = fnv1a(fnv1a(0xcbf29ce484222325ULL, p_), k_);
  for (Value c : modulus_) id_ = fnv1a(id_, c);
  build_tables();
}

std::vector<Value> Field::digits(Value a) const {
  std::vector<Value> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Value Field::from_digits(std::span<const Value> digits) const {
  Value v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i] % p_;
  return v;
}

Value Field::add_digits(Value a, Value b) const {
  if (k_ == 1) return (a + b) % p_;
  Value result = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    result += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return result;
}

// Schoolbook product of the residue polynomials followed by reduction modulo
// the (monic) modulus. Only used while building tables.
Value Field::slow_mul(Value a, Value b) const {
  if (k_ == 1) return static_cast<Value>(static_cast<std::uint64_t>(a) * b % p_);
  const auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (std::size_t d = prod.size(); d-- > k_;) {
    const std::uint64_t lead = prod[d];
    if (lead == 0) continue;
    for (unsigned i = 0; i <= k_; ++i) {
      const std::size_t idx = d - k_ + i;
      prod[idx] = (prod[idx] + (p_ - lead) * modulus_[i]) % p_;
    }
  }
  std::vector<Value> low(k_);
  for (unsigned i = 0; i < k_; ++i) low[i] = static_cast<Value>(prod[i]);
  return from_digits(low);
}

void Field::build_tables() {
  neg_.resize(q_);
  for (Value a = 0; a < q_; ++a) {
    auto d = digits(a);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_[a] = from_digits(d);
  }

  if (q_ <= kFullTableOrder) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Value a = 0; a < q_; ++a) {
      for (Value b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = add_digits(a, b);
        mul_table_[a * q_ + b] = slow_mul(a, b);
      }
    }
  }

  unit_factorization_ = factorize(q_ - 1);
  auto slow_pow = [this](Value a, std::uint64_t e) {
    Value r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  generator_ = 0;
  for (Value a = 1; a < q_ && generator_ == 0; ++a) {
    bool primitive = true;
    for (const auto& [r, e] : unit_factorization_.factors) {
      if (slow_pow(a, (q_ - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator_ = a;
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Value x = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, generator_);
  }
  inv_.assign(q_, 0);
  for (Value a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Value Field::inv(Value a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
  return inv_[a];
}

Value Field::pow(Value a, std::int64_t e) const {
  std::uint64_t ue;
  if (e < 0) {
    a = inv(a);
    ue = static_cast<std::uint64_t>(-(e + 1)) + 1;
  } else {
    ue = static_cast<std::uint64_t>(e);
  }
  if (a == 0) return ue == 0 ? 1 : 0;
  // Exponents reduce modulo the unit group order.
  ue %= (q_ - 1);
  Value r = 1;
  while (ue) {
    if (ue & 1) r = mul(r, a);
    a = mul(a, a);
    ue >>= 1;
  }
  return r;
}

Value Field::frobenius(Value a, std::uint64_t q0) const {
  unsigned j = 0;
  std::uint64_t pj = 1;
  while (pj < q0) {
    pj *= p_;
    ++j;
  }
  if (j == 0 || pj != q0) {
    throw ContractError("frobenius: " + std::to_string(q0) + " is not a power of " + std::to_string(p_));
  }
  if (k_ % j != 0) {
    throw ContractError("frobenius: F_" + std::to_string(q_) + " has no subfield of order " + std::to_string(q0));
  }
  return pow(a, static_cast<std::int64_t>(q0));
}

std::uint64_t Field::element_order(Value a) const {
  if (a == 0) throw ContractError("element_order: zero has no multiplicative order");
  return order_from_bound(q_ - 1, unit_factorization_,
                          [&](std::uint64_t e) { return pow(a, static_cast<std::int64_t>(e)) == 1; });
}

bool Field::is_primitive_element(Value a) const {
  if (a == 0) return false;
  return element_order(a) == q_ - 1;
}

Value Field::from_int(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Value>(((n % p) + p) % p);
}

FieldRef make_field(std::uint32_t p, unsigned k, std::optional<std::vector<Value>> modulus) {
  if (k == 0) throw ContractError("make_field: extension degree must be at least 1");
  if (!is_prime(p)) throw ContractError("make_field: " + std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > Field::kMaxOrder) throw ContractError("make_field: field order exceeds 2^16");
  }

  if (k == 1) {
    if (modulus) {
      Poly m(make_field(p, 1), *modulus);
      if (m.degree() != 1 || !m.is_monic()) {
        throw ContractError("make_field: modulus must be monic of degree 1 for a prime field");
      }
    }
    // Every degree-1 modulus gives the same residues; canonicalize to x.
    return FieldRef(new Field(p, 1, {0, 1}));
  }

  const FieldRef prime = make_field(p, 1);
  std::vector<Value> chosen;
  if (modulus) {
    Poly m(prime, *modulus);
    if (m.degree() != static_cast<int>(k) || !m.is_monic()) {
      throw ContractError("make_field: modulus must be monic of degree " + std::to_string(k));
    }
    if (!is_irreducible(m)) throw ContractError("make_field: modulus " + to_text(m) + " is reducible");
    chosen = m.coeffs();
  } else {
    for (const Poly& f : enumerate_monic(k, prime, true)) {
      if (is_irreducible(f)) {
        chosen = f.coeffs();
        break;
      }
    }
  }
  return FieldRef(new Field(p, k, std::move(chosen)));
}

}  // namespace singerlab
