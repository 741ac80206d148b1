#include "singerlab/poly.hpp"

#include <charconv>
#include <sstream>

#include "singerlab/errors.hpp"
#include "singerlab/matrix.hpp"

namespace singerlab {

namespace {

void trim(std::vector<Value>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void check_same_field([[maybe_unused]] const Poly& a, [[maybe_unused]] const Poly& b) {
  assert(a.field() == b.field());
}

}  // namespace

Poly::Poly(FieldRef field, std::vector<Value> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Value c : coeffs_) {
    if (!field_->contains(c)) throw ContractError("Poly: coefficient " + std::to_string(c) + " outside the field");
  }
  trim(coeffs_);
}

Poly Poly::monomial(FieldRef field, Value c, unsigned d) {
  std::vector<Value> coeffs(d + 1, 0);
  coeffs[d] = c;
  return {std::move(field), std::move(coeffs)};
}

Value Poly::eval(Value at) const {
  Value r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = field_->add(field_->mul(r, at), coeffs_[i]);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Field& F = a.field();
  std::vector<Value> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return {a.field_ref(), std::move(c)};
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Field& F = a.field();
  std::vector<Value> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return {a.field_ref(), std::move(c)};
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_ref());
  const Field& F = a.field();
  std::vector<Value> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = F.add(c[i + j], F.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return {a.field_ref(), std::move(c)};
}

Poly scale(const Poly& a, Value s) {
  std::vector<Value> c(a.coeffs());
  for (auto& v : c) v = a.field().mul(v, s);
  return {a.field_ref(), std::move(c)};
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Field& F = a.field();
  std::vector<Value> rem(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {Poly::zero(a.field_ref()), a};
  std::vector<Value> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Value lead_inv = F.inv(b.leading());
  for (int d = a.degree(); d >= db; --d) {
    const Value c = F.mul(rem[static_cast<std::size_t>(d)], lead_inv);
    quot[static_cast<std::size_t>(d - db)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) {
      auto& slot = rem[static_cast<std::size_t>(d - db + i)];
      slot = F.sub(slot, F.mul(c, b.coeffs()[static_cast<std::size_t>(i)]));
    }
  }
  return {Poly(a.field_ref(), std::move(quot)), Poly(a.field_ref(), std::move(rem))};
}

Poly mod(const Poly& a, const Poly& m) { return divrem(a, m).second; }

Poly make_monic(const Poly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scale(f, f.field().inv(f.leading()));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

Poly powmod(const Poly& f, std::uint64_t e, const Poly& m) {
  Poly result = mod(Poly::constant(f.field_ref(), 1), m);
  Poly base = mod(f, m);
  while (e) {
    if (e & 1) result = mod(result * base, m);
    base = mod(base * base, m);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw ContractError("is_irreducible: constant polynomial " + to_text(f));
  const Poly g = make_monic(f);
  const auto n = static_cast<unsigned>(g.degree());
  if (n == 1) return true;
  const std::uint64_t q = g.field().q();
  const Poly x = Poly::x(g.field_ref());

  // frob[j] = x^(q^j) mod g
  std::vector<Poly> frob{mod(x, g)};
  for (unsigned j = 1; j <= n; ++j) frob.push_back(powmod(frob.back(), q, g));
  if (!(frob[n] == mod(x, g))) return false;
  for (std::uint64_t r : factorize(n).primes()) {
    if (gcd(frob[n / r] - x, g).degree() != 0) return false;
  }
  return true;
}

std::uint64_t order_of_x(const Poly& f) {
  const Poly g = make_monic(f);
  if (g.degree() < 1 || g.coeff(0) == 0) throw ContractError("order_of_x: need f(0) != 0");
  const auto n = static_cast<unsigned>(g.degree());
  const std::uint64_t bound = checked_pow(g.field().q(), n) - 1;
  const Poly x = Poly::x(g.field_ref());
  const Poly one = mod(Poly::constant(g.field_ref(), 1), g);
  if (!(powmod(x, bound, g) == one)) {
    throw ContractError("order_of_x: " + to_text(f) + " is not irreducible");
  }
  return order_from_bound(bound, cached_factorization(bound),
                          [&](std::uint64_t e) { return powmod(x, e, g) == one; });
}

bool is_primitive_poly(const Poly& f) {
  if (!f.is_monic()) throw ContractError("is_primitive_poly: " + to_text(f) + " is not monic");
  if (f.degree() < 1) throw ContractError("is_primitive_poly: constant polynomial");
  if (f.coeff(0) == 0) return false;
  if (!is_irreducible(f)) return false;
  const std::uint64_t bound = checked_pow(f.field().q(), static_cast<unsigned>(f.degree())) - 1;
  const Poly x = Poly::x(f.field_ref());
  const Poly one = mod(Poly::constant(f.field_ref(), 1), f);
  for (std::uint64_t r : cached_factorization(bound).primes()) {
    if (powmod(x, bound / r, f) == one) return false;
  }
  return true;
}

Matrix companion(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw ContractError("companion: need a monic polynomial of degree >= 1");
  const auto n = static_cast<std::size_t>(f.degree());
  const Field& F = f.field();
  std::vector<Value> entries(n * n, 0);
  for (std::size_t i = 1; i < n; ++i) entries[i * n + (i - 1)] = 1;
  for (std::size_t i = 0; i < n; ++i) entries[i * n + (n - 1)] = F.neg(f.coeff(i));
  return Matrix(f.field_ref(), n, std::move(entries));
}

std::vector<Poly> enumerate_monic(unsigned n, const FieldRef& field, bool nonzero_constant) {
  if (n == 0) throw ContractError("enumerate_monic: degree must be at least 1");
  const std::uint32_t q = field->q();
  const std::uint64_t total = checked_pow(q, n);
  std::vector<Poly> out;
  out.reserve(total);
  std::vector<Value> c(n + 1, 0);
  c[n] = 1;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    // (c_0, ..., c_{n-1}) as a base-q numeral with c_0 most significant.
    std::uint64_t rest = idx;
    for (unsigned i = n; i-- > 0;) {
      c[i] = static_cast<Value>(rest % q);
      rest /= q;
    }
    if (nonzero_constant && c[0] == 0) continue;
    out.emplace_back(field, c);
  }
  return out;
}

std::vector<Poly> enumerate_irreducible(unsigned n, const FieldRef& field) {
  std::vector<Poly> out;
  for (auto& f : enumerate_monic(n, field, n > 1)) {
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Poly> enumerate_primitive(unsigned n, const FieldRef& field) {
  std::vector<Poly> out;
  for (auto& f : enumerate_monic(n, field, true)) {
    if (is_primitive_poly(f)) out.push_back(std::move(f));
  }
  return out;
}

Poly find_primitive_poly(unsigned n, const FieldRef& field) {
  for (auto& f : enumerate_monic(n, field, true)) {
    if (is_primitive_poly(f)) return f;
  }
  throw ContractError("find_primitive_poly: none found");  // unreachable for valid fields
}

std::string to_text(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) os << ',';
    os << f.coeffs()[i];
  }
  return os.str();
}

Poly parse_poly(std::string_view text, const FieldRef& field) {
  std::vector<Value> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    Value v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("bad polynomial coefficient '" + std::string(tok) + "' in \"" + std::string(text) + "\"");
    }
    if (!field->contains(v)) {
      throw ParseError("coefficient " + std::to_string(v) + " not in F_" + std::to_string(field->q()));
    }
    coeffs.push_back(v);
    pos = end + 1;
  }
  return {field, std::move(coeffs)};
}

std::size_t PolyHash::operator()(const Poly& f) const noexcept {
  std::size_t h = f.field().id();
  for (Value c : f.coeffs()) h = h * 1000003U ^ c;
  return h;
}

}  // namespace singerlab
