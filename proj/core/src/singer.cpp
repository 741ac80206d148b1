#include "singerlab/singer.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "singerlab/errors.hpp"

namespace singerlab {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

// Casts a residue of F_q[x]/(f) down to F_q; it must be a constant.
Value rational_constant(const Poly& residue, const char* what) {
  if (residue.degree() > 0) {
    throw std::logic_error(std::string("normalizer_reflection: ") + what + " is not in F_q");
  }
  return residue.coeff(0);
}

}  // namespace

// ---------------------------------------------------------------------------
// EmbeddingBasis

EmbeddingBasis::EmbeddingBasis(FieldRef ground, unsigned n) : ground_(std::move(ground)) {
  if (n == 0) throw ContractError("EmbeddingBasis: degree must be at least 1");
  ext_ = make_field(ground_->p(), ground_->k() * n);
  const Value x_class = ext_->k() == 1 ? 1 : ext_->p();
  Value power = 1;
  for (unsigned i = 0; i < n; ++i) {
    basis_.push_back(power);
    power = ext_->mul(power, x_class);
  }
  build();
}

EmbeddingBasis::EmbeddingBasis(FieldRef ground, FieldRef ext, std::vector<Value> basis)
    : ground_(std::move(ground)), ext_(std::move(ext)), basis_(std::move(basis)) {
  build();
}

void EmbeddingBasis::build() {
  const unsigned n = degree();
  if (ext_->p() != ground_->p() || ext_->k() != ground_->k() * n) {
    throw ContractError("EmbeddingBasis: extension field has the wrong order");
  }
  for (Value b : basis_) {
    if (!ext_->contains(b)) throw ContractError("EmbeddingBasis: basis element outside the extension");
  }

  const Field& G = *ground_;
  const Field& E = *ext_;
  lift_.assign(G.q(), 0);
  if (G.k() == 1) {
    for (Value v = 0; v < G.q(); ++v) lift_[v] = v;
  } else {
    // A root of the ground modulus inside the extension plays the role of its generator.
    Value beta = 0;
    bool found = false;
    for (Value cand = 0; cand < E.q() && !found; ++cand) {
      Value acc = 0;
      const auto& m = G.modulus();
      for (std::size_t i = m.size(); i-- > 0;) acc = E.add(E.mul(acc, cand), m[i]);
      if (acc == 0) {
        beta = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("EmbeddingBasis: ground modulus has no root in the extension");
    for (Value v = 0; v < G.q(); ++v) {
      const auto d = G.digits(v);
      Value acc = 0;
      for (std::size_t i = d.size(); i-- > 0;) acc = E.add(E.mul(acc, beta), d[i]);
      lift_[v] = acc;
    }
  }

  coord_index_.assign(E.q(), kUnset);
  std::vector<Value> c(n, 0);
  for (std::uint32_t idx = 0; idx < E.q(); ++idx) {
    Value e = 0;
    for (unsigned i = 0; i < n; ++i) e = E.add(e, E.mul(lift_[c[i]], basis_[i]));
    if (coord_index_[e] != kUnset) throw ContractError("EmbeddingBasis: basis is not linearly independent");
    coord_index_[e] = idx;
    for (unsigned i = 0; i < n; ++i) {
      if (++c[i] < G.q()) break;
      c[i] = 0;
    }
  }
}

Vector EmbeddingBasis::coordinates(Value ext_value) const {
  std::uint32_t idx = coord_index_.at(ext_value);
  Vector c(degree());
  for (auto& v : c) {
    v = idx % ground_->q();
    idx /= ground_->q();
  }
  return c;
}

bool EmbeddingBasis::is_field_generator(Value ext_value) const {
  Value x = ext_value;
  for (unsigned j = 1; j <= degree(); ++j) {
    x = ext_->pow(x, ground_->q());
    if (x == ext_value) return j == degree();
  }
  return false;
}

Matrix embed(Value alpha, const EmbeddingBasis& basis) {
  if (alpha == 0) throw ContractError("embed: zero is not invertible");
  std::vector<Vector> cols;
  for (Value b : basis.basis()) cols.push_back(basis.coordinates(basis.ext()->mul(alpha, b)));
  return Matrix::from_columns(basis.ground(), cols);
}

// ---------------------------------------------------------------------------
// Characterizations

bool is_irreducible_element(const Matrix& g) { return is_irreducible(char_poly(g)); }

bool is_irreducible_oracle(const Matrix& g, std::uint64_t budget) {
  for (std::size_t d = 1; d < g.n(); ++d) {
    for (const auto& w : enumerate_subspaces(g.n(), g.field_ref(), d, budget)) {
      if (stabilizes(g, w)) return false;
    }
  }
  return true;
}

bool is_singer(const Matrix& g) { return is_primitive_poly(char_poly(g)); }

std::optional<Matrix> cyclic_basis(const Matrix& g) {
  const std::size_t n = g.n();
  const std::uint32_t q = g.field().q();
  Vector v(n, 0);
  while (true) {
    std::size_t i = 0;
    while (i < n && ++v[i] == q) v[i++] = 0;
    if (i == n) return std::nullopt;
    if (cyclic_span(g, v).dim() == n) {
      std::vector<Vector> cols{v};
      for (std::size_t j = 1; j < n; ++j) cols.push_back(apply_vec(g, cols.back()));
      return Matrix::from_columns(g.field_ref(), cols);
    }
  }
}

std::uint64_t orbit_size(const Matrix& g, std::span<const Value> v) {
  const Vector start(v.begin(), v.end());
  Vector cur = apply_vec(g, start);
  std::uint64_t size = 1;
  while (cur != start) {
    cur = apply_vec(g, cur);
    ++size;
  }
  return size;
}

EquivalenceContext::EquivalenceContext(std::size_t n_, const FieldRef& field_)
    : n(n_), field(field_), embedding(field_, static_cast<unsigned>(n_)), classes(conjugacy_classes(n_, field_)) {
  const Field& E = *embedding.ext();
  for (Value alpha = 1; alpha < E.q(); ++alpha) {
    const std::size_t id = classes.class_of.at(embed(alpha, embedding));
    if (E.is_primitive_element(alpha)) primitive_image_classes.insert(id);
    if (embedding.is_field_generator(alpha)) generator_image_classes.insert(id);
  }
  for (const auto& f : enumerate_irreducible(static_cast<unsigned>(n), field)) {
    if (f.coeff(0) == 0) continue;
    max_irreducible_order = std::max(max_irreducible_order, order_of_x(f));
  }
}

bool SingerConditions::all_agree() const {
  const bool v = embedded_primitive;
  return irreducible_max_order == v && order_is_maximal == v && char_poly_primitive == v && transitive == v &&
         primitive_eigenvalue == v;
}

bool IrreducibleConditions::all_agree() const {
  return char_poly_irreducible == embedded_generator && no_invariant_subspace == embedded_generator;
}

SingerConditions singer_oracles(const Matrix& g, const EquivalenceContext& ctx) {
  const std::uint64_t full = checked_pow(g.field().q(), static_cast<unsigned>(g.n())) - 1;
  const std::uint64_t order = matrix_order(g);
  SingerConditions s;
  s.embedded_primitive = ctx.primitive_image_classes.count(ctx.classes.class_of.at(g)) > 0;
  s.irreducible_max_order = order == ctx.max_irreducible_order && is_irreducible_oracle(g);
  s.order_is_maximal = order == full;
  s.char_poly_primitive = is_singer(g);
  Vector e1(g.n(), 0);
  e1[0] = 1;
  s.transitive = orbit_size(g, e1) == full;

  const Poly f = char_poly(g);
  const Field& E = *ctx.embedding.ext();
  for (Value alpha = 1; alpha < E.q() && !s.primitive_eigenvalue; ++alpha) {
    Value acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = E.add(E.mul(acc, alpha), ctx.embedding.lift(f.coeffs()[i]));
    if (acc == 0 && E.is_primitive_element(alpha)) s.primitive_eigenvalue = true;
  }
  return s;
}

IrreducibleConditions irreducible_oracles(const Matrix& g, const EquivalenceContext& ctx) {
  IrreducibleConditions c;
  c.embedded_generator = ctx.generator_image_classes.count(ctx.classes.class_of.at(g)) > 0;
  c.char_poly_irreducible = is_irreducible_element(g);
  c.no_invariant_subspace = is_irreducible_oracle(g);
  return c;
}

// ---------------------------------------------------------------------------
// Normalizing reflections for n = 2

Matrix normalizer_reflection(const Matrix& c) {
  if (c.n() != 2) throw ContractError("normalizer_reflection: only defined for n = 2");
  if (!is_singer(c)) throw ContractError("normalizer_reflection: " + to_text(c) + " is not a Singer cycle");
  const FieldRef& field = c.field_ref();
  const Field& F = *field;
  const std::uint64_t q = F.q();

  const Matrix basis = *cyclic_basis(c);
  const Matrix basis_inv = inverse(basis);
  const Poly f = char_poly(c);
  if (!(basis_inv * c * basis == companion(f))) throw std::logic_error("normalizer_reflection: bad companion basis");

  // zeta = class of x in F_q[x]/(f); its Frobenius conjugate is zeta^q.
  const Poly zeta = Poly::x(field);
  const Poly zeta_q = powmod(zeta, q, f);
  const Value trace = rational_constant(mod(zeta + zeta_q, f), "zeta + zeta^q");
  const Value norm = rational_constant(mod(zeta * zeta_q, f), "zeta^(q+1)");
  if (trace != F.neg(f.coeff(1)) || norm != f.coeff(0)) {
    throw std::logic_error("normalizer_reflection: eigenvalues disagree with the characteristic polynomial");
  }
  const std::uint64_t unit_order = q * q - 1;
  const Poly inv_sum = powmod(zeta, unit_order - 1, f) + powmod(zeta, unit_order - q, f);
  const Value corner = F.neg(rational_constant(mod(inv_sum, f), "zeta^-1 + zeta^-q"));

  const std::vector<Value> t_entries{1, 0, corner, F.neg(1)};
  const Matrix t_companion(field, 2, t_entries);
  return basis * t_companion * basis_inv;
}

std::vector<Matrix> normalizing_reflections(const Matrix& c) {
  const Matrix t = normalizer_reflection(c);
  const Matrix c_inv = inverse(c);
  std::vector<Matrix> out;
  Matrix ck = Matrix::identity(c.field_ref(), 2);
  Matrix ck_inv = ck;
  for (std::uint32_t k = 0; k <= c.field().q(); ++k) {
    Matrix r = ck * t * ck_inv;
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    ck = c * ck;
    ck_inv = ck_inv * c_inv;
  }
  return out;
}

}  // namespace singerlab
