#include "singerlab/reflect.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "singerlab/errors.hpp"

namespace singerlab {

namespace {

Vector decode(std::uint64_t idx, std::size_t n, std::uint32_t q) {
  Vector v(n);
  for (auto& x : v) {
    x = static_cast<Value>(idx % q);
    idx /= q;
  }
  return v;
}

Value dot(const Field& F, std::span<const Value> a, std::span<const Value> b) {
  Value acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
  return acc;
}

Matrix block_extend(const Matrix& s, std::size_t n) {
  const std::size_t r = s.n();
  std::vector<Value> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) e[i * n + j] = s(i, j);
  }
  return {s.field_ref(), n, std::move(e)};
}

}  // namespace

Matrix reflection_matrix(const FieldRef& field, const ReflectionParam& param) {
  const std::size_t n = param.phi.size();
  if (param.w.size() != n) throw ContractError("reflection_matrix: phi and w lengths differ");
  const Field& F = *field;
  if (F.add(1, dot(F, param.phi, param.w)) == 0) throw ContractError("reflection_matrix: 1 + phi(w) = 0");
  std::vector<Value> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = F.add(i == j ? 1 : 0, F.mul(param.w[i], param.phi[j]));
  }
  return {field, n, std::move(e)};
}

std::optional<ReflectionParam> reflection_param(const Matrix& t) {
  if (!is_reflection(t)) return std::nullopt;
  const Field& F = t.field();
  const std::size_t n = t.n();
  const Matrix d = t - Matrix::identity(t.field_ref(), n);
  // t - I = w phi has rank one; phi is its first nonzero row, normalized.
  std::size_t row = 0;
  while (std::all_of(d.entries().begin() + static_cast<std::ptrdiff_t>(row * n),
                     d.entries().begin() + static_cast<std::ptrdiff_t>((row + 1) * n), [](Value v) { return v == 0; })) {
    ++row;
  }
  ReflectionParam p{Vector(n), Vector(n)};
  std::size_t lead = 0;
  while (d(row, lead) == 0) ++lead;
  const Value inv = F.inv(d(row, lead));
  for (std::size_t j = 0; j < n; ++j) p.phi[j] = F.mul(d(row, j), inv);
  for (std::size_t i = 0; i < n; ++i) p.w[i] = d(i, lead);
  return p;
}

bool is_reflection(const Matrix& m) { return det(m) != 0 && reflection_length(m) == 1; }

std::size_t reflection_length(const Matrix& g) { return rank(g - Matrix::identity(g.field_ref(), g.n())); }

ReflectionSet::ReflectionSet(std::size_t n, FieldRef field, std::uint64_t budget)
    : n_(n), field_(std::move(field)) {
  const Field& F = *field_;
  const std::uint64_t qn = checked_pow(F.q(), static_cast<unsigned>(n));
  std::uint64_t work = 0;
  for (std::uint64_t pi = 1; pi < qn; ++pi) {
    Vector phi = decode(pi, n, F.q());
    const auto lead = std::find_if(phi.begin(), phi.end(), [](Value v) { return v != 0; });
    if (*lead != 1) continue;
    for (std::uint64_t wi = 1; wi < qn; ++wi) {
      if (++work > budget) throw BudgetExceeded("enumerate_reflections: budget exceeded");
      ReflectionParam p{phi, decode(wi, n, F.q())};
      if (F.add(1, dot(F, p.phi, p.w)) == 0) continue;
      Matrix t = reflection_matrix(field_, p);
      inverses_.push_back(inverse(t));
      reflections_.push_back(std::move(t));
    }
  }
}

std::shared_ptr<const ReflectionSet> ReflectionSet::get(std::size_t n, const FieldRef& field) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, std::uint64_t>, std::shared_ptr<const ReflectionSet>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, field->id()}];
  if (!slot) slot = std::make_shared<const ReflectionSet>(n, field);
  return slot;
}

std::vector<Matrix> enumerate_reflections(std::size_t n, const FieldRef& field, std::uint64_t budget) {
  return ReflectionSet(n, field, budget).reflections();
}

Matrix product_of(const std::vector<Matrix>& factors, const FieldRef& field, std::size_t n) {
  Matrix p = Matrix::identity(field, n);
  for (const auto& f : factors) p = p * f;
  return p;
}

FactorizationList minimal_factorization(const Matrix& g) {
  if (det(g) == 0) throw ContractError("minimal_factorization: matrix is singular");
  FactorizationList out{{}, g};
  std::size_t k = reflection_length(g);
  if (k == 0) return out;
  const auto refl = ReflectionSet::get(g.n(), g.field_ref());
  Matrix rest = g;
  while (k > 0) {
    bool advanced = false;
    for (std::size_t i = 0; i < refl->size(); ++i) {
      Matrix cand = refl->inverses()[i] * rest;
      if (reflection_length(cand) + 1 == k) {
        out.factors.push_back(refl->reflections()[i]);
        rest = std::move(cand);
        --k;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("minimal_factorization: no length-reducing reflection");
  }
  return out;
}

void for_each_minimal_factorization(const Matrix& g, const FactorizationVisitor& visit, const FactorFilter& filter,
                                    std::uint64_t budget) {
  if (det(g) == 0) throw ContractError("for_each_minimal_factorization: matrix is singular");
  const std::size_t k = reflection_length(g);
  std::vector<Matrix> prefix;
  if (k == 0) {
    visit(prefix);
    return;
  }
  const auto refl = ReflectionSet::get(g.n(), g.field_ref());
  std::vector<bool> allowed(refl->size(), true);
  if (filter) {
    for (std::size_t i = 0; i < refl->size(); ++i) allowed[i] = filter(refl->reflections()[i]);
  }
  std::uint64_t work = 0;
  bool stop = false;

  // `rest` = (t_1 ... t_i)^-1 g, which has reflection length k - i.
  std::function<void(const Matrix&, std::size_t)> dfs = [&](const Matrix& rest, std::size_t remaining) {
    if (remaining == 1) {
      if (filter && !filter(rest)) return;
      prefix.push_back(rest);
      if (!visit(prefix)) stop = true;
      prefix.pop_back();
      return;
    }
    for (std::size_t i = 0; i < refl->size() && !stop; ++i) {
      if (!allowed[i]) continue;
      if (++work > budget) throw BudgetExceeded("minimal factorization enumeration exceeded its budget");
      Matrix cand = refl->inverses()[i] * rest;
      if (reflection_length(cand) + 1 != remaining) continue;
      prefix.push_back(refl->reflections()[i]);
      dfs(cand, remaining - 1);
      prefix.pop_back();
    }
  };
  dfs(g, k);
}

std::vector<FactorizationList> enumerate_minimal_factorizations(const Matrix& g, std::uint64_t budget) {
  std::vector<FactorizationList> out;
  for_each_minimal_factorization(
      g,
      [&](const std::vector<Matrix>& f) {
        out.push_back({f, g});
        return true;
      },
      {}, budget);
  return out;
}

FactorizationList stabilizing_factorization(const Matrix& g, const Subspace& w) {
  const std::size_t n = g.n();
  const std::size_t r = w.dim();
  if (r == 0 || r == n) throw ContractError("stabilizing_factorization: W must be a nontrivial proper subspace");
  if (!stabilizes(g, w)) throw ContractError("stabilizing_factorization: g does not stabilize W");
  if (det(g) == 0) throw ContractError("stabilizing_factorization: matrix is singular");
  const FieldRef& field = g.field_ref();
  const Field& F = *field;
  const std::size_t m = n - r;

  std::vector<std::size_t> comp;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::find(w.pivots().begin(), w.pivots().end(), j) == w.pivots().end()) comp.push_back(j);
  }
  std::vector<Vector> cols = w.basis();
  for (std::size_t j : comp) {
    Vector e(n, 0);
    e[j] = 1;
    cols.push_back(std::move(e));
  }
  const Matrix basis = Matrix::from_columns(field, cols);
  const Matrix in_basis = inverse(basis) * g * basis;  // [[A, B], [0, D]]

  std::vector<Vector> a_minus_i(r, Vector(r));
  std::vector<Value> d_entries(m * m);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a_minus_i[i][j] = F.sub(in_basis(i, j), i == j ? 1 : 0);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) d_entries[i * m + j] = in_basis(r + i, r + j);
  }
  auto b_times = [&](const Vector& y) {
    Vector z(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < m; ++j) z[i] = F.add(z[i], F.mul(in_basis(i, r + j), y[j]));
    }
    return z;
  };

  // Y0 = {y in fix(D) : B y in im(A - I)}. Shear U by X with (A - I) X y = -B y on Y0
  // so that the new B' = B + AX - XD vanishes exactly there.
  const auto fix_d = fixed_space(Matrix(field, m, d_entries)).basis();
  std::vector<Vector> y0;
  if (!fix_d.empty()) {
    // Columns: B y_1 .. B y_s, then A - I; kernel vectors are (lambda, x).
    const std::size_t s = fix_d.size();
    std::vector<Vector> system(r, Vector(s + r, 0));
    for (std::size_t c = 0; c < s; ++c) {
      const Vector z = b_times(fix_d[c]);
      for (std::size_t i = 0; i < r; ++i) system[i][c] = z[i];
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) system[i][s + j] = a_minus_i[i][j];
    }
    std::vector<Vector> lambdas;
    for (const auto& v : nullspace(F, system, s + r)) lambdas.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(s));
    const Subspace lambda_space(field, s, lambdas);
    for (const auto& lambda : lambda_space.basis()) {
      Vector y(m, 0);
      for (std::size_t c = 0; c < s; ++c) {
        for (std::size_t i = 0; i < m; ++i) y[i] = F.add(y[i], F.mul(lambda[c], fix_d[c][i]));
      }
      y0.push_back(std::move(y));
    }
  }

  std::vector<Vector> shifted = cols;
  if (!y0.empty()) {
    // X is determined on a basis S = (y0..., standard completions) of F^m: X S = [x..., 0...].
    std::vector<Vector> s_cols = y0;
    std::vector<Vector> x_cols;
    for (const auto& y : y0) {
      Vector rhs = b_times(y);
      for (auto& v : rhs) v = F.neg(v);
      auto x = solve(F, a_minus_i, rhs);
      if (!x) throw std::logic_error("stabilizing_factorization: shear equation unsolvable");
      x_cols.push_back(std::move(*x));
    }
    for (std::size_t j = 0; j < m && s_cols.size() < m; ++j) {
      Vector e(m, 0);
      e[j] = 1;
      if (!Subspace(field, m, s_cols).contains(e)) s_cols.push_back(std::move(e));
    }
    const Matrix s_inv = inverse(Matrix::from_columns(field, s_cols));
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t i = 0; i < r; ++i) {
        Value xic = 0;
        for (std::size_t j = 0; j < x_cols.size(); ++j) xic = F.add(xic, F.mul(x_cols[j][i], s_inv(j, c)));
        if (xic == 0) continue;
        for (std::size_t t = 0; t < n; ++t) shifted[r + c][t] = F.add(shifted[r + c][t], F.mul(xic, cols[i][t]));
      }
    }
  }

  const Matrix p = Matrix::from_columns(field, shifted);
  const Matrix p_inv = inverse(p);
  std::vector<Value> a_entries(r * r);
  const Matrix conj = p_inv * g * p;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a_entries[i * r + j] = conj(i, j);
  }

  FactorizationList out{{}, g};
  Matrix on_w = Matrix::identity(field, n);
  for (const auto& s : minimal_factorization(Matrix(field, r, a_entries)).factors) {
    Matrix t = p * block_extend(s, n) * p_inv;
    on_w = on_w * t;
    out.factors.push_back(std::move(t));
  }
  for (auto& t : minimal_factorization(inverse(on_w) * g).factors) out.factors.push_back(std::move(t));

  if (out.factors.size() != reflection_length(g) || !(product_of(out.factors, field, n) == g)) {
    throw std::logic_error("stabilizing_factorization: construction is not minimal for " + to_text(g));
  }
  return out;
}

std::vector<FactorizationList> factorizations_in_det_subgroup(const Matrix& g, Value generator, std::uint64_t budget) {
  const Field& F = g.field();
  if (generator == 0 || !F.contains(generator)) throw ContractError("factorizations_in_det_subgroup: bad generator");
  std::vector<bool> in_x(F.q(), false);
  Value x = 1;
  do {
    in_x[x] = true;
    x = F.mul(x, generator);
  } while (x != 1);
  if (!in_x[det(g)]) {
    throw ContractError("factorizations_in_det_subgroup: det(g) is not in the subgroup generated by " +
                        std::to_string(generator));
  }
  std::vector<FactorizationList> out;
  for_each_minimal_factorization(
      g,
      [&](const std::vector<Matrix>& f) {
        out.push_back({f, g});
        return true;
      },
      [&](const Matrix& t) { return in_x[det(t)]; }, budget);
  return out;
}

}  // namespace singerlab
