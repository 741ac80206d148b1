#include "singerlab/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "singerlab/errors.hpp"

namespace singerlab {

namespace {

struct Echelon {
  std::vector<Vector> rows;  // nonzero rows only
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form of an arbitrary list of rows of length `cols`.
Echelon rref(const Field& F, std::vector<Vector> rows, std::size_t cols) {
  Echelon out;
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < rows.size(); ++col) {
    std::size_t pivot = top;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[top], rows[pivot]);
    const Value scale = F.inv(rows[top][col]);
    for (auto& v : rows[top]) v = F.mul(v, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][col] == 0) continue;
      const Value factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] = F.sub(rows[r][c], F.mul(factor, rows[top][c]));
    }
    out.pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  out.rows = std::move(rows);
  return out;
}

std::vector<Vector> rows_of(const Matrix& a) {
  std::vector<Vector> rows(a.n(), Vector(a.n()));
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) rows[i][j] = a(i, j);
  }
  return rows;
}

// Basis of {v : M v = 0} for the matrix whose rows are `rows`.
std::vector<Vector> nullspace_basis(const Field& F, std::vector<Vector> rows, std::size_t cols) {
  const Echelon e = rref(F, std::move(rows), cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = F.neg(e.rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

void check_compatible(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n()) throw ContractError("matrix dimension mismatch");
  assert(a.field() == b.field());
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(FieldRef field, std::size_t n, std::vector<Value> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw ContractError("Matrix: expected n*n entries");
  for (Value v : entries_) {
    if (!field_->contains(v)) throw ContractError("Matrix: entry " + std::to_string(v) + " outside the field");
  }
}

Matrix Matrix::identity(FieldRef field, std::size_t n) {
  std::vector<Value> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return {std::move(field), n, std::move(e)};
}

Matrix Matrix::zero(FieldRef field, std::size_t n) { return {std::move(field), n, std::vector<Value>(n * n, 0)}; }

Matrix Matrix::diagonal(FieldRef field, std::span<const Value> diag) {
  const std::size_t n = diag.size();
  std::vector<Value> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return {std::move(field), n, std::move(e)};
}

Matrix Matrix::from_columns(FieldRef field, std::span<const Vector> columns) {
  const std::size_t n = columns.size();
  std::vector<Value> e(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].size() != n) throw ContractError("from_columns: column length mismatch");
    for (std::size_t i = 0; i < n; ++i) e[i * n + j] = columns[j][i];
  }
  return {std::move(field), n, std::move(e)};
}

Vector Matrix::column(std::size_t j) const {
  Vector v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if ((*this)(i, j) != (i == j ? 1U : 0U)) return false;
    }
  }
  return true;
}

std::size_t MatrixHash::operator()(const Matrix& m) const noexcept {
  std::size_t h = m.field().id() ^ (m.n() * 0x9e3779b97f4a7c15ULL);
  for (Value v : m.entries()) h = (h ^ v) * 0x100000001b3ULL;
  return h;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_compatible(a, b);
  const Field& F = a.field();
  const std::size_t n = a.n();
  std::vector<Value> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Value aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        Value& slot = e[i * n + j];
        slot = F.add(slot, F.mul(aik, b(k, j)));
      }
    }
  }
  return {a.field_ref(), n, std::move(e)};
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_compatible(a, b);
  std::vector<Value> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.field().add(a.entries()[i], b.entries()[i]);
  return {a.field_ref(), a.n(), std::move(e)};
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_compatible(a, b);
  std::vector<Value> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.field().sub(a.entries()[i], b.entries()[i]);
  return {a.field_ref(), a.n(), std::move(e)};
}

Vector apply_vec(const Matrix& a, std::span<const Value> v) {
  if (v.size() != a.n()) throw ContractError("apply: vector length mismatch");
  const Field& F = a.field();
  Vector out(a.n(), 0);
  for (std::size_t i = 0; i < a.n(); ++i) {
    Value acc = 0;
    for (std::size_t j = 0; j < a.n(); ++j) acc = F.add(acc, F.mul(a(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  std::vector<Value> e(a.entries().size());
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) e[j * a.n() + i] = a(i, j);
  }
  return {a.field_ref(), a.n(), std::move(e)};
}

Value det(const Matrix& a) {
  const Field& F = a.field();
  auto rows = rows_of(a);
  const std::size_t n = a.n();
  Value result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      result = F.neg(result);
    }
    result = F.mul(result, rows[col][col]);
    const Value inv = F.inv(rows[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r][col] == 0) continue;
      const Value factor = F.mul(rows[r][col], inv);
      for (std::size_t c = col; c < n; ++c) rows[r][c] = F.sub(rows[r][c], F.mul(factor, rows[col][c]));
    }
  }
  return result;
}

std::size_t rank(const Matrix& a) { return rref(a.field(), rows_of(a), a.n()).rows.size(); }

Matrix inverse(const Matrix& a) {
  const Field& F = a.field();
  const std::size_t n = a.n();
  std::vector<Vector> aug(n, Vector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n + i] = 1;
  }
  const Echelon e = rref(F, std::move(aug), 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw ContractError("inverse: matrix is singular");
  std::vector<Value> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = e.rows[i][n + j];
  }
  return {a.field_ref(), n, std::move(out)};
}

Matrix mat_pow(const Matrix& a, std::int64_t e) {
  Matrix base = e < 0 ? inverse(a) : a;
  std::uint64_t ue = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Matrix result = Matrix::identity(a.field_ref(), a.n());
  while (ue) {
    if (ue & 1) result = result * base;
    ue >>= 1;
    if (ue) base = base * base;
  }
  return result;
}

Matrix conjugate(const Matrix& a, const Matrix& g, const Matrix& g_inv) { return g * a * g_inv; }

Poly char_poly(const Matrix& a) {
  const Field& F = a.field();
  const std::size_t n = a.n();
  std::vector<Vector> h = rows_of(a);

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const Value inv = F.inv(h[j + 1][j]);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h[r][j] == 0) continue;
      const Value m = F.mul(h[r][j], inv);
      for (std::size_t c = 0; c < n; ++c) h[r][c] = F.sub(h[r][c], F.mul(m, h[j + 1][c]));
      for (std::size_t c = 0; c < n; ++c) h[c][j + 1] = F.add(h[c][j + 1], F.mul(m, h[c][r]));
    }
  }

  // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i (prod of subdiagonal) h[m-1-i][m-1] p_{m-1-i}
  const FieldRef& field = a.field_ref();
  std::vector<Poly> p{Poly::constant(field, 1)};
  const Poly x = Poly::x(field);
  for (std::size_t m = 1; m <= n; ++m) {
    Poly pm = (x - Poly::constant(field, h[m - 1][m - 1])) * p[m - 1];
    Value t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = F.mul(t, h[m - i][m - i - 1]);
      const Value coef = F.mul(t, h[m - i - 1][m - 1]);
      if (coef != 0) pm = pm - scale(p[m - i - 1], coef);
    }
    p.push_back(std::move(pm));
  }
  return p[n];
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(FieldRef field, std::size_t ambient_dim, std::vector<Vector> spanning)
    : field_(std::move(field)), ambient_(ambient_dim) {
  for (const auto& v : spanning) {
    if (v.size() != ambient_) throw ContractError("Subspace: vector length mismatch");
  }
  Echelon e = rref(*field_, std::move(spanning), ambient_);
  basis_ = std::move(e.rows);
  pivots_ = std::move(e.pivots);
}

Subspace Subspace::full(FieldRef field, std::size_t n) {
  std::vector<Vector> rows(n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return {std::move(field), n, std::move(rows)};
}

Vector Subspace::coordinates(std::span<const Value> v) const {
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool Subspace::contains(std::span<const Value> v) const {
  if (v.size() != ambient_) return false;
  // In RREF, v is in the span iff v equals the combination given by its pivot entries.
  const Field& F = *field_;
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Value c = r[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] = F.sub(r[j], F.mul(c, basis_[i][j]));
  }
  return std::all_of(r.begin(), r.end(), [](Value x) { return x == 0; });
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vector& v) { return other.contains(v); });
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ContractError("intersect: ambient dimension mismatch");
  // W = {v : ann(W) v = 0}, so the intersection is cut out by both annihilators.
  auto equations = nullspace_basis(*field_, basis_, ambient_);
  auto more = nullspace_basis(*field_, other.basis_, ambient_);
  equations.insert(equations.end(), more.begin(), more.end());
  if (equations.empty()) return Subspace::full(field_, ambient_);
  return {field_, ambient_, nullspace_basis(*field_, std::move(equations), ambient_)};
}

Subspace kernel(const Matrix& a) { return {a.field_ref(), a.n(), nullspace_basis(a.field(), rows_of(a), a.n())}; }

Subspace fixed_space(const Matrix& a) { return kernel(a - Matrix::identity(a.field_ref(), a.n())); }

bool stabilizes(const Matrix& a, const Subspace& w) {
  if (w.ambient_dim() != a.n()) throw ContractError("stabilizes: dimension mismatch");
  return std::all_of(w.basis().begin(), w.basis().end(), [&](const Vector& v) {
    const Vector image = apply_vec(a, v);
    return w.contains(image);
  });
}

Subspace cyclic_span(const Matrix& a, std::span<const Value> v) {
  std::vector<Vector> vectors{Vector(v.begin(), v.end())};
  Subspace span(a.field_ref(), a.n(), vectors);
  while (true) {
    Vector next = apply_vec(a, vectors.back());
    if (span.contains(next)) return span;
    vectors.push_back(std::move(next));
    span = Subspace(a.field_ref(), a.n(), vectors);
  }
}

std::vector<Subspace> enumerate_subspaces(std::size_t n, const FieldRef& field, std::optional<std::size_t> dim,
                                          std::uint64_t budget) {
  if (dim && *dim > n) throw ContractError("enumerate_subspaces: dim exceeds ambient dimension");
  const std::uint32_t q = field->q();
  std::vector<Subspace> out;
  std::uint64_t produced = 0;
  const std::size_t lo = dim.value_or(0), hi = dim.value_or(n);
  for (std::size_t r = lo; r <= hi; ++r) {
    // Pivot sets as increasing r-subsets of {0..n-1}.
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    while (true) {
      // Free slots: row i, columns j > piv[i] that are not pivots.
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = piv[i] + 1; j < n; ++j) {
          if (std::find(piv.begin(), piv.end(), j) == piv.end()) slots.emplace_back(i, j);
        }
      }
      std::vector<Value> vals(slots.size(), 0);
      while (true) {
        if (++produced > budget) throw BudgetExceeded("enumerate_subspaces: budget exceeded");
        std::vector<Vector> rows(r, Vector(n, 0));
        for (std::size_t i = 0; i < r; ++i) rows[i][piv[i]] = 1;
        for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = vals[s];
        out.emplace_back(field, n, std::move(rows));
        std::size_t s = slots.size();
        while (s > 0 && ++vals[s - 1] == q) vals[--s] = 0;
        if (s == 0) break;
      }
      // Next r-subset.
      std::size_t i = r;
      while (i > 0 && piv[i - 1] == n - r + (i - 1)) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

std::vector<Matrix> enumerate_gl(std::size_t n, const FieldRef& field, std::uint64_t budget) {
  const std::uint32_t q = field->q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    total *= q;
    if (total > budget) throw BudgetExceeded("enumerate_gl: q^(n^2) exceeds the budget");
  }
  std::vector<Matrix> out;
  std::vector<Value> e(n * n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix m(field, n, e);
    if (det(m) != 0) out.push_back(std::move(m));
    std::size_t s = e.size();
    while (s > 0 && ++e[s - 1] == q) e[--s] = 0;
  }
  return out;
}

std::uint64_t matrix_order(const Matrix& a) {
  if (det(a) == 0) throw ContractError("matrix_order: matrix is singular");
  const Field& F = a.field();
  // Element orders in GL_n(F_q) divide p^e * lcm(q^i - 1 : i <= n) with p^e >= n.
  std::uint64_t bound = 1;
  for (std::size_t i = 1; i <= a.n(); ++i) bound = lcm_u64(bound, checked_pow(F.q(), static_cast<unsigned>(i)) - 1);
  std::uint64_t pe = 1;
  while (pe < a.n()) pe *= F.p();
  bound *= pe;
  const Factorization& f = cached_factorization(bound);
  return order_from_bound(bound, f,
                          [&](std::uint64_t e) { return mat_pow(a, static_cast<std::int64_t>(e)).is_identity(); });
}

std::string to_text(const Matrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (j) os << ',';
      os << a(i, j);
    }
  }
  return os.str();
}

std::string to_text(const Vector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

Matrix parse_matrix(std::string_view text, const FieldRef& field) {
  std::vector<std::vector<Value>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    std::string_view row = text.substr(pos, end - pos);
    std::vector<Value> vals;
    std::size_t rp = 0;
    while (rp <= row.size()) {
      const std::size_t rend = std::min(row.find(',', rp), row.size());
      std::string_view tok = row.substr(rp, rend - rp);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      Value v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("bad matrix entry '" + std::string(tok) + "' in \"" + std::string(text) + "\"");
      }
      if (!field->contains(v)) {
        throw ParseError("matrix entry " + std::to_string(v) + " not in F_" + std::to_string(field->q()));
      }
      vals.push_back(v);
      rp = rend + 1;
    }
    rows.push_back(std::move(vals));
    pos = end + 1;
  }
  const std::size_t n = rows.size();
  std::vector<Value> entries;
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError("matrix \"" + std::string(text) + "\" is not square");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return {field, n, std::move(entries)};
}

}  // namespace singerlab

namespace singerlab {

ConjugacyClasses conjugacy_classes(std::size_t n, const FieldRef& field) {
  const auto group = enumerate_gl(n, field);
  std::vector<Matrix> inverses;
  inverses.reserve(group.size());
  for (const auto& h : group) inverses.push_back(inverse(h));

  ConjugacyClasses out;
  for (const auto& g : group) {
    if (out.class_of.count(g)) continue;
    const std::size_t id = out.classes.size();
    out.classes.emplace_back();
    for (std::size_t i = 0; i < group.size(); ++i) {
      Matrix c = group[i] * g * inverses[i];
      if (out.class_of.emplace(c, id).second) out.classes[id].push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace singerlab

namespace singerlab {

std::vector<Vector> nullspace(const Field& field, std::vector<Vector> rows, std::size_t cols) {
  return nullspace_basis(field, std::move(rows), cols);
}

std::optional<Vector> solve(const Field& field, std::vector<Vector> rows, const Vector& rhs) {
  if (rows.size() != rhs.size()) throw ContractError("solve: right-hand side length mismatch");
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(rhs[i]);
  const Echelon e = rref(field, std::move(rows), cols + 1);
  Vector x(cols, 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

}  // namespace singerlab
