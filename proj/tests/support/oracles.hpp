#pragma once

// Deliberately naive reference implementations. Plain int arithmetic mod p,
// no code shared with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "singerlab/matrix.hpp"

namespace oracle {

using IntMat = std::vector<std::vector<int>>;
using IntPoly = std::vector<int>;  // little-endian

inline int mod(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

inline int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x) {
    if (mod(static_cast<long long>(a) * x, p) == 1) return x;
  }
  return 0;
}

inline IntMat identity(int n) {
  IntMat m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMat mul(const IntMat& a, const IntMat& b, int p) {
  const std::size_t n = a.size();
  IntMat c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += static_cast<long long>(a[i][k]) * b[k][j];
      c[i][j] = mod(s, p);
    }
  }
  return c;
}

inline int det_laplace(const IntMat& a, int p) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return mod(a[0][0], p);
  long long s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<int> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(row);
    }
    const long long term = static_cast<long long>(a[0][j]) * det_laplace(minor, p);
    s += (j % 2 == 0) ? term : -term;
  }
  return mod(s, p);
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b, int p) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = mod(c[i + j] + static_cast<long long>(a[i]) * b[j], p);
  }
  return c;
}

inline IntPoly poly_add(IntPoly a, const IntPoly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] + b[i], p);
  return a;
}

inline IntPoly trim(IntPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// det(xI - A) by Laplace expansion over F_p[x].
inline IntPoly char_poly_laplace(const IntMat& a, int p) {
  const std::size_t n = a.size();
  using PMat = std::vector<std::vector<IntPoly>>;
  PMat m(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? IntPoly{mod(-a[i][j], p), 1} : IntPoly{mod(-a[i][j], p)};
  }
  auto rec = [&](auto&& self, const PMat& x) -> IntPoly {
    const std::size_t k = x.size();
    if (k == 1) return x[0][0];
    IntPoly s;
    for (std::size_t j = 0; j < k; ++j) {
      PMat minor;
      for (std::size_t i = 1; i < k; ++i) {
        std::vector<IntPoly> row;
        for (std::size_t c = 0; c < k; ++c) {
          if (c != j) row.push_back(x[i][c]);
        }
        minor.push_back(row);
      }
      IntPoly term = poly_mul(x[0][j], self(self, minor), p);
      if (j % 2 == 1) {
        for (auto& v : term) v = mod(-v, p);
      }
      s = poly_add(s, term, p);
    }
    return s;
  };
  return trim(rec(rec, m));
}

// Remainder of a modulo monic b.
inline IntPoly poly_rem(IntPoly a, const IntPoly& b, int p) {
  a = trim(a);
  while (a.size() >= b.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - static_cast<long long>(lead) * b[i], p);
    a = trim(a);
  }
  return a;
}

// Monic polynomials of degree d over F_p, coefficient tuples counted in base p.
inline std::vector<IntPoly> all_monic(int d, int p) {
  std::vector<IntPoly> out;
  long long total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (long long idx = 0; idx < total; ++idx) {
    IntPoly f(d + 1, 0);
    long long x = idx;
    for (int i = 0; i < d; ++i) {
      f[i] = static_cast<int>(x % p);
      x /= p;
    }
    f[d] = 1;
    out.push_back(f);
  }
  return out;
}

// Irreducible iff no monic divisor of degree 1..deg/2.
inline bool irreducible_trial(const IntPoly& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n / 2; ++d) {
    for (const auto& g : all_monic(d, p)) {
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return n >= 1;
}

// Product of a and b in F_p[x]/(modulus), elements as base-p digit encodings.
inline std::uint32_t ext_mul(std::uint32_t a, std::uint32_t b, int p, const IntPoly& modulus) {
  const std::size_t k = modulus.size() - 1;
  auto digits = [&](std::uint32_t v) {
    IntPoly d(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = static_cast<int>(v % p);
      v /= p;
    }
    return d;
  };
  IntPoly r = poly_rem(poly_mul(digits(a), digits(b), p), modulus, p);
  std::uint32_t out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p + r[i];
  return out;
}

inline std::vector<IntMat> all_matrices(int n, int p) {
  std::vector<IntMat> out;
  long long total = 1;
  for (int i = 0; i < n * n; ++i) total *= p;
  for (long long idx = 0; idx < total; ++idx) {
    IntMat m(n, std::vector<int>(n));
    long long x = idx;
    for (int i = 0; i < n * n; ++i) {
      m[i / n][i % n] = static_cast<int>(x % p);
      x /= p;
    }
    out.push_back(m);
  }
  return out;
}

inline int rank_mod(IntMat a, int p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const int iv = inv_mod(a[r][c], p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const long long f = static_cast<long long>(a[i][c]) * iv;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
    }
    ++r;
  }
  return static_cast<int>(r);
}

inline std::vector<IntMat> all_gl(int n, int p) {
  std::vector<IntMat> out;
  for (auto& m : all_matrices(n, p)) {
    if (det_laplace(m, p) != 0) out.push_back(std::move(m));
  }
  return out;
}

inline int fix_dim(const IntMat& g, int p) {
  IntMat d = g;
  for (std::size_t i = 0; i < g.size(); ++i) d[i][i] = mod(d[i][i] - 1, p);
  return static_cast<int>(g.size()) - rank_mod(d, p);
}

inline std::vector<IntMat> all_reflections(int n, int p) {
  std::vector<IntMat> out;
  for (auto& m : all_gl(n, p)) {
    if (fix_dim(m, p) == n - 1) out.push_back(std::move(m));
  }
  return out;
}

inline std::set<IntMat> closure(const std::vector<IntMat>& gens, int p) {
  const int n = static_cast<int>(gens.front().size());
  std::set<IntMat> seen{identity(n)};
  std::vector<IntMat> frontier{identity(n)};
  while (!frontier.empty()) {
    std::vector<IntMat> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        IntMat y = mul(x, g, p);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline long long gl_order(int n, long long q) {
  long long qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  long long order = 1;
  long long qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

inline long long gaussian_binomial(int n, int r, long long q) {
  long long num = 1;
  long long den = 1;
  for (int i = 0; i < r; ++i) {
    long long a = 1;
    long long b = 1;
    for (int j = 0; j < n - i; ++j) a *= q;
    for (int j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

inline long long phi(long long n) {
  long long count = 0;
  for (long long i = 1; i <= n; ++i) count += std::gcd(i, n) == 1;
  return count;
}

// Conversions for prime fields.
inline IntMat to_int(const singerlab::Matrix& m) {
  IntMat out(m.n(), std::vector<int>(m.n()));
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) out[i][j] = static_cast<int>(m(i, j));
  }
  return out;
}

inline singerlab::Matrix from_int(const IntMat& m, const singerlab::FieldRef& field) {
  std::vector<singerlab::Value> e;
  for (const auto& row : m) {
    for (int v : row) e.push_back(static_cast<singerlab::Value>(v));
  }
  return {field, m.size(), e};
}

}  // namespace oracle
