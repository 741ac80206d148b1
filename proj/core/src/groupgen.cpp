#include "singerlab/groupgen.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "singerlab/errors.hpp"
#include "singerlab/intmath.hpp"
#include "singerlab/reflect.hpp"

namespace singerlab {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 27;

// Elements live in one flat buffer of n*n values; membership is a bitset over
// base-q codes when they are small enough, a hash set of buffer offsets otherwise.
class ClosureEngine {
 public:
  ClosureEngine(std::size_t n, const Field& field) : n_(n), nn_(n * n), F_(field) {
    std::uint64_t space = 1;
    dense_ = true;
    for (std::size_t i = 0; i < nn_ && dense_; ++i) {
      if (space > kDenseLimit / F_.q()) dense_ = false;
      space *= F_.q();
    }
    if (dense_) bits_.assign((space + 63) / 64, 0);
  }

  ClosureResult run(const std::vector<Matrix>& gens, std::uint64_t cap, bool keep, const FieldRef& field) {
    std::vector<std::vector<Value>> g;
    for (const auto& m : gens) g.push_back(m.entries());
    std::vector<Value> id(nn_, 0);
    for (std::size_t i = 0; i < n_; ++i) id[i * n_ + i] = 1;
    insert(id.data());

    ClosureResult out;
    out.generators = gens;
    std::vector<Value> prod(nn_);
    for (std::size_t head = 0; head < count_; ++head) {
      for (const auto& a : g) {
        const Value* b = &buffer_[head * nn_];
        multiply(a.data(), b, prod.data());
        if (insert(prod.data()) && count_ > cap) {
          out.order = count_;
          out.hit_cap = true;
          return out;
        }
      }
    }
    out.order = count_;
    if (keep) {
      std::vector<Matrix> elems;
      elems.reserve(count_);
      for (std::size_t i = 0; i < count_; ++i) {
        elems.emplace_back(field, n_, std::vector<Value>(buffer_.begin() + static_cast<std::ptrdiff_t>(i * nn_),
                                                         buffer_.begin() + static_cast<std::ptrdiff_t>((i + 1) * nn_)));
      }
      out.elements = std::move(elems);
    }
    return out;
  }

 private:
  struct OffsetHash {
    const ClosureEngine* e;
    std::size_t operator()(std::size_t idx) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (std::size_t i = 0; i < e->nn_; ++i) h = (h ^ e->buffer_[idx * e->nn_ + i]) * 1099511628211ull;
      return h;
    }
  };
  struct OffsetEq {
    const ClosureEngine* e;
    bool operator()(std::size_t a, std::size_t b) const noexcept {
      return std::equal(e->buffer_.begin() + static_cast<std::ptrdiff_t>(a * e->nn_),
                        e->buffer_.begin() + static_cast<std::ptrdiff_t>((a + 1) * e->nn_),
                        e->buffer_.begin() + static_cast<std::ptrdiff_t>(b * e->nn_));
    }
  };

  void multiply(const Value* a, const Value* b, Value* out) const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        Value acc = 0;
        for (std::size_t k = 0; k < n_; ++k) acc = F_.add(acc, F_.mul(a[i * n_ + k], b[k * n_ + j]));
        out[i * n_ + j] = acc;
      }
    }
  }

  bool insert(const Value* m) {
    if (dense_) {
      std::uint64_t code = 0;
      for (std::size_t i = nn_; i-- > 0;) code = code * F_.q() + m[i];
      std::uint64_t& word = bits_[code >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (code & 63);
      if (word & bit) return false;
      word |= bit;
      buffer_.insert(buffer_.end(), m, m + nn_);
      ++count_;
      return true;
    }
    buffer_.insert(buffer_.end(), m, m + nn_);
    if (!sparse_.insert(count_).second) {
      buffer_.resize(count_ * nn_);
      return false;
    }
    ++count_;
    return true;
  }

  std::size_t n_;
  std::size_t nn_;
  const Field& F_;
  bool dense_ = false;
  std::vector<std::uint64_t> bits_;
  std::vector<Value> buffer_;
  std::size_t count_ = 0;
  std::unordered_set<std::size_t, OffsetHash, OffsetEq> sparse_{16, OffsetHash{this}, OffsetEq{this}};
};

std::vector<Value> generator_key(const std::vector<Matrix>& gens) {
  std::vector<std::vector<Value>> sorted;
  for (const auto& g : gens) sorted.push_back(g.entries());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Value> key;
  for (const auto& s : sorted) key.insert(key.end(), s.begin(), s.end());
  return key;
}

}  // namespace

std::uint64_t gl_order(std::size_t n, std::uint64_t q) {
  if (n == 0) throw ContractError("gl_order: n must be positive");
  const std::uint64_t qn = checked_pow(q, static_cast<unsigned>(n));
  std::uint64_t order = 1;
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t f = qn - qi;
    if (order > UINT64_MAX / f) throw ContractError("gl_order: overflow");
    order *= f;
    qi *= q;
  }
  return order;
}

std::uint64_t default_closure_cap() {
  if (const char* env = std::getenv("SINGERLAB_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 20'000'000;
}

ClosureResult group_closure(const std::vector<Matrix>& gens, std::uint64_t cap, bool keep_elements) {
  if (gens.empty()) throw ContractError("group_closure: no generators; pass n and field");
  return group_closure(gens, gens.front().n(), gens.front().field_ref(), cap, keep_elements);
}

ClosureResult group_closure(const std::vector<Matrix>& gens, std::size_t n, const FieldRef& field, std::uint64_t cap,
                            bool keep_elements) {
  for (const auto& g : gens) {
    if (g.n() != n || !(g.field() == *field)) throw ContractError("group_closure: generators differ in shape or field");
    if (det(g) == 0) throw ContractError("group_closure: singular generator " + to_text(g));
  }
  ClosureEngine engine(n, *field);
  ClosureResult r = engine.run(gens, cap, keep_elements, field);
  if (!r.hit_cap && gl_order(n, field->q()) % r.order != 0) {
    throw std::logic_error("group_closure: order " + std::to_string(r.order) + " does not divide |GL|");
  }
  return r;
}

bool generates_full(const std::vector<Matrix>& gens, std::uint64_t cap) {
  if (gens.empty()) throw ContractError("generates_full: no generators");
  const ClosureResult r = group_closure(gens, cap);
  if (r.hit_cap) throw BudgetExceeded("generates_full: closure reached the cap of " + std::to_string(cap));
  return r.order == gl_order(gens.front().n(), gens.front().field().q());
}

GenerationOracle::GenerationOracle(std::size_t n, FieldRef field, std::uint64_t cap)
    : n_(n), field_(std::move(field)), cap_(cap), full_(gl_order(n, field_->q())) {}

std::uint64_t GenerationOracle::order(const std::vector<Matrix>& gens) {
  ++lookups_;
  auto key = generator_key(gens);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const ClosureResult r = group_closure(gens, n_, field_, cap_);
  if (r.hit_cap) throw BudgetExceeded("closure reached the cap of " + std::to_string(cap_));
  ++computed_;
  memo_.emplace(std::move(key), r.order);
  return r.order;
}

bool normalizes(const Matrix& h, const Matrix& c) {
  const Matrix target = conjugate(c, h, inverse(h));
  Matrix power = c;
  do {
    if (power == target) return true;
    power = power * c;
  } while (!(power == c));
  return false;
}

ClosureResult normalizer_of_cyclic(const Matrix& c) {
  std::unordered_set<Matrix, MatrixHash> cyclic;
  Matrix power = c;
  do {
    cyclic.insert(power);
    power = power * c;
  } while (!(power == c));
  ClosureResult out;
  out.generators = {c};
  std::vector<Matrix> elems;
  for (auto& h : enumerate_gl(c.n(), c.field_ref())) {
    if (cyclic.contains(conjugate(c, h, inverse(h)))) elems.push_back(std::move(h));
  }
  out.order = elems.size();
  out.elements = std::move(elems);
  return out;
}

std::string to_string(QcClass c) {
  switch (c) {
    case QcClass::strong:
      return "strong";
    case QcClass::weak_only:
      return "weak_only";
    case QcClass::not_weak:
      return "not_weak";
  }
  return "?";
}

QcAnalysis analyze_qc(const Matrix& g, GenerationOracle& oracle, bool early_exit, std::uint64_t budget) {
  QcAnalysis a;
  for_each_minimal_factorization(
      g,
      [&](const std::vector<Matrix>& f) {
        ++a.factorizations;
        const bool gen = f.empty() ? oracle.full_order() == 1 : oracle.generates(f);
        if (gen) {
          ++a.generating;
        } else if (!a.non_generating) {
          a.non_generating = f;
        }
        if (early_exit && a.generating > 0 && a.non_generating) {
          a.exhaustive = false;
          return false;
        }
        return true;
      },
      {}, budget);
  if (a.generating == 0) {
    a.cls = QcClass::not_weak;
  } else if (a.non_generating) {
    a.cls = QcClass::weak_only;
  } else {
    a.cls = QcClass::strong;
  }
  return a;
}

QcClass classify_qc(const Matrix& g) {
  GenerationOracle oracle(g.n(), g.field_ref());
  return analyze_qc(g, oracle).cls;
}

std::unordered_map<Matrix, std::size_t, MatrixHash> cayley_distances(std::size_t n, const FieldRef& field) {
  const auto refl = ReflectionSet::get(n, field);
  std::unordered_map<Matrix, std::size_t, MatrixHash> dist;
  std::deque<Matrix> queue{Matrix::identity(field, n)};
  dist.emplace(queue.front(), 0);
  while (!queue.empty()) {
    const Matrix cur = std::move(queue.front());
    queue.pop_front();
    const std::size_t d = dist.at(cur);
    for (const auto& t : refl->reflections()) {
      Matrix next = cur * t;
      if (dist.emplace(next, d + 1).second) queue.push_back(std::move(next));
    }
  }
  return dist;
}

}  // namespace singerlab
