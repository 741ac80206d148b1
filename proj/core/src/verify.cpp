#include "singerlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <unordered_set>

#include "singerlab/errors.hpp"
#include "singerlab/reflect.hpp"
#include "singerlab/singer.hpp"

namespace singerlab {

namespace {

using json = nlohmann::json;

class Timer {
 public:
  std::uint64_t ms() const {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count());
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerifyReport start(const char* name, std::size_t n, const Field& F) {
  VerifyReport r;
  r.name = name;
  r.params = {{"n", n}, {"p", F.p()}, {"k", F.k()}, {"q", F.q()}};
  return r;
}

void finish(VerifyReport& r, const Timer& t) {
  auto by_dump = [](const json& a, const json& b) { return a.dump() < b.dump(); };
  std::sort(r.violations.begin(), r.violations.end(), by_dump);
  std::sort(r.exceptional_pairs.begin(), r.exceptional_pairs.end(), by_dump);
  r.elapsed_ms = t.ms();
}

json factors_json(const std::vector<Matrix>& f) {
  json a = json::array();
  for (const auto& m : f) a.push_back(to_text(m));
  return a;
}

std::optional<Subspace> invariant_subspace(const Matrix& g) {
  const std::size_t n = g.n();
  const std::uint32_t q = g.field().q();
  Vector v(n, 0);
  while (true) {
    std::size_t i = 0;
    while (i < n && ++v[i] == q) v[i++] = 0;
    if (i == n) return std::nullopt;
    Subspace s = cyclic_span(g, v);
    if (s.dim() < n) return s;
  }
}

struct Main1Check {
  GenerationOracle& oracle;
  const VerifyOptions& opts;
  VerifyReport& report;
  std::map<std::string, std::uint64_t> counts;

  QcClass check(const Matrix& g) {
    ++report.checked;
    const bool singer = is_singer(g);
    const QcAnalysis qc = analyze_qc(g, oracle, true, opts.budget);
    ++counts[to_string(qc.cls)];
    if ((qc.cls == QcClass::strong) != singer) {
      report.violations.push_back({{"kind", "strong_vs_singer"},
                                   {"g", to_text(g)},
                                   {"singer", singer},
                                   {"class", to_string(qc.cls)},
                                   {"factorization", qc.non_generating ? factors_json(*qc.non_generating) : json()}});
    }
    if (!singer) witness(g);
    return qc.cls;
  }

  void witness(const Matrix& g) {
    const std::size_t n = g.n();
    if (n >= 2 && !is_irreducible_element(g)) {
      ++counts["reducible_witnesses"];
      const auto w = invariant_subspace(g);
      if (!w) {
        report.violations.push_back({{"kind", "no_invariant_subspace"}, {"g", to_text(g)}});
        return;
      }
      const FactorizationList f = stabilizing_factorization(g, *w);
      const bool stable = std::all_of(f.factors.begin(), f.factors.end(), [&](const Matrix& t) {
        return is_reflection(t) && stabilizes(t, *w);
      });
      const bool minimal = f.length() == reflection_length(g) && product_of(f.factors, g.field_ref(), n) == g;
      const bool proper = f.factors.empty() || !oracle.generates(f.factors);
      if (!stable || !minimal || !proper) {
        report.violations.push_back({{"kind", "stabilizing_witness"},
                                     {"g", to_text(g)},
                                     {"factorization", factors_json(f.factors)},
                                     {"stabilizes", stable},
                                     {"minimal", minimal},
                                     {"proper", proper}});
      }
      return;
    }
    ++counts["irreducible_witnesses"];
    const Field& F = g.field();
    const Value d = det(g);
    const bool det_proper = F.element_order(d) < F.q() - 1;
    if (!det_proper) ++counts["det_generating_witnesses"];
    std::vector<bool> in_x(F.q(), false);
    Value x = 1;
    do {
      in_x[x] = true;
      x = F.mul(x, d);
    } while (x != 1);
    std::optional<std::vector<Matrix>> found;
    for_each_minimal_factorization(
        g,
        [&](const std::vector<Matrix>& f) {
          if (!f.empty() && oracle.generates(f)) return true;
          found = f;
          return false;
        },
        [&](const Matrix& t) { return static_cast<bool>(in_x[det(t)]); }, opts.budget);
    if (!found) {
      report.violations.push_back({{"kind", "det_subgroup_witness"}, {"g", to_text(g)}, {"det_proper", det_proper}});
    }
  }
};

}  // namespace

VerifyReport verify_main1(std::size_t n, const FieldRef& field, const VerifyOptions& opts) {
  const Timer timer;
  VerifyReport report = start("main1", n, *field);
  report.params["classes"] = opts.classes;
  GenerationOracle oracle(n, field, opts.cap);
  Main1Check check{oracle, opts, report, {}};
  if (!opts.classes) {
    for (const auto& g : enumerate_gl(n, field)) check.check(g);
  } else {
    report.params["seed"] = opts.seed;
    const ConjugacyClasses classes = conjugacy_classes(n, field);
    const auto group = enumerate_gl(n, field);
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    std::uint64_t spot = 0;
    for (const auto& cls : classes.classes) {
      const Matrix& g = cls.front();
      const QcClass c = check.check(g);
      const Matrix& h = group[pick(rng)];
      const Matrix conj = conjugate(g, h, inverse(h));
      const QcClass cc = analyze_qc(conj, oracle, true, opts.budget).cls;
      ++spot;
      if (c != cc) {
        report.violations.push_back({{"kind", "class_invariance"},
                                     {"g", to_text(g)},
                                     {"conjugate", to_text(conj)},
                                     {"class", to_string(c)},
                                     {"conjugate_class", to_string(cc)}});
      }
    }
    report.stats["classes"] = classes.classes.size();
    report.stats["conjugate_spot_checks"] = spot;
  }
  for (const auto& [k, v] : check.counts) report.stats[k] = v;
  report.stats["closures_computed"] = oracle.closures_computed();
  finish(report, timer);
  return report;
}

VerifyReport verify_main2(std::size_t n, const FieldRef& field, const VerifyOptions& opts) {
  const Timer timer;
  VerifyReport report = start("main2", n, *field);
  const std::uint64_t q = field->q();
  GenerationOracle oracle(n, field, opts.cap);
  const auto refl = ReflectionSet::get(n, field);
  const std::uint64_t expected_per_singer = (n == 2 && q > 2) ? q + 1 : 0;
  std::uint64_t singers = 0;
  std::uint64_t exceptions = 0;

  for (const auto& c : enumerate_gl(n, field)) {
    if (!is_singer(c)) continue;
    ++singers;
    const Matrix p = *cyclic_basis(c);
    const Matrix p_inv = inverse(p);
    const Matrix companion_c = p_inv * c * p;
    std::vector<Matrix> normalizing;
    std::unordered_set<Matrix, MatrixHash> normalizing_set;
    if (n == 2) {
      normalizing = normalizing_reflections(c);
      normalizing_set.insert(normalizing.begin(), normalizing.end());
    }
    std::uint64_t here = 0;
    std::uint64_t normalizers_found = 0;
    for (const auto& t : refl->reflections()) {
      ++report.checked;
      const bool gen = oracle.generates({companion_c, p_inv * t * p});
      const bool norm = n == 2 && normalizes(t, c);
      if (norm) ++normalizers_found;
      if (n == 2 && norm != normalizing_set.contains(t)) {
        report.violations.push_back(
            {{"kind", "normalizing_set"}, {"c", to_text(c)}, {"t", to_text(t)}, {"normalizes", norm}});
      }
      const bool expected_proper = n == 2 && q > 2 && norm;
      if (!gen) {
        ++here;
        report.exceptional_pairs.push_back({{"c", to_text(c)}, {"t", to_text(t)}});
      }
      if (gen == expected_proper) {
        report.violations.push_back({{"kind", "generation"},
                                     {"c", to_text(c)},
                                     {"t", to_text(t)},
                                     {"generates", gen},
                                     {"normalizes", norm}});
      }
    }
    exceptions += here;
    if (here != expected_per_singer) {
      report.violations.push_back({{"kind", "exception_count"}, {"c", to_text(c)}, {"count", here}});
    }
    if (n == 2 && (normalizing.size() != q + 1 || normalizers_found != q + 1)) {
      report.violations.push_back({{"kind", "normalizing_count"},
                                   {"c", to_text(c)},
                                   {"normalizing_reflections", normalizing.size()},
                                   {"normalizing_found", normalizers_found}});
    }
  }
  report.stats["singer_cycles"] = singers;
  report.stats["reflections"] = refl->size();
  report.stats["exceptions"] = exceptions;
  report.stats["expected_exceptions_per_singer"] = expected_per_singer;
  report.stats["closures_computed"] = oracle.closures_computed();
  finish(report, timer);
  return report;
}

VerifyReport verify_gill(std::size_t n, const FieldRef& field, const VerifyOptions& opts) {
  const Timer timer;
  VerifyReport report = start("gill", n, *field);
  GenerationOracle oracle(n, field, opts.cap);
  const auto candidates = enumerate_monic(static_cast<unsigned>(n), field, true);
  std::uint64_t fix_checked = 0;
  for (const auto& f : enumerate_primitive(static_cast<unsigned>(n), field)) {
    const Matrix cf = companion(f);
    const ClosureResult norm = normalizer_of_cyclic(cf);
    const std::unordered_set<Matrix, MatrixHash> norm_set(norm.elements->begin(), norm.elements->end());
    const bool norm_proper = norm.order < oracle.full_order();
    for (const auto& g : candidates) {
      if (g == f) continue;
      ++report.checked;
      const Matrix cg = companion(g);
      const std::uint64_t order = oracle.order({cf, cg});
      const bool gen = order == oracle.full_order();
      const bool in_norm = norm_set.contains(cg);
      const bool expected_proper = n == 2 && in_norm && norm_proper;
      const std::size_t fix_dim = fixed_space(cf * inverse(cg)).dim();
      ++fix_checked;
      if (fix_dim != n - 1) {
        report.violations.push_back({{"kind", "fix_dimension"}, {"f", to_text(f)}, {"g", to_text(g)}, {"dim", fix_dim}});
      }
      if (!gen) {
        report.exceptional_pairs.push_back({{"f", to_text(f)}, {"g", to_text(g)}, {"order", order}});
      }
      if (gen == expected_proper) {
        report.violations.push_back({{"kind", "generation"},
                                     {"f", to_text(f)},
                                     {"g", to_text(g)},
                                     {"order", order},
                                     {"in_normalizer", in_norm},
                                     {"normalizer_order", norm.order}});
      }
    }
  }
  report.stats["fix_dimension_checks"] = fix_checked;
  report.stats["closures_computed"] = oracle.closures_computed();
  finish(report, timer);
  return report;
}

VerifyReport verify_singer_equiv(std::size_t n, const FieldRef& field, const VerifyOptions&) {
  const Timer timer;
  VerifyReport report = start("singer-equiv", n, *field);
  const EquivalenceContext ctx(n, field);
  std::uint64_t singers = 0;
  std::uint64_t irreducible = 0;
  for (const auto& g : enumerate_gl(n, field)) {
    ++report.checked;
    const SingerConditions s = singer_oracles(g, ctx);
    const IrreducibleConditions i = irreducible_oracles(g, ctx);
    singers += s.char_poly_primitive;
    irreducible += i.char_poly_irreducible;
    if (!s.all_agree()) {
      report.violations.push_back({{"kind", "singer"},
                                   {"g", to_text(g)},
                                   {"conditions",
                                    {s.embedded_primitive, s.irreducible_max_order, s.order_is_maximal,
                                     s.char_poly_primitive, s.transitive, s.primitive_eigenvalue}}});
    }
    if (!i.all_agree()) {
      report.violations.push_back(
          {{"kind", "irreducible"},
           {"g", to_text(g)},
           {"conditions", {i.embedded_generator, i.char_poly_irreducible, i.no_invariant_subspace}}});
    }
  }
  report.stats["singer_cycles"] = singers;
  report.stats["irreducible"] = irreducible;
  finish(report, timer);
  return report;
}

VerifyReport verify_length_oracle(std::size_t n, const FieldRef& field, const VerifyOptions&) {
  const Timer timer;
  VerifyReport report = start("length-oracle", n, *field);
  const auto dist = cayley_distances(n, field);
  std::map<std::size_t, std::uint64_t> histogram;
  for (const auto& [g, d] : dist) {
    ++report.checked;
    ++histogram[d];
    if (reflection_length(g) != d) {
      report.violations.push_back(
          {{"kind", "length"}, {"g", to_text(g)}, {"distance", d}, {"reflection_length", reflection_length(g)}});
    }
  }
  if (dist.size() != gl_order(n, field->q())) {
    report.violations.push_back({{"kind", "reachability"}, {"reached", dist.size()}});
  }
  json h = json::object();
  for (const auto& [d, c] : histogram) h[std::to_string(d)] = c;
  report.stats["distance_histogram"] = h;
  finish(report, timer);
  return report;
}

}  // namespace singerlab
