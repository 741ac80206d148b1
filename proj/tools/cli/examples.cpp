#include "examples.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "singerlab/errors.hpp"
#include "singerlab/groupgen.hpp"
#include "singerlab/reflect.hpp"
#include "singerlab/singer.hpp"

namespace singerlab::cli {

namespace {

class Checker {
 public:
  explicit Checker(std::string name) { report_.name = std::move(name); }

  void equal(const std::string& what, const std::string& expected, const std::string& actual) {
    report_.assertions.push_back({what, expected, actual, expected == actual});
  }
  void holds(const std::string& what, bool value) {
    report_.assertions.push_back({what, "true", value ? "true" : "false", value});
  }
  ExampleReport take() { return std::move(report_); }

 private:
  ExampleReport report_;
};

std::set<std::vector<Value>> entry_set(const std::vector<Matrix>& ms) {
  std::set<std::vector<Value>> out;
  for (const auto& m : ms) out.insert(m.entries());
  return out;
}

ExampleReport gl2f3() {
  const FieldRef f3 = make_field(3, 1, std::nullopt);
  Checker check("gl2f3");
  const Matrix c = parse_matrix("0,1;1,2", f3);
  check.equal("c is the companion matrix of x^2+x-1", to_text(companion(parse_poly("2,1,1", f3))), to_text(c));
  check.holds("c is a Singer cycle", is_singer(c));

  const Matrix t = normalizer_reflection(c);
  check.equal("t = normalizer_reflection(c)", "1,0;2,2", to_text(t));
  const Matrix t_inv = inverse(t);
  check.equal("t^-1 c t = c^3", "2,2;2,0 = 2,2;2,0",
              to_text(t_inv * c * t) + " = " + to_text(mat_pow(c, 3)));

  const Matrix t5 = mat_pow(c, 5) * t * mat_pow(c, -5);
  check.equal("t' = c^5 t c^-5", "1,2;0,2", to_text(t5));
  const Matrix ct = c * t5;
  check.equal("c t' is the companion matrix of x^2+1", "0,2;1,0 = 0,2;1,0",
              to_text(ct) + " = " + to_text(companion(parse_poly("1,0,1", f3))));

  const ClosureResult s = group_closure({c, ct}, default_closure_cap(), true);
  const ClosureResult norm = normalizer_of_cyclic(c);
  const bool same = entry_set(*s.elements) == entry_set(*norm.elements);
  check.equal("|<c, c t'>| = |N(<c>)| < |GL_2(F_3)|", "16 = 16 < 48",
              std::to_string(s.order) + (same ? " = " : " != ") + std::to_string(norm.order) + " < " +
                  std::to_string(gl_order(2, 3)));
  return check.take();
}

ExampleReport gl2f5() {
  const FieldRef f5 = make_field(5, 1, std::nullopt);
  Checker check("gl2f5");
  const Matrix g = parse_matrix("3,0;0,4", f5);
  const Matrix a = parse_matrix("2,2;2,0", f5);
  const Matrix b = parse_matrix("0,2;4,3", f5);
  check.equal("[[3,0],[0,4]] = [[2,2],[2,0]] [[0,2],[4,3]]", to_text(g), to_text(a * b));
  check.holds("both factors are reflections", is_reflection(a) && is_reflection(b));
  const Subspace fa = fixed_space(a);
  const Subspace fb = fixed_space(b);
  check.holds("fix = span(1,2) and span(1,3)", fa == Subspace(f5, 2, {{1, 2}}) && fb == Subspace(f5, 2, {{1, 3}}));
  check.equal("|<factors>| = |GL_2(F_5)|", "480", std::to_string(group_closure({a, b}).order));

  const Matrix d1 = Matrix::diagonal(f5, std::vector<Value>{3, 1});
  const Matrix d2 = Matrix::diagonal(f5, std::vector<Value>{1, 4});
  const ClosureResult diag = group_closure({d1, d2}, default_closure_cap(), true);
  const bool abelian = std::all_of(diag.elements->begin(), diag.elements->end(), [&](const Matrix& x) {
    return std::all_of(diag.elements->begin(), diag.elements->end(),
                       [&](const Matrix& y) { return x * y == y * x; });
  });
  check.equal("diagonal factorization generates an abelian group of order 8", "order 8, abelian",
              "order " + std::to_string(diag.order) + (abelian ? ", abelian" : ", non-abelian") +
                  (d1 * d2 == g ? "" : ", wrong product"));
  return check.take();
}

Matrix permutation_matrix(const FieldRef& field, const std::vector<std::size_t>& image) {
  const std::size_t n = image.size();
  std::vector<Value> e(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) e[image[j] * n + j] = 1;
  return {field, n, std::move(e)};
}

ExampleReport s4() {
  const FieldRef f3 = make_field(3, 1, std::nullopt);
  Checker check("s4");
  const Matrix cycle = permutation_matrix(f3, {1, 2, 3, 0});
  const Matrix swap13 = permutation_matrix(f3, {2, 1, 0, 3});
  const Matrix swap12 = permutation_matrix(f3, {1, 0, 2, 3});
  check.holds("(1 3) normalizes <(1 2 3 4)>", normalizes(swap13, cycle));
  check.equal("|<(1 2 3 4), (1 3)>|", "8", std::to_string(group_closure({cycle, swap13}).order));
  check.equal("|<(1 2 3 4), (1 2)>| = |S_4|", "24", std::to_string(group_closure({cycle, swap12}).order));
  return check.take();
}

}  // namespace

bool ExampleReport::ok() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

nlohmann::json ExampleReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& a : assertions) {
    list.push_back({{"name", a.name}, {"expected", a.expected}, {"actual", a.actual}, {"pass", a.pass}});
  }
  return {{"schema", 1}, {"example", name}, {"ok", ok()}, {"assertions", list}};
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"gl2f3", "gl2f5", "s4"};
  return names;
}

ExampleReport run_example(const std::string& name) {
  if (name == "gl2f3") return gl2f3();
  if (name == "gl2f5") return gl2f5();
  if (name == "s4") return s4();
  throw ContractError("unknown example '" + name + "'");
}

}  // namespace singerlab::cli
