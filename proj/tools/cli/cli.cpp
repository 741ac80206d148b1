#include "cli.hpp"

#include <CLI11.hpp>

#include "examples.hpp"
#include "singerlab/errors.hpp"
#include "singerlab/groupgen.hpp"
#include "singerlab/reflect.hpp"
#include "singerlab/serialize.hpp"
#include "singerlab/singer.hpp"
#include "singerlab/verify.hpp"

namespace singerlab::cli {

namespace {

using json = nlohmann::json;

struct FieldArgs {
  std::uint32_t p = 0;
  unsigned k = 1;
};

struct Config {
  FieldArgs field;
  std::size_t n = 0;
  std::string matrix;
  std::string poly;
  std::string name;
  bool all = false;
  std::optional<Value> det_subgroup;
  bool classes = false;
  std::uint64_t cap = default_closure_cap();
  std::uint64_t seed = 1;
  std::string output = "json";
};

void add_field_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--p", cfg.field.p, "Characteristic")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--k", cfg.field.k, "Extension degree, q = p^k")->check(CLI::PositiveNumber);
}

void add_output_option(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}));
}

bool json_output(const Config& cfg) { return cfg.output == "json"; }

int cmd_field(const Config& cfg, std::ostream& out) {
  const FieldRef f = make_field(cfg.field.p, cfg.field.k);
  json j = {{"schema", kJsonSchema}, {"command", "field"}, {"field", to_json(*f)}};
  if (!cfg.poly.empty()) {
    const Poly g = parse_poly(cfg.poly, f);
    json info = {{"poly", to_text(g)}, {"degree", g.degree()}};
    if (g.degree() >= 1) {
      const bool irr = is_irreducible(g);
      info["irreducible"] = irr;
      info["primitive"] = g.is_monic() && is_primitive_poly(g);
      if (irr && g.coeff(0) != 0) info["order_of_x"] = order_of_x(g);
    }
    j["poly"] = info;
  }
  if (json_output(cfg)) {
    out << j.dump(2) << "\n";
  } else {
    out << "F_" << f->q() << " = F_" << f->p() << "[x]/(" << to_text(Poly(make_field(f->p(), 1), f->modulus()))
        << "), primitive element " << f->primitive_element() << "\n";
    if (j.contains("poly")) out << "poly " << j["poly"].dump() << "\n";
  }
  return kExitOk;
}

int cmd_factorize(const Config& cfg, std::ostream& out) {
  const FieldRef f = make_field(cfg.field.p, cfg.field.k);
  const Matrix g = parse_matrix(cfg.matrix, f);
  if (cfg.n != 0 && cfg.n != g.n()) throw ContractError("--n does not match the matrix size");
  if (det(g) == 0) throw ContractError("matrix is singular");
  GenerationOracle oracle(g.n(), f, cfg.cap);

  std::vector<FactorizationList> lists;
  std::string mode = "one";
  if (cfg.det_subgroup) {
    mode = "det-subgroup";
    lists = factorizations_in_det_subgroup(g, *cfg.det_subgroup);
  } else if (cfg.all) {
    mode = "all";
    lists = enumerate_minimal_factorizations(g);
  } else {
    lists.push_back(minimal_factorization(g));
  }

  json items = json::array();
  std::uint64_t generating = 0;
  for (const auto& l : lists) {
    json item = to_json(l);
    const bool gen = l.factors.empty() ? oracle.full_order() == 1 : oracle.generates(l.factors);
    generating += gen;
    item["generates"] = gen;
    items.push_back(std::move(item));
  }
  const json j = {{"schema", kJsonSchema},
                  {"command", "factorize"},
                  {"field", to_json(*f)},
                  {"matrix", to_text(g)},
                  {"mode", mode},
                  {"reflection_length", reflection_length(g)},
                  {"count", lists.size()},
                  {"generating", generating},
                  {"factorizations", items}};
  if (json_output(cfg)) {
    out << j.dump(2) << "\n";
  } else {
    out << to_text(g) << ": reflection length " << reflection_length(g) << ", " << lists.size()
        << " factorization(s), " << generating << " generating\n";
    for (const auto& item : items) {
      std::string line;
      for (const auto& t : item["factors"]) line += (line.empty() ? "" : " * ") + ("[" + t.get<std::string>() + "]");
      out << "  " << (line.empty() ? "(empty)" : line) << (item["generates"].get<bool>() ? "  generates" : "  proper")
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_example(const Config& cfg, std::ostream& out) {
  const ExampleReport r = run_example(cfg.name);
  if (json_output(cfg)) {
    out << r.to_json().dump(2) << "\n";
  } else {
    for (const auto& a : r.assertions) {
      out << (a.pass ? "ok   " : "FAIL ") << a.name;
      if (!a.pass) out << "\n     expected: " << a.expected << "\n     actual:   " << a.actual;
      out << "\n";
    }
  }
  return r.ok() ? kExitOk : kExitViolation;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const FieldRef f = make_field(cfg.field.p, cfg.field.k);
  VerifyOptions opts;
  opts.classes = cfg.classes;
  opts.seed = cfg.seed;
  opts.cap = cfg.cap;
  VerifyReport r;
  if (cfg.name == "main1") {
    r = verify_main1(cfg.n, f, opts);
  } else if (cfg.name == "main2") {
    r = verify_main2(cfg.n, f, opts);
  } else if (cfg.name == "gill") {
    r = verify_gill(cfg.n, f, opts);
  } else if (cfg.name == "singer-equiv") {
    r = verify_singer_equiv(cfg.n, f, opts);
  } else {
    r = verify_length_oracle(cfg.n, f, opts);
  }
  if (json_output(cfg)) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << r.name << " n=" << cfg.n << " q=" << f->q() << ": " << (r.ok() ? "verified" : "VIOLATED") << ", "
        << r.checked << " checked, " << r.violations.size() << " violation(s), " << r.exceptional_pairs.size()
        << " exceptional pair(s), " << r.elapsed_ms << " ms\n";
    for (const auto& v : r.violations) out << "  " << v.dump() << "\n";
  }
  return r.ok() ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation with Singer cycles and reflections in GL_n(F_q)", "singerlab"};
  app.require_subcommand(1);
  Config cfg;

  auto* field = app.add_subcommand("field", "Describe F_q and optionally a polynomial over it");
  add_field_options(field, cfg);
  field->add_option("--poly", cfg.poly, "Polynomial c0,c1,... (little-endian)");
  add_output_option(field, cfg);

  auto* factorize = app.add_subcommand("factorize", "Minimum-length reflection factorizations of a matrix");
  add_field_options(factorize, cfg);
  factorize->add_option("--matrix", cfg.matrix, "Matrix rows r0;r1;... with comma-separated entries")->required();
  factorize->add_option("--n", cfg.n, "Dimension (checked against the matrix)");
  auto* all = factorize->add_flag("--all", cfg.all, "Enumerate every minimal factorization");
  factorize->add_option("--det-subgroup", cfg.det_subgroup, "Only factors with determinant in <elem>")->excludes(all);
  factorize->add_option("--cap", cfg.cap, "Closure element cap");
  add_output_option(factorize, cfg);

  auto* example = app.add_subcommand("example", "Replay a worked example");
  example->add_option("name", cfg.name, "Example name")->required()->check(CLI::IsMember(example_names()));
  add_output_option(example, cfg);

  auto* verify = app.add_subcommand("verify", "Exhaustively verify a theorem on GL_n(F_q)");
  verify->add_option("theorem", cfg.name, "main1 | main2 | gill | singer-equiv | length-oracle")
      ->required()
      ->check(CLI::IsMember({"main1", "main2", "gill", "singer-equiv", "length-oracle"}));
  verify->add_option("--n", cfg.n, "Dimension")->required()->check(CLI::PositiveNumber);
  add_field_options(verify, cfg);
  verify->add_flag("--classes", cfg.classes, "main1: one element per conjugacy class");
  verify->add_option("--cap", cfg.cap, "Closure element cap");
  verify->add_option("--seed", cfg.seed, "Seed for randomized spot checks");
  add_output_option(verify, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*field) return cmd_field(cfg, out);
    if (*factorize) return cmd_factorize(cfg, out);
    if (*example) return cmd_example(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace singerlab::cli
