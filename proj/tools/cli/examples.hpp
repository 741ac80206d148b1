#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace singerlab::cli {

struct Assertion {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ExampleReport {
  std::string name;
  std::vector<Assertion> assertions;

  bool ok() const;
  nlohmann::json to_json() const;
};

/// Names accepted by run_example.
const std::vector<std::string>& example_names();

/// Recomputes a worked example and checks every displayed value.
/// Throws ContractError for an unknown name.
ExampleReport run_example(const std::string& name);

}  // namespace singerlab::cli
