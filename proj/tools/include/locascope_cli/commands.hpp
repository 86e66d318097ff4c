#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locascope/generators.hpp"
#include "locascope/graph.hpp"

namespace locascope::cli {

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;    // graph files
  std::vector<std::string> families;  // FamilySpec strings
  std::optional<std::size_t> radius;
  std::size_t samples = 1000;
  double delta = 0.1;
  double delta_solve = 0.1;
  std::size_t r_cap = 40;
  std::optional<double> lambda;
  std::vector<std::uint64_t> seeds{0};
  std::string db;
  std::string out;
  std::optional<Format> format;
  std::string param = "independence_ratio";
  std::string potential;
  std::vector<std::size_t> sizes;
  // counterexample
  std::size_t n = 30;
  std::size_t girth = 6;
};

struct CommandResult {
  std::string output;
  int exit_code = 0;
};

/// Throws locascope::Error for every invalid configuration or failed step.
CommandResult run_command(const RunConfig& config);

/// {"error":{"code":"...","message":"..."}}
std::string error_json(const std::string& code, const std::string& message);

/// Loads the single graph source of a command (--input or --family).
Graph load_graph(const RunConfig& config);

}  // namespace locascope::cli
