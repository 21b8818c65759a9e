#ifndef ISCP_API_HPP
#define ISCP_API_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "iscp/jsonio.hpp"

namespace iscp::api {

struct Options {
  std::uint64_t seed = 12345;
  double tol = 1e-10;       // exact-side comparisons
  double tol_spec = 1e-9;   // spectral-side comparisons
  int cap = 10000;          // closure size cap
  std::string order = "index";  // normal-form order: index or lex
};

/// Names of the available commands.
std::vector<std::string> commands();

/// Dispatches one command.  Structural problems throw; mathematical
/// results, including negative predicates, are data in the returned
/// report.  Reports carry an "assertions_hold" flag where a command
/// verifies a theorem.
io::json run(const std::string& command, const io::json& input, const Options& opt);

}  // namespace iscp::api

#endif
