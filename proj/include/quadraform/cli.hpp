#ifndef QUADRAFORM_CLI_HPP
#define QUADRAFORM_CLI_HPP

#include <optional>
#include <string>

#include "quadraform/io.hpp"

namespace quadraform::cli {

/// Exit codes: 0 success/positive verdict, 2 certified negative or axiom
/// violation, 1 usage/parse error (raised as exceptions, mapped in main).
struct CommandResult {
  int exit_code = 0;
  Json certificate;
  std::string report;  // human-readable summary
};

struct Options {
  std::optional<long> max_box;       // overrides the nondegeneracy search bound
  bool round_trip = false;           // double-extend / witt-split self check
  bool verify_only = false;          // current-metric: verify supplied form only
  std::optional<std::size_t> s_index;  // reverse: S-basis index for s
  std::size_t max_dim = 128;         // composite dimension cap
};

CommandResult cmd_validate(const Json& input);
CommandResult cmd_invariants(const Json& input);
CommandResult cmd_current_metric(const Json& g_input, const Json& s_input, const Options& opt);
CommandResult cmd_double_extend(const Json& input, const Options& opt);
CommandResult cmd_witt_split(const Json& input, const Options& opt);
CommandResult cmd_reverse(const Json& input, const Options& opt);
CommandResult cmd_heisenberg(std::size_t n, bool extended);
CommandResult cmd_frobenius(const Json& input);

/// Reads QUADRAFORM_MAX_DIM (default 128).
std::size_t max_dim_from_env();

}  // namespace quadraform::cli

#endif
