#ifndef ROOKCONG_TOOLS_COMMANDS_HPP
#define ROOKCONG_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "rookcong/membership.hpp"

namespace rookcong::cli {

  enum class Format { json, dot, text };

  // Exit statuses shared by every command.
  constexpr int kOk         = 0;
  constexpr int kMissing    = 1;  // verify: a predicted congruence is absent
  constexpr int kBudget     = 2;
  constexpr int kInvariant  = 3;
  constexpr int kUsage      = 64;

  struct RunConfig {
    Family                     family = Family::OR;
    int                        n      = 4;
    Format                     format = Format::json;
    std::string                out;  // empty: stdout
    unsigned                   threads      = 1;
    bool                       force_budget = false;
    std::optional<std::size_t> element_limit;  // overrides the environment
    std::size_t                lattice_limit = 600;
  };

  // Each command writes its output to `out` and a short summary to `log`,
  // returning an exit status. Budget and invariant exceptions propagate;
  // run() maps them to exit codes.
  int cmd_elements(RunConfig const& c, std::ostream& out, std::ostream& log);
  int cmd_green(RunConfig const& c, std::ostream& out, std::ostream& log);
  int cmd_ideals(RunConfig const& c, std::ostream& out, std::ostream& log);
  int cmd_predict(RunConfig const& c, std::ostream& out, std::ostream& log);
  int cmd_enumerate(RunConfig const& c, std::ostream& out, std::ostream& log);
  int cmd_verify(RunConfig const& c, std::ostream& out, std::ostream& log);
  int cmd_counterexample(RunConfig const& c, std::ostream& out,
                         std::ostream& log);
  int cmd_erratum(RunConfig const& c, std::ostream& out, std::ostream& log);

  // Parses argv and dispatches; never throws.
  int run(int argc, char const* const* argv, std::ostream& out,
          std::ostream& log);

}  // namespace rookcong::cli

#endif  // ROOKCONG_TOOLS_COMMANDS_HPP
