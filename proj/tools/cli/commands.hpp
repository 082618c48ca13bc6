#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cdc/direction_matrix.hpp"

namespace cdc::cli {

enum ExitCode : int { kOk = 0, kInconsistent = 1, kInputError = 2, kInternalError = 3 };

struct OutputOptions {
  /// Directory to write the rendering into; stdout only when unset.
  std::optional<std::string> out_dir;
  /// "ascii" (solution.txt) or "pbm" (region_<i>.pbm per region).
  std::string format = "ascii";
};

int cmd_check(const std::string& file, std::optional<Model> model, const OutputOptions& opts,
              std::ostream& out, std::ostream& err);
int cmd_solve(const std::string& file, std::optional<Model> model, const OutputOptions& opts,
              std::ostream& out, std::ostream& err);
int cmd_simplify(const std::string& file, std::optional<Model> model, const OutputOptions& opts,
                 std::ostream& out, std::ostream& err);
int cmd_tables_converses(std::optional<Model> model, const std::optional<std::string>& csv,
                         std::ostream& out, std::ostream& err);
int cmd_tables_compose(const std::string& alpha, const std::string& beta,
                       std::optional<Model> model, const std::optional<std::string>& csv,
                       std::ostream& out, std::ostream& err);

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cdc::cli
