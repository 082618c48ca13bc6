#pragma once

// Text network files:
//
//   # comment
//   cdc 3
//   1 2 011/001/000
//   1 3 110/010/000|110/110/000
//
// The header names the model (cdc, cdc-d, cdc-s) and the variable count.
// Indices are 1-based. A line may list several candidates separated by '|'.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdc/direction_matrix.hpp"

namespace cdc::cli {

class InputError : public std::runtime_error {
 public:
  InputError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct NetworkFile {
  Model model = Model::Cdc;
  int n = 0;
  /// 0-based (i, j) -> candidates, in file order.
  std::map<std::pair<int, int>, std::vector<DirectionMatrix>> pairs;
};

/// Parses and validates a network. model_override replaces the header's
/// model before matrices are checked. Throws InputError.
NetworkFile parse_network(std::string_view text, std::optional<Model> model_override = {});
NetworkFile read_network_file(const std::string& path, std::optional<Model> model_override = {});

/// Every ordered pair must be present with exactly one candidate.
CdcBasicNetwork to_basic(const NetworkFile& file);
/// Missing pairs get every basic relation of the model.
CdcDisjunctiveNetwork to_disjunctive(const NetworkFile& file);

std::string format_network(const CdcBasicNetwork& net, Model model);
std::string format_network(const CdcDisjunctiveNetwork& net, Model model);

}  // namespace cdc::cli
