#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "simplexint/core.hpp"

namespace simplexint::cli {

enum class QuantitySelection { G, J, Both };

std::optional<QuantitySelection> parse_quantity(std::string_view text);

struct InstanceFile {
  Instance instance;
  QuantitySelection quantity = QuantitySelection::Both;
};

// Parses the JSON instance schema
//   {"theta": [[literal, ...], ...], "population": [int, ...], "quantity"?: "G"|"J"|"both"}
// where a literal is a JSON integer, "p/q" or a decimal string. Throws
// simplexint::Error (InvalidLiteral for schema problems, or the validation
// error kinds).
InstanceFile parse_instance_json(std::string_view text);
InstanceFile load_instance_file(const std::string& path);

}  // namespace simplexint::cli
