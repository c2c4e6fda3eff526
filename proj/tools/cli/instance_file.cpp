#include "cli/instance_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace simplexint::cli {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::InvalidLiteral, "instance file: " + what);
}

Rational parse_scalar(const nlohmann::json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(BigInt(v.get<std::uint64_t>()));
    return Rational(static_cast<long>(v.get<std::int64_t>()));
  }
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_float()) {
    schema_error("floating-point JSON number " + v.dump() +
                 " is not exact; write it as a decimal string");
  }
  schema_error("scalar literal must be an integer or a string, got " + v.dump());
}

}  // namespace

std::optional<QuantitySelection> parse_quantity(std::string_view text) {
  if (text == "G") return QuantitySelection::G;
  if (text == "J") return QuantitySelection::J;
  if (text == "both") return QuantitySelection::Both;
  return std::nullopt;
}

InstanceFile parse_instance_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  if (!doc.contains("theta") || !doc["theta"].is_array()) schema_error("\"theta\" must be an array");
  if (!doc.contains("population") || !doc["population"].is_array()) {
    schema_error("\"population\" must be an array");
  }

  std::vector<std::vector<Rational>> theta;
  for (const auto& row : doc["theta"]) {
    if (!row.is_array()) schema_error("each theta row must be an array");
    auto& out = theta.emplace_back();
    for (const auto& v : row) out.push_back(parse_scalar(v));
  }
  std::vector<std::int64_t> population;
  for (const auto& v : doc["population"]) {
    if (!v.is_number_integer()) schema_error("population entries must be integers");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > 1'000'000'000ULL) {
      schema_error("population entry too large");
    }
    population.push_back(v.get<std::int64_t>());
  }

  QuantitySelection quantity = QuantitySelection::Both;
  if (doc.contains("quantity")) {
    const auto& q = doc["quantity"];
    std::optional<QuantitySelection> parsed;
    if (q.is_string()) parsed = parse_quantity(q.get<std::string>());
    if (!parsed) schema_error("\"quantity\" must be \"G\", \"J\" or \"both\"");
    quantity = *parsed;
  }
  return InstanceFile{validate(theta, population), quantity};
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) schema_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

}  // namespace simplexint::cli
