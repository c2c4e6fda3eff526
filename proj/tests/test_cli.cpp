#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <unistd.h>

#include "cli/app.hpp"
#include "cli/instance_file.hpp"
#include "json.hpp"
#include "simplexint/combinatorics.hpp"
#include "support/family.hpp"

using namespace simplexint;
using json = nlohmann::json;

namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("simplexint_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
             ".json");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string instance_json(const Instance& inst) {
  json doc;
  doc["theta"] = json::array();
  for (std::size_t i = 0; i < inst.stations(); ++i) {
    json row = json::array();
    for (const auto& v : inst.theta().row(i)) row.push_back(v.str());
    doc["theta"].push_back(row);
  }
  doc["population"] = std::vector<std::size_t>(inst.population().counts().begin(),
                                               inst.population().counts().end());
  return doc.dump();
}

bool lowest_terms(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return true;
  const BigInt p(s.substr(0, slash), 10);
  const BigInt q(s.substr(slash + 1), 10);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return q > 1 && g == 1;
}

}  // namespace

TEST_CASE("instance file parsing") {
  const auto f = cli::parse_instance_json(
      R"({"theta": [[1, "0.25"], ["-3/6", "1e2"]], "population": [1, 2], "quantity": "G"})");
  CHECK(f.instance.theta()(0, 1) == Rational(1, 4));
  CHECK(f.instance.theta()(1, 0) == Rational(-1, 2));
  CHECK(f.instance.theta()(1, 1) == Rational(100));
  CHECK(f.quantity == cli::QuantitySelection::G);

  for (const char* bad : {R"({"theta": [[0.25]], "population": [1]})",
                          R"({"theta": [["1/0"]], "population": [1]})",
                          R"({"theta": [["x"]], "population": [1]})",
                          R"({"theta": [[1]], "population": [1.5]})",
                          R"({"theta": [[1]], "population": [1], "quantity": "K"})",
                          R"({"population": [1]})", R"([1, 2])", R"({"theta": [[1]],)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(cli::parse_instance_json(bad), Error);
  }
  try {
    (void)cli::parse_instance_json(R"({"theta": [[1], [2]], "population": [-1]})");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativePopulation);
  }
}

TEST_CASE("compute: golden JSON output") {
  TempFile file(R"({"theta": [[1], [2]], "population": [2]})");
  const auto r = run_cli({"compute", "--input", file.path()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"status":"ok","G":"7","J":"7/3","G_decimal":"7","J_decimal":"2.33333333333333",)"
        R"("algorithm":"convolution","work":{"table_entries":9,"terms":0}})"
        "\n");
  // Byte-identical on rerun.
  CHECK(run_cli({"compute", "--input", file.path()}).out == r.out);
}

TEST_CASE("compute: every algorithm gives the golden value") {
  TempFile file(R"({"theta": [[1], [2]], "population": [2]})");
  for (Algorithm a : cli::all_algorithms()) {
    const auto r = run_cli({"compute", "--input", file.path(), "--algorithm",
                            std::string(to_string(a))});
    CAPTURE(to_string(a));
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["G"] == "7");
    CHECK(doc["J"] == "7/3");
    CHECK(doc["algorithm"] == to_string(a));
  }
}

TEST_CASE("compute: zero population and quantity selection") {
  TempFile file(R"({"theta": [[3, "1/2"], [2, -4]], "population": [0, 0], "quantity": "G"})");
  const auto doc = json::parse(run_cli({"compute", "--input", file.path()}).out);
  CHECK(doc["G"] == "1");
  CHECK_FALSE(doc.contains("J"));

  const auto j_only =
      json::parse(run_cli({"compute", "--input", file.path(), "--quantity", "J"}).out);
  CHECK(j_only["J"] == "1");
  CHECK_FALSE(j_only.contains("G"));

  const auto text = run_cli({"compute", "--input", file.path(), "--output", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("G = 1") != std::string::npos);
}

TEST_CASE("compute: exit codes") {
  TempFile repeated(R"({"theta": [[1], [1]], "population": [2]})");
  const auto r = run_cli({"compute", "--input", repeated.path(), "--algorithm", "koe58"});
  CHECK(r.code == 3);
  const auto doc = json::parse(r.out);
  CHECK(doc["status"] == "error");
  CHECK(doc["error"] == "RepeatedCoefficients");
  CHECK(doc["message"].get<std::string>().find("\"gen\"") != std::string::npos);
  CHECK(r.err.find("RepeatedCoefficients") != std::string::npos);

  TempFile degenerate(R"({"theta": [[1, 2], [2, 1]], "population": [1, 1]})");
  CHECK(run_cli({"compute", "--input", degenerate.path(), "--algorithm", "explicit1"}).code == 3);
  CHECK(run_cli({"compute", "--input", degenerate.path()}).code == 0);

  TempFile mismatch(R"({"theta": [[1, 1], [2, 3]], "population": [1]})");
  CHECK(run_cli({"compute", "--input", mismatch.path()}).code == 2);
  TempFile malformed(R"({"theta": [["1.2.3"]], "population": [1]})");
  CHECK(run_cli({"compute", "--input", malformed.path()}).code == 2);
  CHECK(run_cli({"compute", "--input", "/nonexistent/file.json"}).code == 2);
  CHECK(run_cli({"compute", "--input", mismatch.path(), "--algorithm", "nope"}).code == 2);
  CHECK(run_cli({"compute"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
}

TEST_CASE("auto selection uses cost formulas") {
  using testing::make_instance;
  // Many classes, few stations: the multiplicity-state count is smaller.
  const auto many_classes = make_instance({{1, 2, 3, 4}, {2, 1, 1, 3}}, {3, 3, 3, 3});
  CHECK(cli::convolution_cost_estimate(many_classes) == 2 * 256);
  CHECK(cli::recal_cost_estimate(many_classes) == binomial_saturating(14, 2));
  CHECK(cli::select_auto(many_classes) == Algorithm::Recal);
  // One class, many stations: convolution.
  const auto one_class = make_instance({{1}, {2}, {3}, {4}, {5}}, {20});
  CHECK(cli::select_auto(one_class) == Algorithm::Convolution);
}

TEST_CASE("check: agreement and skips") {
  TempFile two_class(R"({"theta": [[1, 1], [2, 3]], "population": [1, 1]})");
  auto r = run_cli({"check", "--input", two_class.path()});
  CHECK(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["agreement"] == true);
  CHECK(doc["reference"]["algorithm"] == "bruteforce");
  CHECK(doc["reference"]["G"] == "19");
  CHECK(doc["reference"]["J"] == "19/6");
  for (const auto& e : doc["results"]) {
    if (e["status"] == "ok") CHECK(e["G"] == "19");
  }

  TempFile negative(R"({"theta": [[1], [-1]], "population": [2]})");
  doc = json::parse(run_cli({"check", "--input", negative.path()}).out);
  CHECK(doc["agreement"] == true);
  for (const auto& e : doc["results"]) {
    CHECK(e["status"] == "ok");
    CHECK(e["G"] == "1");
  }

  TempFile repeated(R"({"theta": [[1], [1]], "population": [3]})");
  r = run_cli({"check", "--input", repeated.path(), "--output", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("skipped: RepeatedCoefficients") != std::string::npos);
  CHECK(r.out.find("agreement: true") != std::string::npos);

  // A guard below the state count falls back to convolution as reference.
  r = run_cli({"check", "--input", two_class.path(), "--guard", "2"});
  doc = json::parse(r.out);
  CHECK(r.code == 0);
  CHECK(doc["reference"]["algorithm"] == "convolution");
}

TEST_CASE("check: exit 0 on the desk family, outputs in lowest terms") {
  const std::regex rational_re(R"re("(G|J)":"(-?[0-9]+(/[0-9]+)?)")re");
  for (const auto& inst : testing::desk_family(401, 40, {4, 3, 4})) {
    TempFile f(instance_json(inst));
    const auto r = run_cli({"check", "--input", f.path()});
    CHECK(r.code == 0);
    for (std::sregex_iterator it(r.out.begin(), r.out.end(), rational_re), end; it != end; ++it) {
      CHECK(lowest_terms((*it)[2].str()));
    }
  }
}

TEST_CASE("bench: work counter formulas") {
  auto r = run_cli({"bench", "--n", "4", "--d", "1", "--N", "50,100,200", "--algorithms",
                    "convolution", "--seed", "7"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,d,population,algorithm,status,table_entries,terms,wall_seconds,value_hash");
  std::vector<std::uint64_t> entries;
  while (std::getline(lines, line)) {
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) cols.push_back(c);
    REQUIRE(cols.size() == 9);
    entries.push_back(std::stoull(cols[5]));
  }
  CHECK(entries == std::vector<std::uint64_t>{5 * 51, 5 * 101, 5 * 201});

  r = run_cli({"bench", "--n", "4", "--d", "1", "--N", "5,10,20", "--algorithms", "explicit2",
               "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  REQUIRE(doc.size() == 3);
  CHECK(doc[0]["work"]["terms"] == binomial_saturating(9, 4));
  CHECK(doc[1]["work"]["terms"] == binomial_saturating(14, 4));
  CHECK(doc[2]["work"]["terms"] == binomial_saturating(24, 4));
}

TEST_CASE("bench: convolution and recal agree on N=(6,6), n=3") {
  const auto r = run_cli({"bench", "--n", "3", "--d", "2", "--N", "6", "--algorithms",
                          "convolution,recal", "--format", "json", "--seed", "3"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["value_hash"] == doc[1]["value_hash"]);
  CHECK(doc[0]["work"]["table_entries"] == 4 * 7 * 7);
  CHECK(doc[0]["work"]["table_entries"] != doc[1]["work"]["table_entries"]);
}

TEST_CASE("bench: invalid ranges") {
  CHECK(run_cli({"bench", "--n", ""}).code == 2);
  CHECK(run_cli({"bench", "--n", "0"}).code == 2);
  CHECK(run_cli({"bench", "--d", "3..1"}).code == 2);
  CHECK(run_cli({"bench", "--N", "a"}).code == 2);
  CHECK(run_cli({"bench", "--algorithms", "nope"}).code == 2);
  CHECK(run_cli({"bench", "--format", "xml"}).code == 2);
}
