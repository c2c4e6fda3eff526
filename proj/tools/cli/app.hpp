#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cli/instance_file.hpp"
#include "simplexint/core.hpp"
#include "simplexint/oracles.hpp"

namespace simplexint::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kPrecondition = 3;
inline constexpr int kDisagreement = 4;
}  // namespace exit_code

// Every algorithm in the fixed order used by `check` and default bench runs.
const std::vector<Algorithm>& all_algorithms();
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct Guards {
  std::uint64_t states = kDefaultStateGuard;
  std::uint64_t expansion = kDefaultExpansionGuard;
};

// Dispatches one algorithm. Monomial returns J; every other algorithm G.
ComputationResult run_algorithm(Algorithm algorithm, const Instance& instance,
                                const Guards& guards = {});

// Cost estimates used by "auto": convolution n ∏(N_j + 1) against RECAL's
// multiplicity-state count C(N + n', n') with n' distinct rows.
std::uint64_t convolution_cost_estimate(const Instance& instance);
std::uint64_t recal_cost_estimate(const Instance& instance);
Algorithm select_auto(const Instance& instance);

struct CheckEntry {
  Algorithm algorithm;
  bool skipped = false;
  std::string reason;   // ErrorKind name when skipped
  std::string message;
  Rational g;           // comparable G value (j_to_g for the monomial route)
  std::optional<Rational> j;
  WorkCounters work;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  Algorithm reference_algorithm = Algorithm::BruteForce;
  Rational reference;
  bool agreement = true;
};

CheckReport build_check_report(const Instance& instance, const Guards& guards = {});

// Full command-line entry point; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplexint::cli
