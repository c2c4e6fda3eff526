#include "cli/app.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <future>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/generator.hpp"
#include "json.hpp"
#include "simplexint/combinatorics.hpp"
#include "simplexint/explicit.hpp"
#include "simplexint/recurrences.hpp"

namespace simplexint::cli {

using ojson = nlohmann::ordered_json;

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> kAll = {
      Algorithm::Convolution, Algorithm::Recal,     Algorithm::Koe58,
      Algorithm::Gen,         Algorithm::Explicit1, Algorithm::ExplicitRepeated,
      Algorithm::Explicit2,   Algorithm::Taylor,    Algorithm::BruteForce,
      Algorithm::Monomial,
  };
  return kAll;
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : all_algorithms()) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

ComputationResult run_algorithm(Algorithm algorithm, const Instance& instance,
                                const Guards& guards) {
  switch (algorithm) {
    case Algorithm::Convolution: return convolution_g(instance);
    case Algorithm::Recal: return recal_g(instance);
    case Algorithm::Koe58: return koe58_g(instance);
    case Algorithm::Gen: return gen_g(instance);
    case Algorithm::Explicit1: return explicit1_g(instance);
    case Algorithm::ExplicitRepeated: return explicit_repeated_g(instance);
    case Algorithm::Explicit2: return explicit2_g(instance);
    case Algorithm::Taylor: return taylor_g(instance);
    case Algorithm::BruteForce: return bruteforce_g(instance, guards.states);
    case Algorithm::Monomial: return monomial_integrate_j(instance, guards.expansion);
  }
  throw Error(ErrorKind::InvalidLiteral, "unknown algorithm");
}

std::uint64_t convolution_cost_estimate(const Instance& instance) {
  std::uint64_t cells = instance.stations();
  for (std::size_t nj : instance.population().counts()) cells = mul_saturating(cells, nj + 1);
  return cells;
}

std::uint64_t recal_cost_estimate(const Instance& instance) {
  const std::size_t distinct = fold_rows(instance.theta()).base.rows();
  return binomial_saturating(instance.population().total() + distinct, distinct);
}

Algorithm select_auto(const Instance& instance) {
  return recal_cost_estimate(instance) < convolution_cost_estimate(instance) ? Algorithm::Recal
                                                                             : Algorithm::Convolution;
}

namespace {

bool is_skip(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WrongClassCount:
    case ErrorKind::RepeatedCoefficients:
    case ErrorKind::DegenerateDenominator:
    case ErrorKind::StateSpaceTooLarge:
    case ErrorKind::ExpansionTooLarge:
      return true;
    default:
      return false;
  }
}

CheckEntry check_one(Algorithm algorithm, const Instance& instance, const Guards& guards) {
  CheckEntry entry;
  entry.algorithm = algorithm;
  try {
    auto result = run_algorithm(algorithm, instance, guards);
    entry.work = result.work;
    if (result.quantity == Quantity::J) {
      entry.g = j_to_g(result.value, instance);
      entry.j = std::move(result.value);
    } else {
      entry.g = std::move(result.value);
    }
  } catch (const Error& e) {
    if (!is_skip(e.kind())) throw;
    entry.skipped = true;
    entry.reason = std::string(to_string(e.kind()));
    entry.message = e.what();
  }
  return entry;
}

ojson work_json(const WorkCounters& w) {
  ojson j;
  j["table_entries"] = w.table_entries;
  j["terms"] = w.terms;
  return j;
}

std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int report_error(const Error& e, int code, bool json, std::ostream& out, std::ostream& err) {
  if (json) {
    ojson j;
    j["status"] = "error";
    j["error"] = to_string(e.kind());
    j["message"] = e.what();
    out << j.dump() << "\n";
  }
  err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
  return code;
}

struct ComputeOptions {
  std::string input;
  std::string algorithm = "auto";
  std::string quantity;
  std::string output = "json";
  std::uint64_t guard = kDefaultStateGuard;
};

int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err) {
  const bool json = opts.output == "json";
  std::optional<InstanceFile> file;
  Algorithm algorithm = Algorithm::Convolution;
  try {
    file = load_instance_file(opts.input);
    if (!opts.quantity.empty()) {
      const auto q = parse_quantity(opts.quantity);
      if (!q) throw Error(ErrorKind::InvalidLiteral, "--quantity must be G, J or both");
      file->quantity = *q;
    }
    if (opts.algorithm == "auto") {
      algorithm = select_auto(file->instance);
    } else if (const auto a = parse_algorithm(opts.algorithm)) {
      algorithm = *a;
    } else {
      throw Error(ErrorKind::InvalidLiteral, "unknown algorithm '" + opts.algorithm + "'");
    }
  } catch (const Error& e) {
    return report_error(e, exit_code::kInvalidInput, json, out, err);
  }

  ComputationResult result;
  try {
    result = run_algorithm(algorithm, file->instance, Guards{opts.guard, opts.guard});
  } catch (const Error& e) {
    return report_error(e, exit_code::kPrecondition, json, out, err);
  }
  const Instance& inst = file->instance;
  const Rational g = result.quantity == Quantity::G ? result.value : j_to_g(result.value, inst);
  const Rational j = result.quantity == Quantity::J ? result.value : g_to_j(result.value, inst);
  const bool show_g = file->quantity != QuantitySelection::J;
  const bool show_j = file->quantity != QuantitySelection::G;

  if (json) {
    ojson doc;
    doc["status"] = "ok";
    if (show_g) doc["G"] = g.str();
    if (show_j) doc["J"] = j.str();
    if (show_g) doc["G_decimal"] = g.to_decimal(15);
    if (show_j) doc["J_decimal"] = j.to_decimal(15);
    doc["algorithm"] = to_string(algorithm);
    doc["work"] = work_json(result.work);
    out << doc.dump() << "\n";
  } else {
    out << "algorithm: " << to_string(algorithm) << "\n";
    if (show_g) out << "G = " << g << "  (~" << g.to_decimal(15) << ")\n";
    if (show_j) out << "J = " << j << "  (~" << j.to_decimal(15) << ")\n";
    out << "work: table_entries=" << result.work.table_entries << " terms=" << result.work.terms
        << "\n";
  }
  return exit_code::kOk;
}

}  // namespace

CheckReport build_check_report(const Instance& instance, const Guards& guards) {
  CheckReport report;
  std::vector<std::future<CheckEntry>> pending;
  for (Algorithm a : all_algorithms()) {
    pending.push_back(std::async(std::launch::async, [a, &instance, &guards] {
      return check_one(a, instance, guards);
    }));
  }
  for (auto& f : pending) report.entries.push_back(f.get());

  const auto brute = std::find_if(report.entries.begin(), report.entries.end(), [](const auto& e) {
    return e.algorithm == Algorithm::BruteForce;
  });
  const auto conv = std::find_if(report.entries.begin(), report.entries.end(), [](const auto& e) {
    return e.algorithm == Algorithm::Convolution;
  });
  const auto& ref = brute->skipped ? *conv : *brute;
  report.reference_algorithm = ref.algorithm;
  report.reference = ref.g;
  for (const auto& e : report.entries) {
    if (!e.skipped && e.g != report.reference) report.agreement = false;
  }
  return report;
}

namespace {

struct CheckOptions {
  std::string input;
  std::string output = "json";
  std::uint64_t guard = kDefaultStateGuard;
};

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  const bool json = opts.output == "json";
  std::optional<InstanceFile> file;
  try {
    file = load_instance_file(opts.input);
  } catch (const Error& e) {
    return report_error(e, exit_code::kInvalidInput, json, out, err);
  }
  const CheckReport report = build_check_report(file->instance, Guards{opts.guard, opts.guard});
  const Rational ref_j = g_to_j(report.reference, file->instance);

  if (json) {
    ojson doc;
    doc["status"] = report.agreement ? "ok" : "disagreement";
    doc["agreement"] = report.agreement;
    doc["reference"] = {{"algorithm", to_string(report.reference_algorithm)},
                        {"G", report.reference.str()},
                        {"J", ref_j.str()}};
    ojson results = ojson::array();
    for (const auto& e : report.entries) {
      ojson r;
      r["algorithm"] = to_string(e.algorithm);
      if (e.skipped) {
        r["status"] = "skipped";
        r["reason"] = e.reason;
        r["message"] = e.message;
      } else {
        r["status"] = "ok";
        r["G"] = e.g.str();
        if (e.j) r["J"] = e.j->str();
        r["agrees"] = e.g == report.reference;
        r["work"] = work_json(e.work);
      }
      results.push_back(std::move(r));
    }
    doc["results"] = std::move(results);
    out << doc.dump() << "\n";
  } else {
    out << "reference (" << to_string(report.reference_algorithm) << "): G = " << report.reference
        << ", J = " << ref_j << "\n";
    for (const auto& e : report.entries) {
      std::string name(to_string(e.algorithm));
      name.resize(std::max<std::size_t>(name.size(), 18), ' ');
      out << name;
      if (e.skipped) {
        out << "skipped: " << e.reason << "\n";
        continue;
      }
      out << e.g;
      if (e.j) out << " (J = " << *e.j << ")";
      out << (e.g == report.reference ? "" : "  MISMATCH") << "  [table_entries="
          << e.work.table_entries << " terms=" << e.work.terms << "]\n";
    }
    out << "agreement: " << (report.agreement ? "true" : "false") << "\n";
  }
  return report.agreement ? exit_code::kOk : exit_code::kDisagreement;
}

// Comma-separated items, each "k" or an inclusive range "a..b".
std::vector<std::size_t> parse_range_list(const std::string& text, const char* flag) {
  std::vector<std::size_t> values;
  std::stringstream ss(text);
  std::string item;
  auto bad = [&] {
    throw Error(ErrorKind::InvalidLiteral, std::string("invalid range for ") + flag + ": '" +
                                               text + "'");
  };
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; }) || s.size() > 9) bad();
    return std::stoul(s);
  };
  while (std::getline(ss, item, ',')) {
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const std::size_t a = number(item.substr(0, dots));
      const std::size_t b = number(item.substr(dots + 2));
      if (a > b) bad();
      for (std::size_t v = a; v <= b; ++v) values.push_back(v);
    } else {
      values.push_back(number(item));
    }
  }
  if (values.empty()) bad();
  return values;
}

struct BenchOptions {
  std::string stations = "4";
  std::string classes = "1";
  std::string population = "10";
  std::string algorithms;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::uint64_t guard = kDefaultStateGuard;
};

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<std::size_t> ns, ds, pops;
  std::vector<Algorithm> algorithms;
  try {
    ns = parse_range_list(opts.stations, "--n");
    ds = parse_range_list(opts.classes, "--d");
    pops = parse_range_list(opts.population, "--N");
    if (std::find(ns.begin(), ns.end(), 0) != ns.end()) {
      throw Error(ErrorKind::EmptyStations, "--n values must be >= 1");
    }
    if (std::find(ds.begin(), ds.end(), 0) != ds.end()) {
      throw Error(ErrorKind::EmptyClasses, "--d values must be >= 1");
    }
    if (opts.format != "csv" && opts.format != "json") {
      throw Error(ErrorKind::InvalidLiteral, "--format must be csv or json");
    }
    if (opts.algorithms.empty()) {
      algorithms = all_algorithms();
    } else {
      std::stringstream ss(opts.algorithms);
      std::string name;
      while (std::getline(ss, name, ',')) {
        const auto a = parse_algorithm(name);
        if (!a) throw Error(ErrorKind::InvalidLiteral, "unknown algorithm '" + name + "'");
        algorithms.push_back(*a);
      }
      if (algorithms.empty()) throw Error(ErrorKind::InvalidLiteral, "no algorithms given");
    }
  } catch (const Error& e) {
    return report_error(e, exit_code::kInvalidInput, false, out, err);
  }

  InstanceGenerator gen(opts.seed);
  RandomThetaOptions theta_opts;
  theta_opts.distinct_columns = true;
  const Guards guards{opts.guard, opts.guard};

  ojson records = ojson::array();
  if (opts.format == "csv") {
    out << "n,d,population,algorithm,status,table_entries,terms,wall_seconds,value_hash\n";
  }
  for (std::size_t n : ns) {
    for (std::size_t d : ds) {
      for (std::size_t nj : pops) {
        const Instance inst = gen.instance(n, std::vector<std::size_t>(d, nj), theta_opts);
        std::string pop_label;
        for (std::size_t j = 0; j < d; ++j) pop_label += (j ? "x" : "") + std::to_string(nj);
        for (Algorithm a : algorithms) {
          std::string status = "ok";
          WorkCounters work;
          std::string hash;
          const auto t0 = std::chrono::steady_clock::now();
          try {
            const auto r = run_algorithm(a, inst, guards);
            const Rational g = r.quantity == Quantity::J ? j_to_g(r.value, inst) : r.value;
            work = r.work;
            hash = fnv1a_hex(g.str());
          } catch (const Error& e) {
            if (!is_skip(e.kind())) throw;
            status = "skipped:" + std::string(to_string(e.kind()));
          }
          const double secs =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          if (opts.format == "csv") {
            out << n << "," << d << "," << pop_label << "," << to_string(a) << "," << status << ","
                << work.table_entries << "," << work.terms << "," << secs << "," << hash << "\n";
          } else {
            ojson r;
            r["n"] = n;
            r["d"] = d;
            r["population"] = std::vector<std::size_t>(d, nj);
            r["algorithm"] = to_string(a);
            r["status"] = status;
            r["work"] = work_json(work);
            r["wall_seconds"] = secs;
            r["value_hash"] = hash;
            records.push_back(std::move(r));
          }
        }
      }
    }
  }
  if (opts.format == "json") out << records.dump() << "\n";
  return exit_code::kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact integration of products of linear forms over the unit simplex", "simplexint"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Compute G and/or J for an instance file");
  c->add_option("--input", compute.input, "Instance JSON file")->required();
  c->add_option("--algorithm", compute.algorithm, "Algorithm name or auto");
  c->add_option("--quantity", compute.quantity, "G, J or both (overrides the file)");
  c->add_option("--output", compute.output, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  c->add_option("--guard", compute.guard, "State-space / expansion cap for the oracles");

  CheckOptions check;
  auto* k = app.add_subcommand("check", "Run every applicable algorithm and compare");
  k->add_option("--input", check.input, "Instance JSON file")->required();
  k->add_option("--output", check.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  k->add_option("--guard", check.guard, "State-space / expansion cap for the oracles");

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Measure work counters over a seeded instance family");
  b->add_option("--n", bench.stations, "Station counts, e.g. 4 or 2..4");
  b->add_option("--d", bench.classes, "Class counts");
  b->add_option("--N", bench.population, "Per-class populations, e.g. 50,100,200");
  b->add_option("--algorithms", bench.algorithms, "Comma-separated algorithm names");
  b->add_option("--seed", bench.seed, "Instance generator seed");
  b->add_option("--format", bench.format, "csv or json");
  b->add_option("--guard", bench.guard, "State-space / expansion cap for the oracles");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kInvalidInput;
  }

  if (c->parsed()) return cmd_compute(compute, out, err);
  if (k->parsed()) return cmd_check(check, out, err);
  return cmd_bench(bench, out, err);
}

}  // namespace simplexint::cli
