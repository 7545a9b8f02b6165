// clifan: verify, classify, solve, demo.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clifan/classifier.hpp"
#include "clifan/expr_parser.hpp"
#include "clifan/json_io.hpp"
#include "clifan/solver.hpp"
#include "clifan/verify.hpp"

using namespace clifan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::vector<int> dimensions{2, 3, 4, 5};
  int m = 3;
  int degree = 2;
  std::string phi = "standard";
  std::string psi = "reversed";
  std::string expr;
  std::string format = "text";
  std::uint64_t seed = 1;
  int trials = 50;
  std::vector<std::string> regions;
  std::string fault;
};

void check_dimension(int m) {
  if (m < 1 || m > kMaxDimension)
    throw CLI::ValidationError("--m", "dimension " + std::to_string(m) + " outside 1.." + std::to_string(kMaxDimension));
}

int cmd_verify(const Options& o) {
  VerifyConfig config;
  config.dimensions = o.dimensions;
  config.trials = o.trials;
  config.seed = o.seed;
  if (!o.fault.empty()) config.fault = o.fault;
  const VerifyReport report = run_verification(config);
  if (o.format == "json")
    std::cout << report_to_json(report).dump(2) << "\n";
  else
    std::cout << format_text(report);
  return report.all_passed() ? kExitOk : kExitFailure;
}

int cmd_classify(const Options& o) {
  check_dimension(o.m);
  const StructuralSet phi = parse_set_spec(o.phi, o.m), psi = parse_set_spec(o.psi, o.m);
  const PolyField f = parse_field(o.expr, o.m);
  const ClassMembership c = classify(phi, psi, f);
  if (o.format == "json") {
    json out = membership_to_json(c);
    out["m"] = o.m;
    out["field"] = format(f);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "field: " << format(f) << "\n"
              << "harmonic:         " << (c.harmonic ? "yes" : "no") << "\n"
              << "phi-psi-harmonic: " << (c.phi_psi_harmonic ? "yes" : "no") << "\n"
              << "inframonogenic:   " << (c.inframonogenic ? "yes" : "no") << "\n"
              << "left monogenic:   " << (c.hyperholomorphic_left ? "yes" : "no") << "\n"
              << "right monogenic:  " << (c.hyperholomorphic_right ? "yes" : "no") << "\n"
              << "region: " << c.region().name() << "\n";
  }
  return kExitOk;
}

int cmd_solve(const Options& o) {
  check_dimension(o.m);
  if (o.degree < 0) throw CLI::ValidationError("--degree", "degree must be non-negative");
  const StructuralSet phi = parse_set_spec(o.phi, o.m), psi = parse_set_spec(o.psi, o.m);
  std::vector<RegionLabel> targets;
  for (const auto& r : o.regions) {
    const auto label = RegionLabel::parse(r);
    if (!label) throw CLI::ValidationError("--region", "unknown region '" + r + "'");
    targets.push_back(*label);
  }
  const ClassDimensions dims = class_dimensions(phi, psi, o.degree);
  json witnesses = json::array();
  for (const auto& target : targets) {
    const auto w = find_region_witness(phi, psi, o.degree, target);
    json entry{{"region", target.name()}, {"found", w.has_value()}};
    entry["field"] = w ? field_to_json(*w) : json(nullptr);
    entry["text"] = w ? format(*w) : std::string();
    witnesses.push_back(entry);
  }
  if (o.format == "json") {
    const json out{{"m", o.m},
                   {"d", o.degree},
                   {"sets", {{"phi", format(phi)}, {"psi", format(psi)}}},
                   {"dims", dimensions_to_json(dims)},
                   {"witnesses", witnesses}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "m=" << o.m << " d=" << o.degree << "\n"
              << "phi: " << format(phi) << "\n"
              << "psi: " << format(psi) << "\n";
    const json table = dimensions_to_json(dims);
    for (const auto& [key, value] : table.items()) std::cout << "  dim " << key << " = " << value << "\n";
    for (const auto& w : witnesses)
      std::cout << "witness " << w["region"].get<std::string>() << ": "
                << (w["found"].get<bool>() ? w["text"].get<std::string>() : "not found (bounded search)") << "\n";
  }
  return kExitOk;
}

int cmd_demo(const Options& o) {
  const auto cases = run_demo();
  bool ok = true;
  if (o.format == "json") {
    json out = json::array();
    for (const auto& c : cases) {
      out.push_back({{"case", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
      ok = ok && c.ok;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : cases) {
      std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << "\n"
                << "     expected: " << c.expected << "\n"
                << "     actual:   " << c.actual << "\n";
      ok = ok && c.ok;
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clifford analysis: Psi operators and harmonic/inframonogenic classes"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_sets = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "Dimension")->check(CLI::Range(1, kMaxDimension));
    sub->add_option("--phi", o.phi, "Structural set phi: standard|reversed|signedperm:..|rot2:c|refl2:c|matrix:path|vectors:..");
    sub->add_option("--psi", o.psi, "Structural set psi");
  };

  auto* verify = app.add_subcommand("verify", "Run the identity suite on seeded random inputs");
  verify->add_option("--m", o.dimensions, "Dimensions (comma separated)")->delimiter(',')->check(CLI::Range(2, 7));
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--trials", o.trials, "Trials per identity and dimension")->check(CLI::Range(1, 100000));
  verify->add_option("--inject-fault", o.fault, "Test hook")->check(CLI::IsMember({"recursion"}))->group("");
  add_format(verify);

  auto* classify_cmd = app.add_subcommand("classify", "Classify a polynomial field");
  add_sets(classify_cmd);
  classify_cmd->add_option("--expr", o.expr, "Field expression, e.g. \"x1*x3*e[1] + x2*e[2]\"")->required();
  add_format(classify_cmd);

  auto* solve = app.add_subcommand("solve", "Dimensions of the classes among homogeneous fields");
  add_sets(solve);
  solve->add_option("--degree", o.degree, "Homogeneous degree")->check(CLI::NonNegativeNumber);
  solve->add_option("--region", o.regions, "Region to find a witness for, e.g. Hpp&I (repeatable)");
  add_format(solve);

  auto* demo = app.add_subcommand("demo", "Replay the worked examples");
  add_format(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*solve) return cmd_solve(o);
    return cmd_demo(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
