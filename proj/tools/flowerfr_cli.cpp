// flowerfr: command-line front end for Flower-code construction, verification
// and capacity/repair analysis.
//
// Exit codes: 0 ok, 1 input or argument error, 2 generation stuck,
// 3 verification negative, 4 irreparable node.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "flowerfr/flowerfr.hpp"

namespace {

using nlohmann::json;
using namespace flowerfr;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitStuck = 2;
constexpr int kExitNotGood = 3;
constexpr int kExitIrreparable = 4;

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

FrCode code_of(const io::Document& doc) {
  if (const auto* code = std::get_if<FrCode>(&doc)) return *code;
  return construct(std::get<FlowerSpec>(doc)).code;
}

std::string join(const std::vector<std::size_t>& v, const char* prefix) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::string(prefix) + std::to_string(v[i]);
  return out;
}

std::string braces(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

// ---------------------------------------------------------------------------
// Report: everything recomputable from the code alone.

struct Report {
  FrCode code;
  CodeParameters params;
  GoodnessVerdict verdict;
  std::optional<CapacityProfile> capacity;  // empty when the subset ceiling trips
  std::string capacity_note;
  RepairabilityReport repair;
};

Report build_report(const FrCode& code) {
  Report r{code, parameters(code), check_universally_good(code), std::nullopt, {}, repairability(code)};
  try {
    r.capacity = capacity_profile(code);
  } catch (const LimitError& e) {
    r.capacity_note = e.what();
  }
  return r;
}

json report_json(const Report& r) {
  json out = {{"parameters", io::to_json(r.params)},
              {"goodness", io::to_json(r.verdict)},
              {"capacity", r.capacity ? io::to_json(*r.capacity) : json(nullptr)},
              {"repairability", io::to_json(r.repair)}};
  if (!r.capacity) out["capacity_note"] = r.capacity_note;
  return out;
}

void print_code(std::ostream& os, const FrCode& code) {
  const auto lists = code.node_lists();
  for (std::size_t i = 0; i < lists.size(); ++i) {
    os << "  U" << (i + 1) << " = " << braces(lists[i]) << "\n";
  }
}

void print_capacity(std::ostream& os, const CapacityProfile& p) {
  os << "  " << std::setw(4) << "k" << std::setw(12) << "M(k)" << std::setw(12) << "best-case"
     << std::setw(12) << "MBR" << std::setw(14) << "generalized" << "\n";
  for (const auto& row : p.rows) {
    os << "  " << std::setw(4) << row.k << std::setw(12) << row.guaranteed << std::setw(12)
       << row.best_case << std::setw(12) << (row.mbr_bound ? std::to_string(*row.mbr_bound) : "-")
       << std::setw(14) << row.generalized_bound << "\n";
  }
  os << "  MBR bound " << (p.uniform_storage ? "applies (uniform alpha)" : "shown for reference only (non-uniform alpha)")
     << "; generalized bound "
     << (p.pairwise_condition ? "is a valid lower bound (pairwise overlap <= 1)"
                              : "not guaranteed (some pair shares more than one packet)")
     << "\n";
}

std::string good_yes(const GoodnessVerdict& v) {
  if (v.duplicates.empty()) return "universally good: yes\n";
  return "universally good: pairwise yes, but " + std::to_string(v.duplicates.size()) +
         " same-node duplicate(s), so not a set code\n";
}

void print_report(std::ostream& os, const Report& r) {
  const auto& p = r.params;
  os << "code: n=" << r.code.node_count() << " theta=" << r.code.packet_count()
     << " alpha=" << p.max_storage << " rho=" << p.max_replication << "\n";
  print_code(os, r.code);
  os << "alpha_i = " << braces(p.storage) << "\n";
  os << "rho_j   = " << braces(p.replication) << "\n";

  if (r.verdict.universally_good) {
    os << good_yes(r.verdict);
  } else {
    const auto& w = *r.verdict.witness;
    os << "universally good: no (U" << w.first << " and U" << w.second << " share " << w.overlap
       << ": " << join(w.shared_packets, "P") << ")\n";
  }
  for (const auto& d : r.verdict.duplicates) {
    os << "warning: U" << d.node << " holds " << d.copies << " copies of P" << d.packet << "\n";
  }

  os << "file size:\n";
  if (r.capacity) {
    print_capacity(os, *r.capacity);
  } else {
    os << "  skipped: " << r.capacity_note << "\n";
  }

  os << "repair (max degree d=" << r.repair.max_repair_degree << "):\n";
  for (const auto& n : r.repair.nodes) {
    if (n.repairable) {
      os << "  U" << n.node << ": d=" << n.repair_degree << " bandwidth=" << n.bandwidth << "\n";
    } else {
      os << "  U" << n.node << ": irreparable, lost " << join(n.lost_packets, "P") << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Subcommands.

struct Options {
  bool json = false;
  std::string input;
  std::string out;
  std::string trace;
  std::string out_spec;
  std::string out_code;
  std::size_t n = 0;
  std::size_t theta = 0;
  std::size_t z = 0;
  std::string strategy = "lex";
  std::optional<std::uint64_t> seed;
  std::size_t retries = 32;
  std::optional<std::size_t> k;
  std::string mode;
  std::size_t node = 0;
  std::string block;
};

int cmd_construct(const Options& o) {
  const auto doc = io::parse_document(read_file(o.input));
  const auto* spec = std::get_if<FlowerSpec>(&doc);
  if (!spec) throw CliError("construct expects a spec document {n, theta, x, y}");
  const auto built = construct(*spec);
  if (!o.out.empty()) write_file(o.out, dump(io::to_json(built.code)));
  if (!o.trace.empty()) write_file(o.trace, io::trace_to_text(built.trace));

  const auto report = build_report(built.code);
  if (o.json) {
    std::cout << dump({{"spec", io::to_json(*spec)},
                       {"code", io::to_json(built.code)},
                       {"report", report_json(report)}});
  } else {
    print_report(std::cout, report);
  }
  return kExitOk;
}

int cmd_generate(const Options& o) {
  const auto strategy = parse_strategy(o.strategy);
  if (!strategy) throw CliError("unknown strategy '" + o.strategy + "' (lex, random, row, col)");
  const bool drew_seed = !o.seed.has_value();
  std::uint64_t seed = o.seed.value_or(draw_seed());
  if (drew_seed) std::cerr << "seed: " << seed << "\n";

  // Only the random strategy depends on the seed, so only it is retried.
  const std::size_t attempts = *strategy == Strategy::kRandom ? std::max<std::size_t>(1, o.retries) : 1;
  std::optional<GeneratedCode> result;
  std::optional<GenerationStuck> last_stuck;
  for (std::size_t a = 0; a < attempts && !result; ++a, ++seed) {
    try {
      result = generate({o.n, o.theta, o.z, *strategy, seed});
    } catch (const GenerationStuck& e) {
      last_stuck.emplace(e);
    }
  }
  if (!result) {
    const auto& st = *last_stuck;
    if (o.json) {
      std::cout << dump({{"stuck", true},
                         {"attempts", attempts},
                         {"achieved_weight", st.achieved_weight()},
                         {"target_weight", st.target_weight()},
                         {"partial_spec", io::to_json(st.partial().spec())},
                         {"partial_code", io::to_json(st.partial().code())}});
    }
    std::cerr << "error: " << st.what() << " after " << attempts << " attempt(s)\n";
    return kExitStuck;
  }

  const auto& g = *result;
  if (!o.out_spec.empty()) write_file(o.out_spec, dump(io::to_json(g.spec)));
  if (!o.out_code.empty()) write_file(o.out_code, dump(io::to_json(g.code)));
  const auto report = build_report(g.code);
  if (o.json) {
    json steps = json::array();
    for (const auto& [a, b] : g.steps) steps.push_back({a, b});
    std::cout << dump({{"strategy", std::string(to_string(g.strategy))},
                       {"seed", g.seed},
                       {"rng", std::string(Rng::kName) + "/v" + std::to_string(Rng::kVersion)},
                       {"steps", std::move(steps)},
                       {"spec", io::to_json(g.spec)},
                       {"code", io::to_json(g.code)},
                       {"report", report_json(report)}});
  } else {
    std::cout << "strategy=" << to_string(g.strategy) << " seed=" << g.seed << " rng=" << Rng::kName
              << "/v" << Rng::kVersion << "\n";
    std::cout << "x = " << g.spec.dropping.to_string() << "\n";
    std::cout << "y = " << g.spec.selection.to_string() << "\n";
    print_report(std::cout, report);
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const auto doc = io::parse_document(read_file(o.input));
  const FrCode code = code_of(doc);
  const auto verdict = check_universally_good(code);
  std::vector<oracle::Discrepancy> discrepancies;
  std::vector<DuplicatePlacement> duplicates;
  if (const auto* spec = std::get_if<FlowerSpec>(&doc)) {
    discrepancies = oracle::check_suite(*spec);
    duplicates = duplicate_placements(*spec);
  } else {
    discrepancies = oracle::check_suite(code);
  }

  if (o.json) {
    std::cout << dump({{"code", io::to_json(code)},
                       {"goodness", io::to_json(verdict)},
                       {"duplicate_placements", io::to_json(duplicates)},
                       {"discrepancies", io::to_json(discrepancies)}});
  } else {
    if (verdict.universally_good) {
      std::cout << good_yes(verdict);
    } else {
      const auto& w = *verdict.witness;
      std::cout << "universally good: no\nwitness: U" << w.first << " and U" << w.second
                << " overlap " << w.overlap << " (shared " << join(w.shared_packets, "P") << ")\n";
    }
    for (const auto& d : verdict.duplicates) {
      std::cout << "warning: U" << d.node << " holds " << d.copies << " copies of P" << d.packet << "\n";
    }
    for (const auto& d : duplicates) {
      std::cout << "duplicate placement: P" << d.packet << " on U" << d.node << " at steps k="
                << d.first.step << " (m=" << d.first.drop_position << ") and k=" << d.second.step
                << " (m=" << d.second.drop_position << ")\n";
    }
    std::cout << "formula/oracle discrepancies: " << discrepancies.size() << "\n";
    for (const auto& d : discrepancies) {
      std::cout << "  " << d.check << ": formula=" << d.formula_value << " oracle=" << d.oracle_value
                << "\n";
    }
  }
  return verdict.universally_good ? kExitOk : kExitNotGood;
}

int cmd_dual(const Options& o) {
  const auto doc = io::parse_document(read_file(o.input));
  json out;
  if (const auto* spec = std::get_if<FlowerSpec>(&doc)) {
    out = io::to_json(dual_spec(*spec));
  } else {
    out = io::to_json(dual(std::get<FrCode>(doc)));
  }
  if (!o.out.empty()) write_file(o.out, dump(out));
  if (o.json || o.out.empty()) {
    std::cout << dump(out);
  } else {
    std::cout << "wrote " << o.out << "\n";
  }
  return kExitOk;
}

int cmd_filesize(const Options& o) {
  const FrCode code = code_of(io::parse_document(read_file(o.input)));
  if (!o.mode.empty() && o.mode != "min" && o.mode != "max") {
    throw CliError("--mode must be min or max");
  }
  if (o.k) {
    const std::size_t k = *o.k;
    json row = {{"k", k}};
    if (o.mode.empty() || o.mode == "min") row["guaranteed"] = guaranteed_file_size(code, k);
    if (o.mode.empty() || o.mode == "max") row["best_case"] = best_case_file_size(code, k);
    const auto alpha = parameters(code).max_storage;
    row["mbr_bound"] = k <= alpha ? json(mbr_bound(k, alpha)) : json(nullptr);
    row["generalized_bound"] = generalized_bound(code, k);
    if (o.json) {
      std::cout << dump(row);
    } else {
      if (row.contains("guaranteed")) std::cout << "M(" << k << ") = " << row["guaranteed"] << "\n";
      if (row.contains("best_case")) std::cout << "best-case(" << k << ") = " << row["best_case"] << "\n";
      std::cout << "MBR bound = " << (row["mbr_bound"].is_null() ? std::string("-") : row["mbr_bound"].dump())
                << "\ngeneralized bound = " << row["generalized_bound"] << "\n";
    }
    return kExitOk;
  }
  const auto profile = capacity_profile(code);
  if (o.json) {
    std::cout << dump(io::to_json(profile));
  } else {
    print_capacity(std::cout, profile);
  }
  return kExitOk;
}

int cmd_repair(const Options& o) {
  const FrCode code = code_of(io::parse_document(read_file(o.input)));
  try {
    const auto plan = plan_repair(code, o.node);
    if (o.json) {
      std::cout << dump(io::to_json(plan));
    } else {
      std::cout << "failed node: U" << plan.failed_node << "\n";
      for (const auto& a : plan.assignments) {
        std::cout << "  P" << a.packet << " <- U" << a.helper << "\n";
      }
      std::cout << "helpers: " << join(plan.helpers, "U") << "\n";
      std::cout << "repair degree d=" << plan.repair_degree << "\nbandwidth=" << plan.bandwidth << "\n";
      if (plan.approximate) std::cout << "note: greedy cover (node count above exact limit)\n";
      if (!plan.duplicated_packets.empty()) {
        std::cout << "note: duplicated on failed node: " << join(plan.duplicated_packets, "P") << "\n";
      }
    }
    return kExitOk;
  } catch (const IrreparableError& e) {
    if (o.json) {
      std::cout << dump({{"failed_node", e.node()},
                         {"irreparable", true},
                         {"lost_packets", e.lost_packets()}});
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitIrreparable;
  }
}

int cmd_periodic(const Options& o) {
  const auto result = periodic_construction(o.n, o.theta, parse(o.block));
  if (!o.out.empty()) write_file(o.out, dump(io::to_json(result.spec)));
  if (o.json) {
    json out = {{"spec", io::to_json(result.spec)},
                {"period", result.period},
                {"length", result.length},
                {"actual_weight", result.actual_weight},
                {"target_weight", 2 * o.theta}};
    json violations = json::array();
    for (auto v : result.violations) violations.push_back(describe(v, result.spec));
    out["violations"] = std::move(violations);
    if (result.construction) {
      out["code"] = io::to_json(result.construction->code);
      out["parameters"] = io::to_json(parameters(result.construction->code));
      out["goodness"] = io::to_json(result.verdict);
      out["duplicate_placements"] = io::to_json(result.duplicates);
    }
    std::cout << dump(out);
    return kExitOk;
  }
  std::cout << "x = " << result.spec.dropping.to_string() << " (length " << result.length
            << ", period " << result.period << ", weight " << result.actual_weight << ")\n";
  std::cout << "y = " << result.spec.selection.to_string() << "\n";
  for (auto v : result.violations) std::cout << "violation: " << describe(v, result.spec) << "\n";
  if (result.construction) {
    const auto params = parameters(result.construction->code);
    print_code(std::cout, result.construction->code);
    std::cout << "alpha_i = " << braces(params.storage) << "\nrho_j   = " << braces(params.replication) << "\n";
    std::cout << (result.verdict.universally_good ? good_yes(result.verdict) : "universally good: no\n");
    for (const auto& d : result.duplicates) {
      std::cout << "duplicate placement: P" << d.packet << " on U" << d.node << " (k=" << d.first.step
                << " at m=" << d.first.drop_position << ", k=" << d.second.step
                << " at m=" << d.second.drop_position << ")\n";
    }
  }
  return kExitOk;
}

int cmd_from_code(const Options& o) {
  const auto doc = io::parse_document(read_file(o.input));
  const auto* code = std::get_if<FrCode>(&doc);
  if (!code) throw CliError("from-code expects a code document {n, theta, nodes}");
  const auto out = io::to_json(from_frcode(*code));
  if (!o.out.empty()) write_file(o.out, dump(out));
  if (o.json || o.out.empty()) {
    std::cout << dump(out);
  } else {
    std::cout << "wrote " << o.out << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional repetition codes from binary sequences (Flower codes)"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable JSON output"); };

  auto* construct_cmd = app.add_subcommand("construct", "Build the FR code of a Flower spec");
  construct_cmd->add_option("spec", o.input, "Spec file {n, theta, x, y}")->required();
  construct_cmd->add_option("--out", o.out, "Write the canonical code file here");
  construct_cmd->add_option("--trace", o.trace, "Write the placement trace (k m r i j) here");
  add_json(construct_cmd);

  auto* generate_cmd = app.add_subcommand("generate", "Generate a universally good sequence pair");
  generate_cmd->add_option("--n", o.n, "Node count")->required();
  generate_cmd->add_option("--theta", o.theta, "Packet count")->required();
  generate_cmd->add_option("--z", o.z, "Target weight (total copies)")->required();
  generate_cmd->add_option("--strategy", o.strategy, "lex | random | row | col")->capture_default_str();
  generate_cmd->add_option("--seed", o.seed, "64-bit RNG seed (drawn and printed when absent)");
  generate_cmd->add_option("--retries", o.retries, "Attempts with seed, seed+1, ... for random")
      ->capture_default_str();
  generate_cmd->add_option("--out-spec", o.out_spec, "Write the spec file here");
  generate_cmd->add_option("--out-code", o.out_code, "Write the code file here");
  add_json(generate_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check the universally-good property (exit 3 if not)");
  verify_cmd->add_option("file", o.input, "Code or spec file")->required();
  add_json(verify_cmd);

  auto* dual_cmd = app.add_subcommand("dual", "Dual code (or dual spec)");
  dual_cmd->add_option("file", o.input, "Code or spec file")->required();
  dual_cmd->add_option("--out", o.out, "Write the result here");
  add_json(dual_cmd);

  auto* filesize_cmd = app.add_subcommand("filesize", "File-size profile M(k) with bounds");
  filesize_cmd->add_option("file", o.input, "Code or spec file")->required();
  filesize_cmd->add_option("--k", o.k, "Single reconstruction degree");
  filesize_cmd->add_option("--mode", o.mode, "min (guaranteed) or max (best case)");
  add_json(filesize_cmd);

  auto* repair_cmd = app.add_subcommand("repair", "Plan exact repair of one node (exit 4 if impossible)");
  repair_cmd->add_option("file", o.input, "Code or spec file")->required();
  repair_cmd->add_option("--node", o.node, "Failed node index (1-based)")->required();
  add_json(repair_cmd);

  auto* periodic_cmd = app.add_subcommand("periodic", "Periodic dropping sequence with y = 1^(2 theta)");
  periodic_cmd->add_option("--n", o.n, "Node count")->required();
  periodic_cmd->add_option("--theta", o.theta, "Packet count")->required();
  periodic_cmd->add_option("--block", o.block, "One period of x, in sequence notation")->required();
  periodic_cmd->add_option("--out", o.out, "Write the spec file here");
  add_json(periodic_cmd);

  auto* from_code_cmd = app.add_subcommand("from-code", "Emit a Flower spec reproducing a code");
  from_code_cmd->add_option("file", o.input, "Code file")->required();
  from_code_cmd->add_option("--out", o.out, "Write the spec file here");
  add_json(from_code_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (construct_cmd->parsed()) return cmd_construct(o);
    if (generate_cmd->parsed()) return cmd_generate(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (dual_cmd->parsed()) return cmd_dual(o);
    if (filesize_cmd->parsed()) return cmd_filesize(o);
    if (repair_cmd->parsed()) return cmd_repair(o);
    if (periodic_cmd->parsed()) return cmd_periodic(o);
    if (from_code_cmd->parsed()) return cmd_from_code(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
