#include "flowerfr/io.hpp"

#include <algorithm>
#include <sstream>

namespace flowerfr::io {

using nlohmann::json;

namespace {

std::size_t positive_field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw FormatError(std::string("field \"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

BitSeq sequence_field(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_string()) throw FormatError(std::string("field \"") + key + "\" must be a string");
  return parse(v.get<std::string>());
}

json event_json(const PlacementEvent& e) {
  return {{"k", e.step}, {"m", e.drop_position}, {"r", e.select_position}, {"i", e.node},
          {"j", e.packet}};
}

}  // namespace

json to_json(const FrCode& code) {
  return {{"n", code.node_count()}, {"theta", code.packet_count()}, {"nodes", code.node_lists()}};
}

FrCode code_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("code document must be a JSON object");
  const std::size_t n = positive_field(doc, "n");
  const std::size_t theta = positive_field(doc, "theta");
  if (!doc.contains("nodes") || !doc.at("nodes").is_array()) {
    throw FormatError("field \"nodes\" must be an array of packet-index arrays");
  }
  NodeLists lists;
  for (const auto& node : doc.at("nodes")) {
    if (!node.is_array()) throw FormatError("each entry of \"nodes\" must be an array");
    std::vector<std::size_t> packets;
    for (const auto& p : node) {
      if (!p.is_number_integer() || p.get<long long>() < 1) {
        throw FormatError("packet indices must be positive integers");
      }
      packets.push_back(p.get<std::size_t>());
    }
    lists.push_back(std::move(packets));
  }
  return FrCode::from_node_lists(n, theta, lists);
}

json to_json(const FlowerSpec& spec) {
  return {{"n", spec.nodes},
          {"theta", spec.packets},
          {"x", spec.dropping.to_string()},
          {"y", spec.selection.to_string()}};
}

FlowerSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("spec document must be a JSON object");
  FlowerSpec spec;
  spec.nodes = positive_field(doc, "n");
  spec.packets = positive_field(doc, "theta");
  const bool has_x = doc.contains("x");
  const bool has_y = doc.contains("y");
  if (!has_x && !has_y) throw FormatError("spec needs at least one of \"x\" and \"y\"");
  if (has_x) spec.dropping = sequence_field(doc, "x");
  if (has_y) spec.selection = sequence_field(doc, "y");
  if (!has_y) spec.selection = BitSeq::ones(spec.dropping.weight());
  if (!has_x) spec.dropping = BitSeq::ones(spec.selection.weight());
  return spec;
}

Document parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("document must be a JSON object");
  if (doc.contains("nodes")) return code_from_json(doc);
  if (doc.contains("x") || doc.contains("y")) return spec_from_json(doc);
  throw FormatError("document is neither a code (\"nodes\") nor a spec (\"x\"/\"y\")");
}

std::string trace_to_text(const PlacementTrace& trace) {
  std::ostringstream os;
  os << "#k\tm\tr\ti\tj\n";
  for (const auto& e : trace) {
    os << e.step << '\t' << e.drop_position << '\t' << e.select_position << '\t' << e.node << '\t'
       << e.packet << '\n';
  }
  return os.str();
}

json to_json(const PlacementTrace& trace) {
  json out = json::array();
  for (const auto& e : trace) out.push_back(event_json(e));
  return out;
}

json to_json(const CodeParameters& params) {
  return {{"alpha_i", params.storage},
          {"rho_j", params.replication},
          {"alpha", params.max_storage},
          {"rho", params.max_replication}};
}

json to_json(const GoodnessVerdict& verdict) {
  json out = {{"universally_good", verdict.universally_good}, {"witness", nullptr}};
  if (verdict.witness) {
    out["witness"] = {{"i", verdict.witness->first},
                      {"p", verdict.witness->second},
                      {"overlap", verdict.witness->overlap},
                      {"shared_packets", verdict.witness->shared_packets}};
  }
  json dups = json::array();
  for (const auto& d : verdict.duplicates) {
    dups.push_back({{"node", d.node}, {"packet", d.packet}, {"copies", d.copies}});
  }
  out["same_node_duplicates"] = std::move(dups);
  return out;
}

json to_json(const CapacityProfile& profile) {
  json rows = json::array();
  for (const auto& r : profile.rows) {
    rows.push_back({{"k", r.k},
                    {"guaranteed", r.guaranteed},
                    {"best_case", r.best_case},
                    {"mbr_bound", r.mbr_bound ? json(*r.mbr_bound) : json(nullptr)},
                    {"generalized_bound", r.generalized_bound}});
  }
  return {{"rows", std::move(rows)},
          {"uniform_storage", profile.uniform_storage},
          {"pairwise_condition", profile.pairwise_condition}};
}

json to_json(const RepairPlan& plan) {
  json assignments = json::array();
  for (const auto& a : plan.assignments) {
    assignments.push_back({{"packet", a.packet}, {"helper", a.helper}});
  }
  return {{"failed_node", plan.failed_node},
          {"assignments", std::move(assignments)},
          {"helpers", plan.helpers},
          {"repair_degree", plan.repair_degree},
          {"bandwidth", plan.bandwidth},
          {"irreparable", false},
          {"approximate", plan.approximate},
          {"duplicated_packets", plan.duplicated_packets}};
}

json to_json(const RepairabilityReport& report) {
  json nodes = json::array();
  for (const auto& n : report.nodes) {
    nodes.push_back({{"node", n.node},
                     {"repairable", n.repairable},
                     {"repair_degree", n.repair_degree},
                     {"bandwidth", n.bandwidth},
                     {"lost_packets", n.lost_packets}});
  }
  return {{"nodes", std::move(nodes)},
          {"max_repair_degree", report.max_repair_degree},
          {"all_repairable", report.all_repairable}};
}

json to_json(const std::vector<oracle::Discrepancy>& discrepancies) {
  json out = json::array();
  for (const auto& d : discrepancies) {
    out.push_back({{"check", d.check},
                   {"input", d.input},
                   {"formula", d.formula_value},
                   {"oracle", d.oracle_value}});
  }
  return out;
}

json to_json(const std::vector<DuplicatePlacement>& duplicates) {
  json out = json::array();
  for (const auto& d : duplicates) {
    out.push_back({{"node", d.node},
                   {"packet", d.packet},
                   {"first", event_json(d.first)},
                   {"second", event_json(d.second)}});
  }
  return out;
}

}  // namespace flowerfr::io
