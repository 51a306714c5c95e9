#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "flowerfr/capacity.hpp"
#include "flowerfr/errors.hpp"
#include "flowerfr/flower.hpp"
#include "flowerfr/frcode.hpp"
#include "flowerfr/oracle.hpp"
#include "flowerfr/repair.hpp"

namespace flowerfr::io {

/// Malformed document: bad JSON, missing or mistyped fields.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Code documents: {"n": int, "theta": int, "nodes": [[1-based packet ids], ...]}.
// Duplicates are allowed and order is irrelevant on input; output sorts each
// node ascending.
nlohmann::json to_json(const FrCode& code);
FrCode code_from_json(const nlohmann::json& doc);

// Spec documents: {"n": int, "theta": int, "x": notation, "y": notation}.
// Either sequence may be omitted: a missing y becomes 1^weight(x) and a
// missing x becomes 1^weight(y). Output writes plain bitstrings.
nlohmann::json to_json(const FlowerSpec& spec);
FlowerSpec spec_from_json(const nlohmann::json& doc);

using Document = std::variant<FrCode, FlowerSpec>;

/// Parses text and decides by shape: "nodes" means a code, "x"/"y" a spec.
Document parse_document(std::string_view text);

/// Tab-separated placement records "k m r i j", one per line, after a
/// "#k\tm\tr\ti\tj" header.
std::string trace_to_text(const PlacementTrace& trace);
nlohmann::json to_json(const PlacementTrace& trace);

nlohmann::json to_json(const CodeParameters& params);
nlohmann::json to_json(const GoodnessVerdict& verdict);
nlohmann::json to_json(const CapacityProfile& profile);
nlohmann::json to_json(const RepairPlan& plan);
nlohmann::json to_json(const RepairabilityReport& report);
nlohmann::json to_json(const std::vector<oracle::Discrepancy>& discrepancies);
nlohmann::json to_json(const std::vector<DuplicatePlacement>& duplicates);

}  // namespace flowerfr::io
