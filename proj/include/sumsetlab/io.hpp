#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sumsetlab/experiments.hpp"
#include "sumsetlab/gap.hpp"
#include "sumsetlab/geometry.hpp"
#include "sumsetlab/inequalities.hpp"
#include "sumsetlab/point_set.hpp"
#include "sumsetlab/report.hpp"

namespace sumsetlab {

using Json = nlohmann::ordered_json;

// --- point-set text format --------------------------------------------------
// First line "dim k"; each following line k space-separated integers.
// '#' starts a comment; input rows may be in any order, output is canonical.

PointSet read_point_set(std::istream& in);
PointSet read_point_set_file(const std::string& path);
void write_point_set(std::ostream& out, const PointSet& a);
void write_point_set_file(const std::string& path, const PointSet& a);

// Weighted functions for the superadditivity verifier: lines "x p/q".
WeightedFunction read_weighted_function(std::istream& in);
WeightedFunction read_weighted_function_file(const std::string& path);

// --- JSON rendering ----------------------------------------------------------
// All exact values are rendered as decimal strings of rationals ("p/q", "p").
// Reports embed schema_version so outputs can be validated against
// schemas/report-v1.schema.json.

extern const char* kReportSchemaVersion;

Json to_json(const RationalInterval& v);
Json to_json(const InequalityReport& r);
Json to_json(const PointSet& a);  // compact row list
Json to_json(const Gap& g);
Json to_json(const CoverCertificate& c);
Json to_json(const GapHullResult& h);
Json to_json(const FrontierRecord& rec);
FrontierRecord frontier_from_json(const Json& j);

/// Single-object report envelope used by every CLI subcommand.
Json make_report_envelope(const std::string& command, Json params, Json result);

// Frontier persistence: append-only JSON lines, one record per line.
void append_frontier_record(const std::string& path, const FrontierRecord& rec);
std::vector<FrontierRecord> load_frontier_records(const std::string& path);

// CSV emission with fixed documented column orders.
std::string simplex_table_csv(const std::vector<SimplexTableRow>& rows);
std::string estimation_csv(const std::vector<EstimationRow>& rows);

/// Validator for the JSON-Schema subset used by the shipped schemas
/// (type/properties/required/items/enum). Returns an empty string when valid,
/// otherwise a diagnostic path.
std::string validate_against_schema(const Json& schema, const Json& value);

}  // namespace sumsetlab
