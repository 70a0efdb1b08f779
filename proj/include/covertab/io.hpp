#pragma once

#include <string>

#include <json.hpp>

#include "covertab/classify.hpp"
#include "covertab/datum.hpp"
#include "covertab/enumerate.hpp"
#include "covertab/hasse_witt.hpp"
#include "covertab/spectrum.hpp"

namespace covertab {

// Full analysis of one datum: everything the `analyze` subcommand prints.
struct AnalyzeDocument {
  CoverDatum datum;
  std::int64_t genus = 0;
  AbelianGroupStructure group;
  SpectrumTable spectrum;
  ClassificationReport report;

  bool operator==(const AnalyzeDocument& o) const {
    return datum == o.datum && genus == o.genus && group == o.group &&
           spectrum == o.spectrum && report == o.report;
  }
};

AnalyzeDocument analyze(const CoverDatum& d);

nlohmann::json datum_to_json(const CoverDatum& d);
CoverDatum datum_from_json(const nlohmann::json& j);

// Accepts the compact text form, inline JSON, or a path to a JSON file.
CoverDatum parse_datum_argument(const std::string& arg);

nlohmann::json report_to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const nlohmann::json& j);

nlohmann::json document_to_json(const AnalyzeDocument& doc);
AnalyzeDocument document_from_json(const nlohmann::json& j);

std::string human_table(const AnalyzeDocument& doc);

// verdict,rule,s_minus_3,dim_sg,bound,condition_star,witness
std::string report_csv_row(const ClassificationReport& r);

// CSV with a header comment (version, bounds, equivalence flags, optional
// timestamp) and columns
// key,N,m,s,matrix,genus,group,verdict,rule,dim_SG,bound,condition_star
std::string enumeration_csv(const std::vector<EnumerationRecord>& records,
                            const SearchSpec& spec, bool with_timestamp);
nlohmann::json enumeration_manifest(const SearchSpec& spec, std::size_t record_count,
                                    bool with_timestamp);

std::string spectrum_csv(const SpectrumTable& t);

std::string cyclic_table_csv(const std::vector<CoverDatum>& table, std::uint32_t n_max,
                             std::size_t s_max, bool with_timestamp);

std::string theorem2_csv(const std::map<Shape, std::vector<ShapeSurvivor>>& survivors,
                         const std::vector<std::uint32_t>& moduli, bool with_timestamp);

nlohmann::json poly_to_json(const SparsePoly& poly);
nlohmann::json hw_block_to_json(const HWBlock& block);
std::string hw_block_csv(const HWBlock& block);

std::string tuple_to_string(const Tuple& t);  // "(a,b,c)"

}  // namespace covertab
