#include "covertab/io.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "covertab/errors.hpp"
#include "covertab/version.hpp"

namespace covertab {

using nlohmann::json;

namespace {

std::string timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

json tuple_to_json(const Tuple& t) {
  json arr = json::array();
  for (Residue v : t) arr.push_back(v);
  return arr;
}

Tuple tuple_from_json(const json& j) {
  Tuple t;
  for (const auto& v : j) t.push_back(v.get<Residue>());
  return t;
}

std::string quote_csv(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string tuple_to_string(const Tuple& t) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out << ',';
    out << t[i];
  }
  out << ')';
  return out.str();
}

AnalyzeDocument analyze(const CoverDatum& d) {
  AnalyzeDocument doc;
  doc.datum = d;
  doc.genus = genus(d);
  doc.group = group_structure(d);
  doc.spectrum = spectrum_table(d);
  doc.report = classify(d);
  return doc;
}

json datum_to_json(const CoverDatum& d) {
  json rows = json::array();
  for (const auto& r : d.rows) rows.push_back(tuple_to_json(r));
  return json{{"N", d.modulus}, {"A", rows}};
}

CoverDatum datum_from_json(const json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("A"))
    raise("BadShape", "datum JSON must be {\"N\": int, \"A\": [[int,...],...]}");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j.at("A")) {
    rows.emplace_back();
    for (const auto& v : row) rows.back().push_back(v.get<std::int64_t>());
  }
  return validate_datum(j.at("N").get<std::uint32_t>(), rows);
}

CoverDatum parse_datum_argument(const std::string& arg) {
  if (!arg.empty() && arg[0] == '{') return datum_from_json(json::parse(arg));
  if (arg.find(':') != std::string::npos) return parse_compact(arg);
  std::ifstream in(arg);
  if (!in) raise("BadShape", "cannot read datum from '" + arg + "'");
  json j;
  in >> j;
  return datum_from_json(j);
}

json report_to_json(const ClassificationReport& r) {
  json j;
  j["verdict"] = verdict_name(r.verdict);
  j["rule"] = r.rule ? json(rule_name(*r.rule)) : json(nullptr);
  j["dims"] = {{"moduli", r.moduli_dim},
               {"dim_sg", r.dim_sg},
               {"monodromy_bound", r.monodromy_bound}};
  json star = {{"holds", r.condition_star}};
  if (r.star_alpha) {
    star["alpha"] = tuple_to_json(*r.star_alpha);
    star["n"] = tuple_to_json(*r.star_n);
    star["d"] = r.star_d;
    star["d_dual"] = r.star_d_dual;
  }
  j["condition_star"] = star;
  json types = json::array();
  for (const auto& w : r.bound_types)
    types.push_back({{"a", w.type.a},
                     {"b", w.type.b},
                     {"order2", w.type.order2},
                     {"alpha", tuple_to_json(w.alpha)}});
  j["bound_types"] = types;
  if (r.r4) {
    j["r4"] = {{"alpha", tuple_to_json(r.r4->alpha)},
               {"cyclic", datum_to_json(r.r4->cyclic)},
               {"cyclic_dim_sg", r.r4->cyclic_dim_sg}};
  } else {
    j["r4"] = nullptr;
  }
  return j;
}

ClassificationReport report_from_json(const json& j) {
  ClassificationReport r;
  auto v = verdict_from_name(j.at("verdict").get<std::string>());
  if (!v) raise("BadShape", "unknown verdict");
  r.verdict = *v;
  if (!j.at("rule").is_null()) {
    auto rule = rule_from_name(j.at("rule").get<std::string>());
    if (!rule) raise("BadShape", "unknown rule");
    r.rule = *rule;
  }
  r.moduli_dim = j.at("dims").at("moduli").get<std::int64_t>();
  r.dim_sg = j.at("dims").at("dim_sg").get<std::int64_t>();
  r.monodromy_bound = j.at("dims").at("monodromy_bound").get<std::int64_t>();
  const json& star = j.at("condition_star");
  r.condition_star = star.at("holds").get<bool>();
  if (star.contains("alpha")) {
    r.star_alpha = tuple_from_json(star.at("alpha"));
    r.star_n = tuple_from_json(star.at("n"));
    r.star_d = star.at("d").get<std::int64_t>();
    r.star_d_dual = star.at("d_dual").get<std::int64_t>();
  }
  for (const auto& w : j.at("bound_types")) {
    TypeWitness tw;
    tw.type.a = w.at("a").get<std::int64_t>();
    tw.type.b = w.at("b").get<std::int64_t>();
    tw.type.order2 = w.at("order2").get<bool>();
    tw.alpha = tuple_from_json(w.at("alpha"));
    r.bound_types.push_back(std::move(tw));
  }
  if (!j.at("r4").is_null()) {
    R4Witness w;
    w.alpha = tuple_from_json(j.at("r4").at("alpha"));
    w.cyclic = datum_from_json(j.at("r4").at("cyclic"));
    w.cyclic_dim_sg = j.at("r4").at("cyclic_dim_sg").get<std::int64_t>();
    r.r4 = std::move(w);
  }
  return r;
}

json document_to_json(const AnalyzeDocument& doc) {
  json j;
  j["datum"] = datum_to_json(doc.datum);
  j["compact"] = to_compact(doc.datum);
  j["genus"] = doc.genus;
  j["group"] = {{"invariant_factors", doc.group.invariant_factors},
                {"order", doc.group.order}};
  j["rows_independent"] = doc.datum.rows_independent;
  j["reducible_modulus"] = doc.datum.reducible_modulus;
  json records = json::array();
  for (const auto& rec : doc.spectrum.records)
    records.push_back({{"n", tuple_to_json(rec.chi.n)},
                       {"alpha", tuple_to_json(rec.chi.alpha)},
                       {"d", rec.d},
                       {"d_dual", rec.d_dual},
                       {"order2", rec.order2},
                       {"nonzero", rec.nonzero_count}});
  j["spectrum"] = records;
  j["report"] = report_to_json(doc.report);
  return j;
}

AnalyzeDocument document_from_json(const json& j) {
  AnalyzeDocument doc;
  doc.datum = datum_from_json(j.at("datum"));
  doc.genus = j.at("genus").get<std::int64_t>();
  doc.group.invariant_factors =
      j.at("group").at("invariant_factors").get<std::vector<std::uint64_t>>();
  doc.group.order = j.at("group").at("order").get<std::uint64_t>();
  doc.spectrum.modulus = doc.datum.modulus;
  doc.spectrum.branch_points = doc.datum.s();
  doc.spectrum.genus = doc.genus;
  for (const auto& rec : j.at("spectrum")) {
    EigenspaceRecord e;
    e.chi.n = tuple_from_json(rec.at("n"));
    e.chi.alpha = tuple_from_json(rec.at("alpha"));
    e.d = rec.at("d").get<std::int64_t>();
    e.d_dual = rec.at("d_dual").get<std::int64_t>();
    e.order2 = rec.at("order2").get<bool>();
    e.nonzero_count = rec.at("nonzero").get<std::int64_t>();
    doc.spectrum.records.push_back(std::move(e));
  }
  doc.report = report_from_json(j.at("report"));
  return doc;
}

std::string human_table(const AnalyzeDocument& doc) {
  std::ostringstream out;
  const auto& r = doc.report;
  out << "datum            " << to_compact(doc.datum) << "\n"
      << "N, s, m          " << doc.datum.modulus << ", " << doc.datum.s() << ", "
      << doc.datum.m() << "\n"
      << "genus            " << doc.genus << "\n"
      << "group            " << group_to_string(doc.group) << "  (order " << doc.group.order
      << ")\n"
      << "rows independent " << (doc.datum.rows_independent ? "yes" : "no") << "\n";
  if (doc.datum.reducible_modulus)
    out << "reduced form     " << to_compact(fully_reduced(doc.datum)) << "\n";
  out << "moduli dim       " << r.moduli_dim << "\n"
      << "dim S(G)         " << r.dim_sg << "\n"
      << "monodromy bound  " << r.monodromy_bound << "\n"
      << "condition (*)    " << (r.condition_star ? "yes" : "no");
  if (r.star_alpha)
    out << "  witness alpha=" << tuple_to_string(*r.star_alpha) << " {d,d~}={" << r.star_d
        << "," << r.star_d_dual << "}";
  out << "\n"
      << "verdict          " << verdict_name(r.verdict)
      << (r.rule ? " (" + rule_name(*r.rule) + ")" : "") << "\n"
      << "spectrum (" << doc.spectrum.records.size() << " characters):\n"
      << "  alpha : n : d : d_dual : order2\n";
  for (const auto& rec : doc.spectrum.records)
    out << "  " << tuple_to_string(rec.chi.alpha) << " : " << tuple_to_string(rec.chi.n)
        << " : " << rec.d << " : " << rec.d_dual << " : " << (rec.order2 ? "yes" : "no")
        << "\n";
  return out.str();
}

std::string report_csv_row(const ClassificationReport& r) {
  std::ostringstream out;
  out << verdict_name(r.verdict) << ',' << (r.rule ? rule_name(*r.rule) : "") << ','
      << r.moduli_dim << ',' << r.dim_sg << ',' << r.monodromy_bound << ','
      << (r.condition_star ? 1 : 0) << ',';
  if (r.star_alpha)
    out << quote_csv("alpha=" + tuple_to_string(*r.star_alpha));
  else if (r.r4)
    out << quote_csv("cyclic=" + to_compact(r.r4->cyclic));
  return out.str();
}

std::string enumeration_csv(const std::vector<EnumerationRecord>& records,
                            const SearchSpec& spec, bool with_timestamp) {
  std::ostringstream out;
  out << "# covertab " << kVersion << "; moduli=";
  for (std::size_t i = 0; i < spec.moduli.size(); ++i)
    out << (i ? "|" : "") << spec.moduli[i];
  out << "; m=" << spec.m_min << ".." << spec.m_max << "; s=" << spec.s_min << ".."
      << spec.s_max;
  if (spec.shape) out << "; shape=" << shape_name(*spec.shape);
  out << "; colperm=" << (spec.key_options.column_permutation ? "on" : "off")
      << "; reduce=" << (spec.key_options.reduce_modulus ? "on" : "off") << "\n";
  if (with_timestamp) out << "# generated-at: " << timestamp_utc() << "\n";
  out << "key,N,m,s,matrix,genus,group,verdict,rule,dim_SG,bound,condition_star\n";
  for (const auto& rec : records) {
    out << rec.key.hex_digest() << ',' << rec.datum.modulus << ',' << rec.datum.m() << ','
        << rec.datum.s() << ',' << quote_csv(to_compact(rec.datum)) << ',' << rec.genus
        << ',' << quote_csv(group_to_string(rec.group)) << ','
        << verdict_name(rec.report.verdict) << ','
        << (rec.report.rule ? rule_name(*rec.report.rule) : "") << ',' << rec.report.dim_sg
        << ',' << rec.report.monodromy_bound << ',' << (rec.report.condition_star ? 1 : 0)
        << "\n";
  }
  return out.str();
}

json enumeration_manifest(const SearchSpec& spec, std::size_t record_count,
                          bool with_timestamp) {
  json j;
  j["tool"] = "covertab";
  j["version"] = kVersion;
  j["spec"] = {{"moduli", spec.moduli},
               {"m_min", spec.m_min},
               {"m_max", spec.m_max},
               {"s_min", spec.s_min},
               {"s_max", spec.s_max},
               {"max_box", spec.max_box}};
  if (spec.shape) j["spec"]["shape"] = shape_name(*spec.shape);
  if (spec.genus_min) j["spec"]["genus_min"] = *spec.genus_min;
  if (spec.genus_max) j["spec"]["genus_max"] = *spec.genus_max;
  if (spec.verdict) j["spec"]["verdict"] = verdict_name(*spec.verdict);
  // classes are taken up to row-span equality, column permutation (unless
  // disabled) and modulus reduction; row swaps are subsumed by the span
  j["equivalence"] = {{"row_span", true},
                      {"column_permutation", spec.key_options.column_permutation},
                      {"reduce_modulus", spec.key_options.reduce_modulus}};
  j["records"] = record_count;
  if (with_timestamp) j["generated_at"] = timestamp_utc();
  return j;
}

std::string spectrum_csv(const SpectrumTable& t) {
  std::ostringstream out;
  for (std::size_t j = 1; j <= t.branch_points; ++j) out << "alpha_" << j << ',';
  out << "d,d_dual,order2\n";
  for (const auto& rec : t.records) {
    for (Residue a : rec.chi.alpha) out << a << ',';
    out << rec.d << ',' << rec.d_dual << ',' << (rec.order2 ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string cyclic_table_csv(const std::vector<CoverDatum>& table, std::uint32_t n_max,
                             std::size_t s_max, bool with_timestamp) {
  std::ostringstream out;
  out << "# covertab " << kVersion << "; cyclic special table; nmax=" << n_max
      << "; smax=" << s_max << "\n";
  if (with_timestamp) out << "# generated-at: " << timestamp_utc() << "\n";
  out << "N,s,matrix,genus,group,dim_SG\n";
  std::set<std::uint32_t> distinct_n;
  for (const auto& d : table) {
    distinct_n.insert(d.modulus);
    out << d.modulus << ',' << d.s() << ',' << quote_csv(to_compact(d)) << ',' << genus(d)
        << ',' << quote_csv(group_to_string(group_structure(d))) << ','
        << dim_special_group(d) << "\n";
  }
  out << "# distinct-N count: " << distinct_n.size() << " (values:";
  for (std::uint32_t n : distinct_n) out << ' ' << n;
  out << ")\n";
  return out.str();
}

std::string theorem2_csv(const std::map<Shape, std::vector<ShapeSurvivor>>& survivors,
                         const std::vector<std::uint32_t>& moduli, bool with_timestamp) {
  std::ostringstream out;
  out << "# covertab " << kVersion << "; theorem-2 scan; moduli=";
  for (std::size_t i = 0; i < moduli.size(); ++i) out << (i ? "|" : "") << moduli[i];
  out << "\n";
  if (with_timestamp) out << "# generated-at: " << timestamp_utc() << "\n";
  out << "shape,key,N,matrix,verdict,rule,dim_SG,bound,condition_star\n";
  for (const auto& [shape, list] : survivors)
    for (const auto& sv : list)
      out << shape_name(shape) << ',' << sv.key.hex_digest() << ',' << sv.datum.modulus
          << ',' << quote_csv(to_compact(sv.datum)) << ','
          << verdict_name(sv.report.verdict) << ','
          << (sv.report.rule ? rule_name(*sv.report.rule) : "") << ',' << sv.report.dim_sg
          << ',' << sv.report.monodromy_bound << ',' << (sv.report.condition_star ? 1 : 0)
          << "\n";
  return out.str();
}

json poly_to_json(const SparsePoly& poly) {
  json arr = json::array();
  for (const auto& mono : poly) {
    json e = json::array();
    for (auto v : mono.exp) e.push_back(v);
    arr.push_back({{"exp", e}, {"coef", mono.coef}});
  }
  return arr;
}

json hw_block_to_json(const HWBlock& block) {
  json j;
  j["n"] = tuple_to_json(block.n);
  j["alpha"] = tuple_to_json(block.alpha);
  j["d"] = block.size;
  if (block.symbolic_mode) {
    json rows = json::array();
    for (std::size_t i = 0; i < block.size; ++i) {
      json row = json::array();
      for (std::size_t jj = 0; jj < block.size; ++jj)
        row.push_back(poly_to_json(block.poly_at(i, jj)));
      rows.push_back(row);
    }
    j["entries"] = rows;
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < block.size; ++i) {
      json row = json::array();
      for (std::size_t jj = 0; jj < block.size; ++jj) row.push_back(block.at(i, jj));
      rows.push_back(row);
    }
    j["entries"] = rows;
  }
  return j;
}

std::string hw_block_csv(const HWBlock& block) {
  std::ostringstream out;
  out << "# n=" << tuple_to_string(block.n) << " alpha=" << tuple_to_string(block.alpha)
      << " d=" << block.size << "\n";
  for (std::size_t i = 0; i < block.size; ++i) {
    for (std::size_t j = 0; j < block.size; ++j) {
      if (j) out << ',';
      out << block.at(i, j);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace covertab
