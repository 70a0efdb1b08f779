// covertab: classify families of abelian covers of the line, regenerate the
// classification tables by enumeration, and run Hasse-Witt experiments.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covertab/errors.hpp"
#include "covertab/io.hpp"
#include "covertab/version.hpp"

namespace {

using namespace covertab;

int exit_code_for(const CoverError& e) {
  if (e.name() == "SpecTooLarge") return 3;
  if (e.name() == "TermLimitExceeded") return 4;
  return 2;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-" || path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) raise("BadShape", "cannot write '" + path + "'");
  out << content;
}

std::vector<std::uint64_t> parse_points(const std::string& arg) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= arg.size()) {
    auto comma = arg.find(',', pos);
    std::string tok = arg.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) raise("BadShape", "empty point in --points");
    out.push_back(std::stoull(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact classifier for families of abelian covers of P^1"};
  app.set_version_flag("--version", std::string("covertab ") + kVersion);
  app.require_subcommand(1);

  // analyze
  std::string analyze_datum;
  bool analyze_json_only = false;
  auto* cmd_analyze = app.add_subcommand("analyze", "classify one datum");
  cmd_analyze->add_option("datum", analyze_datum, "compact text, inline JSON, or JSON file")
      ->required();
  cmd_analyze->add_flag("--json-only", analyze_json_only, "print only the JSON document");

  // enumerate
  SearchSpec spec;
  std::string enum_out = "-", enum_shape;
  bool enum_no_meta = false, enum_no_colperm = false;
  std::vector<std::uint32_t> enum_moduli;
  std::int64_t genus_min = -1, genus_max = -1;
  std::string enum_verdict;
  auto* cmd_enum = app.add_subcommand("enumerate", "sweep a search box, one row per class");
  cmd_enum->add_option("--N", enum_moduli, "moduli to scan")->required();
  cmd_enum->add_option("--m", spec.m_min, "row count")->required();
  cmd_enum->add_option("--s", spec.s_min, "branch point count")->required();
  cmd_enum->add_option("--shape", enum_shape, "zero pattern I|II|III|IV (forces m=2, s=5)");
  cmd_enum->add_option("--genus-min", genus_min, "keep classes with genus >= this");
  cmd_enum->add_option("--genus-max", genus_max, "keep classes with genus <= this");
  cmd_enum->add_option("--verdict", enum_verdict, "keep only Special|NotSpecial|Undecided");
  cmd_enum->add_option("--max-box", spec.max_box, "raw box cardinality guard");
  cmd_enum->add_option("--out", enum_out, "output CSV path ('-' for stdout)");
  cmd_enum->add_flag("--no-meta", enum_no_meta, "omit the timestamp line");
  cmd_enum->add_flag("--no-column-perm", enum_no_colperm,
                     "do not quotient classes by branch-point permutation");

  // cyclic-table
  std::uint32_t nmax = 24;
  std::size_t smax = 8;
  std::string cyc_out = "-";
  bool cyc_no_meta = false;
  auto* cmd_cyc = app.add_subcommand("cyclic-table", "regenerate the special cyclic table");
  cmd_cyc->add_option("--nmax", nmax, "largest modulus")->required();
  cmd_cyc->add_option("--smax", smax, "largest branch point count")->required();
  cmd_cyc->add_option("--out", cyc_out, "output CSV path");
  cmd_cyc->add_flag("--no-meta", cyc_no_meta, "omit the timestamp line");

  // scan-theorem2
  std::vector<std::uint32_t> scan_moduli;
  std::string scan_out = "-";
  bool scan_no_meta = false;
  auto* cmd_scan = app.add_subcommand("scan-theorem2", "scan the 2x5 shapes I-IV");
  cmd_scan->add_option("--N", scan_moduli, "moduli to scan (each >= 3)")->required();
  cmd_scan->add_option("--out", scan_out, "output CSV path");
  cmd_scan->add_flag("--no-meta", scan_no_meta, "omit the timestamp line");

  // hw
  std::string hw_datum, hw_points;
  std::uint64_t hw_p = 0, hw_samples = 200, hw_seed = 12345;
  std::uint64_t hw_term_limit = kDefaultTermLimit;
  bool hw_scan = false, hw_symbolic = false;
  auto* cmd_hw = app.add_subcommand("hw", "Hasse-Witt blocks and ordinarity");
  cmd_hw->add_option("datum", hw_datum, "compact text, inline JSON, or JSON file")->required();
  cmd_hw->add_option("--p", hw_p, "prime = 1 mod N (default: smallest >= 3)");
  cmd_hw->add_option("--points", hw_points, "comma-separated branch points in F_p");
  cmd_hw->add_flag("--scan", hw_scan, "scan tuples for ordinarity (density + existence)");
  cmd_hw->add_option("--samples", hw_samples, "sample count for non-exhaustive scans");
  cmd_hw->add_option("--seed", hw_seed, "RNG seed for sampled scans");
  cmd_hw->add_flag("--symbolic", hw_symbolic, "emit symbolic blocks as JSON");
  cmd_hw->add_option("--term-limit", hw_term_limit, "symbolic term guard");

  CLI11_PARSE(app, argc, argv);

  if (cmd_analyze->parsed()) {
    AnalyzeDocument doc = analyze(parse_datum_argument(analyze_datum));
    std::cout << document_to_json(doc).dump() << "\n";
    if (!analyze_json_only) std::cout << human_table(doc);
    return 0;
  }

  if (cmd_enum->parsed()) {
    spec.moduli = enum_moduli;
    spec.m_max = spec.m_min;
    spec.s_max = spec.s_min;
    if (!enum_shape.empty()) {
      auto shape = shape_from_name(enum_shape);
      if (!shape) raise("BadShape", "unknown shape '" + enum_shape + "'");
      spec.shape = *shape;
      spec.m_min = spec.m_max = 2;
      spec.s_min = spec.s_max = 5;
    }
    if (genus_min >= 0) spec.genus_min = genus_min;
    if (genus_max >= 0) spec.genus_max = genus_max;
    if (!enum_verdict.empty()) {
      auto v = verdict_from_name(enum_verdict);
      if (!v) raise("BadShape", "unknown verdict '" + enum_verdict + "'");
      spec.verdict = *v;
    }
    spec.key_options.column_permutation = !enum_no_colperm;
    auto records = enumerate_data(spec);
    write_output(enum_out, enumeration_csv(records, spec, !enum_no_meta));
    if (enum_out != "-" && !enum_out.empty()) {
      std::ofstream mf(enum_out + ".manifest.json");
      mf << enumeration_manifest(spec, records.size(), !enum_no_meta).dump(2) << "\n";
    }
    return 0;
  }

  if (cmd_cyc->parsed()) {
    auto table = cyclic_special_table(nmax, smax);
    write_output(cyc_out, cyclic_table_csv(table, nmax, smax, !cyc_no_meta));
    return 0;
  }

  if (cmd_scan->parsed()) {
    auto survivors = theorem2_scan(scan_moduli);
    write_output(scan_out, theorem2_csv(survivors, scan_moduli, !scan_no_meta));
    return 0;
  }

  if (cmd_hw->parsed()) {
    CoverDatum datum = parse_datum_argument(hw_datum);
    PrimeContext ctx = hw_p ? make_prime_context(datum.modulus, hw_p)
                            : choose_prime(datum.modulus, 3);
    if (hw_scan) {
      OrdinarityScan scan = scan_ordinarity(datum, ctx, hw_samples, hw_seed);
      std::cout << "p=" << ctx.p << " tuples=" << scan.tested
                << (scan.exhaustive ? " (exhaustive)" : " (sampled)")
                << " ordinary=" << scan.ordinary << " density="
                << (scan.tested ? static_cast<double>(scan.ordinary) / scan.tested : 0.0)
                << "\n";
      if (scan.first_ordinary) {
        std::cout << "first ordinary tuple:";
        for (auto v : *scan.first_ordinary) std::cout << ' ' << v;
        std::cout << "\n";
      } else {
        std::cout << "no ordinary tuple found\n";
      }
      if (scan.oracle_checked)
        std::cout << "elliptic oracle agreement: " << scan.oracle_agreed << "/"
                  << scan.oracle_checked << "\n";
      return 0;
    }
    SpectrumTable table = spectrum_table(datum);
    if (hw_symbolic) {
      nlohmann::json blocks = nlohmann::json::array();
      for (const auto& rec : table.records)
        blocks.push_back(
            hw_block_to_json(hw_block_symbolic(datum, rec.chi.n, ctx, hw_term_limit)));
      std::cout << blocks.dump(2) << "\n";
      return 0;
    }
    if (hw_points.empty()) raise("BadShape", "need --points, --scan, or --symbolic");
    auto z = parse_points(hw_points);
    for (const auto& rec : table.records)
      std::cout << hw_block_csv(hw_block_numeric(datum, rec.chi.n, ctx, z));
    std::cout << (is_ordinary_at(datum, ctx, z) ? "ordinary\n" : "not ordinary\n");
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CoverError& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "Error: " << e.what() << "\n";
    return 1;
  }
}
