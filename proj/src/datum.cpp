#include "covertab/datum.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "covertab/errors.hpp"
#include "covertab/smith.hpp"

namespace covertab {

namespace {

constexpr std::uint32_t kMaxModulus = 1'000'000;
constexpr std::size_t kMaxRows = 16;
constexpr std::size_t kMaxBranchPoints = 64;

// SNF diagonal of [A~ | N*I_m]; the column span is then ⊕ Z/(N/d_i).
std::vector<std::int64_t> span_lattice_diagonal(const CoverDatum& d) {
  std::size_t m = d.m(), s = d.s();
  std::vector<std::vector<std::int64_t>> mat(m, std::vector<std::int64_t>(s + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < s; ++j) mat[i][j] = d.rows[i][j];
    mat[i][s + i] = d.modulus;
  }
  return smith_diagonal(std::move(mat));
}

std::uint64_t span_order(const CoverDatum& d) {
  auto diag = span_lattice_diagonal(d);
  // N*I_m has full rank, so every diagonal entry is nonzero and divides N
  std::uint64_t index = 1;
  for (auto v : diag) index *= static_cast<std::uint64_t>(v);
  std::uint64_t nm = 1;
  for (std::size_t i = 0; i < d.m(); ++i) nm *= d.modulus;
  return nm / index;
}

}  // namespace

CoverDatum validate_datum(std::uint32_t modulus,
                          const std::vector<std::vector<std::int64_t>>& raw_rows) {
  if (modulus < 2 || modulus > kMaxModulus)
    raise("BadShape", "modulus must be in [2, " + std::to_string(kMaxModulus) + "]");
  if (raw_rows.empty() || raw_rows.size() > kMaxRows)
    raise("BadShape", "row count must be in [1, " + std::to_string(kMaxRows) + "]");
  std::size_t s = raw_rows[0].size();
  for (const auto& r : raw_rows)
    if (r.size() != s) raise("BadShape", "ragged rows");
  if (s < 3 || s > kMaxBranchPoints)
    raise("BadShape", "need between 3 and " + std::to_string(kMaxBranchPoints) +
                          " branch points, got " + std::to_string(s));

  CoverDatum d;
  d.modulus = modulus;
  d.rows.resize(raw_rows.size());
  for (std::size_t i = 0; i < raw_rows.size(); ++i) {
    d.rows[i].resize(s);
    for (std::size_t j = 0; j < s; ++j) d.rows[i][j] = reduce_mod(raw_rows[i][j], modulus);
  }

  for (std::size_t j = 0; j < s; ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < d.m(); ++i) nonzero = nonzero || d.rows[i][j] != 0;
    if (!nonzero) raise("ZeroColumn", "column " + std::to_string(j + 1) + " is zero");
  }
  for (std::size_t i = 0; i < d.m(); ++i) {
    Residue sum = 0;
    for (std::size_t j = 0; j < s; ++j) sum = add_mod(sum, d.rows[i][j], modulus);
    if (sum != 0)
      raise("RowSumNonzero", "row " + std::to_string(i + 1) + " sums to " +
                                 std::to_string(sum) + " mod " + std::to_string(modulus));
  }

  d.order = span_order(d);
  std::uint64_t nm = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < d.m(); ++i) {
    if (nm > (1ull << 62) / modulus) {
      overflow = true;
      break;
    }
    nm *= modulus;
  }
  d.rows_independent = !overflow && d.order == nm;

  std::uint64_t g = modulus;
  for (const auto& r : d.rows) g = std::gcd(g, gcd_with_modulus(r, modulus));
  d.reducible_modulus = g > 1;
  return d;
}

std::int64_t genus(const CoverDatum& d) {
  std::uint32_t n = d.modulus;
  std::int64_t gcd_sum = 0;
  for (std::size_t j = 0; j < d.s(); ++j) {
    std::uint64_t g = n;
    for (std::size_t i = 0; i < d.m(); ++i) g = std::gcd(g, static_cast<std::uint64_t>(d.rows[i][j]));
    gcd_sum += static_cast<std::int64_t>(g);
  }
  // g = 1 + deg * (N(s-2) - sum_j gcd_j) / (2N), exactly
  __int128 num = static_cast<__int128>(d.order) *
                 (static_cast<__int128>(n) * (static_cast<std::int64_t>(d.s()) - 2) - gcd_sum);
  __int128 den = 2 * static_cast<__int128>(n);
  if (num % den != 0)
    raise("NonIntegralGenus", "genus formula is not integral for " + to_compact(d));
  __int128 g = 1 + num / den;
  if (g < 0 || g > (static_cast<__int128>(1) << 62))
    raise("NonIntegralGenus", "genus out of range");
  return static_cast<std::int64_t>(g);
}

AbelianGroupStructure group_structure(const CoverDatum& d) {
  auto diag = span_lattice_diagonal(d);
  AbelianGroupStructure g;
  // d_1 | d_2 | ... gives factors N/d_m | ... | N/d_1
  for (auto it = diag.rbegin(); it != diag.rend(); ++it) {
    std::uint64_t f = d.modulus / static_cast<std::uint64_t>(*it);
    if (f > 1) g.invariant_factors.push_back(f);
  }
  g.order = 1;
  for (auto f : g.invariant_factors) g.order *= f;
  return g;
}

std::optional<CoverDatum> reduced_form(const CoverDatum& d) {
  std::uint64_t f = d.modulus;
  for (const auto& r : d.rows) f = std::gcd(f, gcd_with_modulus(r, d.modulus));
  if (f <= 1) return std::nullopt;
  std::vector<std::vector<std::int64_t>> raw(d.m());
  for (std::size_t i = 0; i < d.m(); ++i)
    for (Residue v : d.rows[i]) raw[i].push_back(static_cast<std::int64_t>(v / f));
  return validate_datum(static_cast<std::uint32_t>(d.modulus / f), raw);
}

CoverDatum fully_reduced(const CoverDatum& d) {
  CoverDatum cur = d;
  while (auto r = reduced_form(cur)) cur = *r;
  return cur;
}

std::string to_compact(const CoverDatum& d) {
  std::ostringstream out;
  out << d.modulus << ':';
  for (std::size_t i = 0; i < d.m(); ++i) {
    if (i) out << '/';
    for (std::size_t j = 0; j < d.s(); ++j) {
      if (d.modulus <= 10) {
        out << d.rows[i][j];
      } else {
        if (j) out << ',';
        out << d.rows[i][j];
      }
    }
  }
  return out.str();
}

CoverDatum parse_compact(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) raise("BadShape", "expected N:rows in '" + text + "'");
  std::uint32_t modulus = 0;
  {
    const char* b = text.data();
    auto [p, ec] = std::from_chars(b, b + colon, modulus);
    if (ec != std::errc() || p != b + colon)
      raise("BadShape", "bad modulus in '" + text + "'");
  }
  if (modulus < 2) raise("BadShape", "modulus must be >= 2");

  std::vector<std::vector<std::int64_t>> rows;
  std::size_t pos = colon + 1;
  while (pos <= text.size()) {
    auto slash = text.find('/', pos);
    std::string part = text.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
    std::vector<std::int64_t> row;
    if (modulus <= 10) {
      for (char c : part) {
        if (c < '0' || c > '9') raise("BadShape", "bad digit '" + std::string(1, c) + "'");
        row.push_back(c - '0');
      }
    } else {
      std::size_t p = 0;
      while (p < part.size()) {
        auto comma = part.find(',', p);
        std::string tok = part.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
        std::int64_t v = 0;
        const char* b = tok.data();
        auto [q, ec] = std::from_chars(b, b + tok.size(), v);
        if (ec != std::errc() || q != b + tok.size() || tok.empty())
          raise("BadShape", "bad entry '" + tok + "'");
        row.push_back(v);
        if (comma == std::string::npos) break;
        p = comma + 1;
      }
    }
    rows.push_back(std::move(row));
    if (slash == std::string::npos) break;
    pos = slash + 1;
  }
  return validate_datum(modulus, rows);
}

std::string group_to_string(const AbelianGroupStructure& g) {
  if (g.invariant_factors.empty()) return "trivial";
  std::ostringstream out;
  for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
    if (i) out << " x ";
    out << "Z/" << g.invariant_factors[i];
  }
  return out.str();
}

}  // namespace covertab
