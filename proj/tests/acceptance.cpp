// Acceptance suite: one line per criterion, exit code = number of failures.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "covertab/classify.hpp"
#include "covertab/enumerate.hpp"
#include "covertab/hasse_witt.hpp"
#include "covertab/io.hpp"
#include "oracles.hpp"

using namespace covertab;
using covertab::testing::direct_hw_entry;
using covertab::testing::mk;
using covertab::testing::naive_dim_sg;
using covertab::testing::random_datum;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

const CoverDatum kIII_star = mk(3, {{2, 1, 2, 1, 0}, {0, 0, 1, 1, 1}});
const CoverDatum kIII_2star = mk(4, {{2, 2, 3, 1, 0}, {0, 0, 1, 1, 2}});
const CoverDatum kMO20 = mk(12, {{4, 6, 7, 7}});

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool expect(bool ok, const std::string& what, std::string& detail) {
  if (!ok && detail.empty()) detail = "failed: " + what;
  return ok;
}

std::vector<std::uint64_t> sample_points(std::mt19937_64& rng, std::uint64_t p,
                                         std::size_t s) {
  std::vector<std::uint64_t> pool(p);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t k = 0; k < s; ++k) std::swap(pool[k], pool[k + rng() % (p - k)]);
  return {pool.begin(), pool.begin() + s};
}

bool c1_genus_group(std::string& detail) {
  bool ok = true;
  ok &= expect(genus(kIII_star) == 7, "genus(III*) = 7", detail);
  ok &= expect(group_structure(kIII_star).invariant_factors ==
                   std::vector<std::uint64_t>{3, 3},
               "group(III*) = Z/3 x Z/3", detail);
  ok &= expect(genus(kMO20) == 7, "genus(12,(4,6,7,7)) = 7", detail);
  ok &= expect(group_structure(kMO20).invariant_factors == std::vector<std::uint64_t>{12},
               "group(12,(4,6,7,7)) = Z/12", detail);
  for (const CoverDatum* d : {&kIII_star, &kMO20}) {
    genus(*d);  // warm
    auto t0 = std::chrono::steady_clock::now();
    volatile std::int64_t g = genus(*d);
    auto grp = group_structure(*d);
    double dt = seconds_since(t0);
    (void)g;
    ok &= expect(dt < 1e-3 && grp.order > 0,
                 "genus+group under 1 ms (took " + std::to_string(dt * 1e3) + " ms)",
                 detail);
  }
  return ok;
}

bool c2_eigenspace_dims(std::string& detail) {
  bool ok = expect(eigenspace_dim(kIII_star, {1, 1}) == 1, "d_{(1,1)}(III*) = 1", detail);
  SpectrumTable t = spectrum_table(mk(11, {{1, 1, 1, 1, 7}}));
  std::multiset<std::pair<std::int64_t, std::int64_t>> types;
  for (const auto& rec : t.records) {
    Tuple neg = neg_tuple(rec.chi.alpha, 11);
    if (rec.chi.alpha < neg)
      types.insert({std::max(rec.d, rec.d_dual), std::min(rec.d, rec.d_dual)});
  }
  std::multiset<std::pair<std::int64_t, std::int64_t>> want = {
      {3, 0}, {3, 0}, {2, 1}, {2, 1}, {2, 1}};
  ok &= expect(types == want, "(11,(1,1,1,1,7)) pair types {(3,0)x2,(2,1)x3}", detail);
  return ok;
}

bool c3_dim_sg(std::string& detail) {
  bool ok = true;
  ok &= expect(dim_special_group(mk(6, {{1, 1, 2, 2, 3, 3}})) == 5,
               "dim S(G)(6,(1,1,2,2,3,3)) = 5", detail);
  ok &= expect(dim_special_group(kMO20) == 1, "dim S(G)(12,(4,6,7,7)) = 1 = s-3", detail);
  std::mt19937_64 rng(1234);
  auto t0 = std::chrono::steady_clock::now();
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    CoverDatum d = random_datum(rng, 12, 3, 8);
    if (dim_special_group(d) != naive_dim_sg(d)) ++mismatches;
  }
  double dt = seconds_since(t0);
  ok &= expect(mismatches == 0, "naive oracle mismatches = 0", detail);
  ok &= expect(dt < 1.0, "1000 fuzzed comparisons under 1 s (took " +
                             std::to_string(dt) + " s)", detail);
  return ok;
}

bool c4_verdicts(std::string& detail) {
  bool ok = true;
  ok &= expect(classify(kMO20).verdict == Verdict::Special, "(12,(4,6,7,7)) Special",
               detail);
  ok &= expect(classify(mk(6, {{1, 1, 2, 2, 3, 3}})).verdict == Verdict::NotSpecial,
               "(6,(1,1,2,2,3,3)) NotSpecial", detail);
  ok &= expect(classify(mk(2, {{1, 1, 1, 1, 1, 1, 1, 1}})).verdict == Verdict::NotSpecial,
               "(2,(1^8)) NotSpecial", detail);
  ok &= expect(classify(mk(4, {{1, 1, 2, 0, 0}, {0, 0, 2, 1, 1}})).verdict ==
                   Verdict::NotSpecial,
               "N=4 shape-II #1 NotSpecial", detail);
  ok &= expect(classify(mk(4, {{2, 1, 1, 0, 0}, {0, 0, 1, 1, 2}})).verdict ==
                   Verdict::NotSpecial,
               "N=4 shape-II #2 NotSpecial", detail);
  ok &= expect(classify(mk(4, {{1, 1, 2, 0, 0}, {0, 0, 1, 1, 2}})).verdict ==
                   Verdict::NotSpecial,
               "N=4 shape-II #3 NotSpecial", detail);
  ok &= expect(classify(kIII_star).verdict == Verdict::Undecided, "III* Undecided", detail);
  ok &= expect(classify(kIII_2star).verdict == Verdict::Undecided, "III** Undecided",
               detail);
  return ok;
}

bool c5_theorem2(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  auto survivors = theorem2_scan({3, 4, 5, 6});
  double dt = seconds_since(t0);
  std::set<std::string> keys;
  std::size_t count = 0;
  for (const auto& [shape, list] : survivors) {
    count += list.size();
    for (const auto& sv : list) keys.insert(sv.key.bytes);
  }
  std::set<std::string> want = {canonical_key(kIII_star).bytes,
                                canonical_key(kIII_2star).bytes};
  bool ok = expect(count == 2 && keys == want, "survivors = {III*, III**}", detail);
  ok &= expect(dt < 60.0, "scan under 60 s (took " + std::to_string(dt) + " s)", detail);
  detail += detail.empty() ? "" : "; ";
  detail += "scan took " + std::to_string(dt) + " s";
  return ok;
}

bool c6_cyclic_table(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  auto table = cyclic_special_table(24, 8);
  double dt = seconds_since(t0);
  bool ok = expect(dt < 300.0, "table under 5 min", detail);
  std::size_t max_s = 0;
  std::set<std::uint32_t> distinct_n;
  for (const auto& row : table) {
    max_s = std::max(max_s, row.s());
    distinct_n.insert(row.modulus);
  }
  ok &= expect(max_s <= 6, "every special cyclic family has s <= 6", detail);
  auto contains = [&table](const CoverDatum& d) {
    for (const auto& row : table)
      if (is_isomorphic(row, d)) return true;
    return false;
  };
  ok &= expect(contains(mk(4, {{1, 1, 2, 2, 2}})), "contains (4,(1,1,2,2,2))", detail);
  ok &= expect(contains(mk(8, {{5, 5, 4, 2}})), "contains (8,(5,5,4,2))", detail);
  std::ostringstream note;
  note << "families=" << table.size() << ", distinct N=" << distinct_n.size()
       << " (paper's table-1 claim: 10), took " << dt << " s";
  detail += detail.empty() ? note.str() : "; " + note.str();
  return ok;
}

bool c7_hw_vs_points(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  CoverDatum quartic = mk(2, {{1, 1, 1, 1}});
  bool ok = true;
  for (std::uint64_t p : {5ull, 13ull, 17ull}) {
    PrimeContext ctx = make_prime_context(2, p);
    OrdinarityScan scan = scan_ordinarity(quartic, ctx, 50, 31415);
    bool exhaustive_ok = (p != 5) || scan.exhaustive;
    ok &= expect(exhaustive_ok && scan.oracle_checked >= 50 &&
                     scan.oracle_agreed == scan.oracle_checked,
                 "p=" + std::to_string(p) + " agreement " +
                     std::to_string(scan.oracle_agreed) + "/" +
                     std::to_string(scan.oracle_checked),
                 detail);
  }
  double dt = seconds_since(t0);
  ok &= expect(dt < 30.0, "HW/point-count comparison under 30 s", detail);
  return ok;
}

bool c8_properties(std::string& detail) {
  bool ok = true;
  std::mt19937_64 rng(271828);

  // spectra: sum d = genus, duality count
  for (int i = 0; i < 10000 && ok; ++i) {
    CoverDatum d = random_datum(rng);
    SpectrumTable t = spectrum_table(d);
    std::int64_t total = 0;
    for (const auto& rec : t.records) {
      total += rec.d;
      ok &= expect(rec.d + rec.d_dual == rec.nonzero_count - 2,
                   "d + d_dual = #nonzero - 2", detail);
    }
    ok &= expect(total == t.genus, "sum of d over characters = genus", detail);
  }

  // block sizes sum to genus
  for (int i = 0; i < 25 && ok; ++i) {
    CoverDatum d = random_datum(rng, 6, 2, 5);
    PrimeContext ctx = choose_prime(d.modulus, 3);
    if (ctx.p > 13 || ctx.p < d.s()) continue;
    auto z = sample_points(rng, ctx.p, d.s());
    std::int64_t total = 0;
    for (const auto& rec : spectrum_table(d).records)
      total += static_cast<std::int64_t>(hw_block_numeric(d, rec.chi.n, ctx, z).size);
    ok &= expect(total == genus(d), "HW block sizes sum to genus", detail);
  }

  // symbolic = numeric at 100 random points
  PrimeContext p7 = make_prime_context(3, 7);
  SpectrumTable star = spectrum_table(kIII_star);
  for (int t = 0; t < 100 && ok; ++t) {
    auto z = sample_points(rng, 7, 5);
    for (const auto& rec : star.records) {
      if (rec.d == 0) continue;
      HWBlock sym = hw_block_symbolic(kIII_star, rec.chi.n, p7);
      HWBlock num = hw_block_numeric(kIII_star, rec.chi.n, p7, z);
      for (std::size_t i = 0; i < sym.size; ++i)
        for (std::size_t j = 0; j < sym.size; ++j)
          ok &= expect(eval_poly(sym.poly_at(i, j), z, p7.p) == num.at(i, j),
                       "symbolic entries evaluate to numeric entries", detail);
    }
  }

  // generating function vs direct composition sum
  const std::vector<std::uint64_t> primes = {5, 7, 11, 13};
  int done = 0;
  while (done < 100 && ok) {
    std::uint64_t p = primes[rng() % primes.size()];
    std::vector<std::uint32_t> divisors;
    for (std::uint32_t n = 2; n <= p - 1; ++n)
      if ((p - 1) % n == 0) divisors.push_back(n);
    std::uint32_t n = divisors[rng() % divisors.size()];
    CoverDatum d = random_datum(rng, n, 2, 5);
    if (d.modulus != n || p < d.s()) continue;
    PrimeContext ctx = make_prime_context(n, p);
    SpectrumTable table = spectrum_table(d);
    const auto& rec = table.records[rng() % table.records.size()];
    if (rec.d == 0 || rec.d > 2) continue;
    auto z = sample_points(rng, p, d.s());
    HWBlock block = hw_block_numeric(d, rec.chi.n, ctx, z);
    std::vector<std::uint64_t> caps;
    for (Residue a : rec.chi.alpha) caps.push_back(ctx.q * neg_mod(a, n));
    for (std::size_t i = 1; i <= block.size; ++i)
      for (std::size_t j = 1; j <= block.size; ++j) {
        std::int64_t upsilon =
            static_cast<std::int64_t>(block.size - i + 1) * (ctx.p - 1) +
            static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
        ok &= expect(block.at(i - 1, j - 1) == direct_hw_entry(ctx, caps, z, upsilon),
                     "generating function = composition sum", detail);
      }
    ++done;
  }
  return ok;
}

bool c9_condition_star(std::string& detail) {
  bool ok = expect(!condition_star(kIII_star).has_value(), "condition (*) false for III*",
                   detail);
  auto w1 = condition_star(mk(11, {{1, 1, 1, 1, 7}}));
  ok &= expect(w1.has_value() && w1->chi.n == Tuple{3},
               "(11,(1,1,1,1,7)) witness n=(3)", detail);
  auto w2 = condition_star(mk(6, {{1, 1, 2, 2, 3, 3}}));
  ok &= expect(w2.has_value() && w2->chi.n == Tuple{1} && w2->d + w2->d_dual == 4,
               "(6,(1,1,2,2,3,3)) witness n=(1)", detail);
  auto w3 = condition_star(mk(2, {{1, 1, 1, 1, 1, 1, 1, 1}}));
  ok &= expect(w3.has_value() && w3->chi.n == Tuple{1} && w3->d + w3->d_dual == 6,
               "(2,(1^8)) witness n=(1), d+d_dual = s-2", detail);
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"genus and group reproduction (III*, (12,(4,6,7,7)))", c1_genus_group},
      {"eigenspace dimensions and pair types", c2_eigenspace_dims},
      {"dim S(G) values and naive-oracle fuzz", c3_dim_sg},
      {"verdicts (Special / NotSpecial / Undecided)", c4_verdicts},
      {"theorem-2 scan over N in {3,4,5,6}", c5_theorem2},
      {"cyclic special table, N <= 24, s <= 8", c6_cyclic_table},
      {"Hasse-Witt vs point counting, p in {5,13,17}", c7_hw_vs_points},
      {"structural property suite", c8_properties},
      {"condition (*) values and witnesses", c9_condition_star},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double dt = seconds_since(t0);
    std::printf("[%s] criterion %zu: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), dt, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
