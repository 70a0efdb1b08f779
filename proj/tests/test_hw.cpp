#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "covertab/errors.hpp"
#include "covertab/hasse_witt.hpp"
#include "covertab/spectrum.hpp"
#include "oracles.hpp"

using namespace covertab;
using covertab::testing::direct_hw_entry;
using covertab::testing::mk;
using covertab::testing::quartic_count_fp2;

namespace {

const CoverDatum kIII_star = mk(3, {{2, 1, 2, 1, 0}, {0, 0, 1, 1, 1}});

std::vector<std::uint64_t> caps_of(const CoverDatum& d, const Tuple& n,
                                   const PrimeContext& ctx) {
  Tuple alpha = alpha_tuple(d, n);
  std::vector<std::uint64_t> caps;
  for (Residue a : alpha) caps.push_back(ctx.q * neg_mod(a, d.modulus));
  return caps;
}

std::vector<std::uint64_t> random_points(std::mt19937_64& rng, std::uint64_t p,
                                         std::size_t s) {
  std::vector<std::uint64_t> pool(p);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t k = 0; k < s; ++k)
    std::swap(pool[k], pool[k + rng() % (p - k)]);
  return {pool.begin(), pool.begin() + s};
}

}  // namespace

TEST_CASE("choose_prime") {
  CHECK(choose_prime(3, 5).p == 7);
  CHECK(choose_prime(3, 5).q == 2);
  CHECK(choose_prime(2, 3).p == 3);
  CHECK(choose_prime(12, 2).p == 13);
  CHECK(choose_prime(12, 2).q == 1);
}

TEST_CASE("prime context validation and tables") {
  CHECK_THROWS_AS(make_prime_context(3, 6), CoverError);   // not prime
  CHECK_THROWS_AS(make_prime_context(5, 7), CoverError);   // 7 != 1 mod 5
  PrimeContext ctx = make_prime_context(3, 7);
  for (std::uint64_t k = 0; k < 7; ++k)
    CHECK(ctx.fact[k] * ctx.inv_fact[k] % 7 == 1);
  CHECK(ctx.binomial(6, 3) == 20 % 7);
  CHECK(ctx.binomial(2, 5) == 0);
}

TEST_CASE("numeric blocks: worked example values") {
  // (2,(1,1,1,1)) at p=5, z=(0,1,2,3): the single 1x1 block equals 3
  PrimeContext p5 = make_prime_context(2, 5);
  CoverDatum quartic = mk(2, {{1, 1, 1, 1}});
  HWBlock block = hw_block_numeric(quartic, {1}, p5, {0, 1, 2, 3});
  REQUIRE(block.size == 1);
  CHECK(block.at(0, 0) == 3);
  // agreement with the point-count oracle: a_5 = -2 so the fiber is ordinary
  CHECK(elliptic_trace_oracle(p5, {0, 1, 2, 3}) == -2);
  CHECK(is_ordinary_at(quartic, p5, {0, 1, 2, 3}));

  // character with d = 0 gives an empty block
  PrimeContext p7 = make_prime_context(3, 7);
  HWBlock empty = hw_block_numeric(kIII_star, {0, 2}, p7, {1, 2, 3, 4, 5});
  CHECK(empty.size == 0);
  CHECK(empty.numeric.empty());
}

TEST_CASE("numeric block errors") {
  PrimeContext p7 = make_prime_context(3, 7);
  CHECK_THROWS_AS(hw_block_numeric(kIII_star, {1, 1}, p7, {1, 2, 3, 4, 4}), CoverError);
  CHECK_THROWS_AS(hw_block_numeric(kIII_star, {1, 1}, p7, {1, 2, 3, 4}), CoverError);
  PrimeContext p5 = make_prime_context(2, 5);
  CHECK_THROWS_AS(hw_block_numeric(kIII_star, {1, 1}, p5, {1, 2, 3, 4, 0}), CoverError);
}

TEST_CASE("III* blocks at p=7: caps and direct-sum cross-check") {
  PrimeContext ctx = make_prime_context(3, 7);
  auto caps = caps_of(kIII_star, {1, 1}, ctx);
  CHECK(caps == std::vector<std::uint64_t>{2, 4, 0, 2, 4});
  std::mt19937_64 rng(99);
  for (int t = 0; t < 5; ++t) {
    auto z = random_points(rng, 7, 5);
    HWBlock block = hw_block_numeric(kIII_star, {1, 1}, ctx, z);
    REQUIRE(block.size == 1);
    CHECK(block.at(0, 0) == direct_hw_entry(ctx, caps, z, 6));  // upsilon = p-1
  }
}

TEST_CASE("symbolic blocks: elementary symmetric example") {
  // (2,(1,1,1,1)) at p=3: all caps are 1, the single entry is e_2(z)
  PrimeContext ctx = make_prime_context(2, 3);
  HWBlock block = hw_block_symbolic(mk(2, {{1, 1, 1, 1}}), {1}, ctx);
  REQUIRE(block.size == 1);
  const SparsePoly& entry = block.poly_at(0, 0);
  REQUIRE(entry.size() == 6);  // C(4,2) square-free monomials of degree 2
  for (const auto& mono : entry) {
    CHECK(mono.coef == 1);
    std::uint32_t total = 0;
    for (auto e : mono.exp) {
      CHECK(e <= 1);
      total += e;
    }
    CHECK(total == 2);
  }
}

TEST_CASE("symbolic blocks: evaluation matches numeric, homogeneity") {
  std::mt19937_64 rng(123);
  PrimeContext ctx = make_prime_context(3, 7);
  SpectrumTable table = spectrum_table(kIII_star);
  for (const auto& rec : table.records) {
    if (rec.d == 0) continue;
    HWBlock sym = hw_block_symbolic(kIII_star, rec.chi.n, ctx);
    for (int t = 0; t < 100; ++t) {
      auto z = random_points(rng, 7, 5);
      HWBlock num = hw_block_numeric(kIII_star, rec.chi.n, ctx, z);
      for (std::size_t i = 0; i < sym.size; ++i)
        for (std::size_t j = 0; j < sym.size; ++j)
          CHECK(eval_poly(sym.poly_at(i, j), z, ctx.p) == num.at(i, j));
    }
  }

  // entry (i,j) is homogeneous of degree (d-i+1)(p-1)+(i-j), 1-based
  PrimeContext p11 = make_prime_context(5, 11);
  CoverDatum fam = mk(5, {{3, 3, 2, 1, 1}});
  HWBlock sym = hw_block_symbolic(fam, {1}, p11);
  REQUIRE(sym.size == 2);
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) {
      std::int64_t upsilon = static_cast<std::int64_t>(2 - i + 1) * 10 +
                             static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
      for (const auto& mono : sym.poly_at(i - 1, j - 1)) {
        std::int64_t total = 0;
        for (auto e : mono.exp) total += e;
        CHECK(total == upsilon);
      }
    }
}

TEST_CASE("term limit guard") {
  PrimeContext ctx = make_prime_context(2, 17);
  try {
    hw_block_symbolic(mk(2, {{1, 1, 1, 1, 1, 1, 1, 1}}), {1}, ctx, 10);
    FAIL("expected TermLimitExceeded");
  } catch (const CoverError& e) {
    CHECK(e.name() == "TermLimitExceeded");
    CHECK(std::string(e.what()).find("limit is 10") != std::string::npos);
  }
}

TEST_CASE("elliptic oracle: internal consistency over F_p^2") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {5ull, 13ull}) {
    PrimeContext ctx = make_prime_context(2, p);
    for (int t = 0; t < 3; ++t) {
      auto zv = random_points(rng, p, 4);
      std::array<std::uint64_t, 4> z{zv[0], zv[1], zv[2], zv[3]};
      std::int64_t ap = elliptic_trace_oracle(ctx, z);
      CHECK(ap * ap <= 4 * static_cast<std::int64_t>(p));  // Hasse bound
      std::uint64_t count2 = quartic_count_fp2(ctx, z);
      CHECK(static_cast<std::int64_t>(count2) ==
            static_cast<std::int64_t>(p * p) + 1 - (ap * ap - 2 * static_cast<std::int64_t>(p)));
    }
  }
}

TEST_CASE("elliptic oracle: translation and square-scaling invariance") {
  PrimeContext ctx = make_prime_context(2, 13);
  std::array<std::uint64_t, 4> z{0, 1, 3, 7};
  std::int64_t ap = elliptic_trace_oracle(ctx, z);
  for (std::uint64_t c = 1; c < 13; ++c) {
    std::array<std::uint64_t, 4> shifted;
    for (int k = 0; k < 4; ++k) shifted[k] = (z[k] + c) % 13;
    CHECK(elliptic_trace_oracle(ctx, shifted) == ap);
  }
  for (std::uint64_t u = 1; u < 13; ++u) {
    std::array<std::uint64_t, 4> scaled;
    for (int k = 0; k < 4; ++k) scaled[k] = z[k] * u % 13 * u % 13;
    CHECK(elliptic_trace_oracle(ctx, scaled) == ap);
  }
}

TEST_CASE("ordinarity scan: exhaustive agreement at p=5, existence for III*") {
  PrimeContext p5 = make_prime_context(2, 5);
  OrdinarityScan scan = scan_ordinarity(mk(2, {{1, 1, 1, 1}}), p5, 0, 1);
  CHECK(scan.exhaustive);
  CHECK(scan.tested == 120);  // ordered tuples of 4 distinct residues
  CHECK(scan.oracle_checked == 120);
  CHECK(scan.oracle_agreed == 120);

  PrimeContext p7 = make_prime_context(3, 7);
  OrdinarityScan star = scan_ordinarity(kIII_star, p7, 0, 1);
  CHECK(star.exhaustive);
  CHECK(star.ordinary > 0);
  REQUIRE(star.first_ordinary.has_value());
  CHECK(is_ordinary_at(kIII_star, p7, *star.first_ordinary));

  // sampled scans are reproducible
  PrimeContext p13 = make_prime_context(2, 13);
  OrdinarityScan s1 = scan_ordinarity(mk(2, {{1, 1, 1, 1}}), p13, 30, 99);
  OrdinarityScan s2 = scan_ordinarity(mk(2, {{1, 1, 1, 1}}), p13, 30, 99);
  CHECK_FALSE(s1.exhaustive);
  CHECK(s1.tested == 30);
  CHECK(s1.ordinary == s2.ordinary);
  CHECK(s1.first_ordinary == s2.first_ordinary);
  CHECK(s1.oracle_agreed == s1.oracle_checked);
}

TEST_CASE("block sizes sum to the genus") {
  std::mt19937_64 rng(555);
  for (int iter = 0; iter < 50; ++iter) {
    CoverDatum d = covertab::testing::random_datum(rng, 6, 2, 5);
    PrimeContext ctx = choose_prime(d.modulus, 3);
    if (ctx.p > 13 || ctx.p < d.s()) continue;  // keep the polynomial degrees small
    auto z = random_points(rng, ctx.p, d.s());
    std::int64_t total = 0;
    for (const auto& rec : spectrum_table(d).records)
      total += static_cast<std::int64_t>(hw_block_numeric(d, rec.chi.n, ctx, z).size);
    CHECK(total == genus(d));
  }
}

TEST_CASE("generating function equals the literal composition sum") {
  std::mt19937_64 rng(314159);
  const std::vector<std::uint64_t> primes = {5, 7, 11, 13};
  int done = 0;
  while (done < 100) {
    std::uint64_t p = primes[rng() % primes.size()];
    // random N dividing p-1
    std::vector<std::uint32_t> divisors;
    for (std::uint32_t n = 2; n <= p - 1; ++n)
      if ((p - 1) % n == 0) divisors.push_back(n);
    std::uint32_t n = divisors[rng() % divisors.size()];
    CoverDatum d = covertab::testing::random_datum(rng, n, 2, 5);
    if (d.modulus != n) continue;  // random_datum draws N <= n; want exactly n
    if (p < d.s()) continue;
    PrimeContext ctx = make_prime_context(d.modulus, p);
    SpectrumTable table = spectrum_table(d);
    const auto& rec = table.records[rng() % table.records.size()];
    if (rec.d == 0 || rec.d > 2) continue;  // composition sums blow up fast
    auto z = random_points(rng, p, d.s());
    HWBlock block = hw_block_numeric(d, rec.chi.n, ctx, z);
    auto caps = caps_of(d, rec.chi.n, ctx);
    for (std::size_t i = 1; i <= block.size; ++i)
      for (std::size_t j = 1; j <= block.size; ++j) {
        std::int64_t upsilon =
            static_cast<std::int64_t>(block.size - i + 1) * (ctx.p - 1) +
            static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
        CHECK(block.at(i - 1, j - 1) == direct_hw_entry(ctx, caps, z, upsilon));
      }
    ++done;
  }
}

TEST_CASE("divisibility orders: trivial cases") {
  CHECK_FALSE(divisibility_order(SparsePoly{}, 0, 1).has_value());
  SparsePoly poly = {{{0, 2, 0}, 1}, {{1, 5, 0}, 1}};
  CHECK(divisibility_order(poly, 0, 1) == 2);   // restriction z_0=0 keeps z_1^2
  CHECK(divisibility_order(poly, 0, 2) == 0);   // no z_2 at all
  CHECK_FALSE(divisibility_order(SparsePoly{{{1, 1, 0}, 1}}, 0, 1).has_value());
  CHECK_THROWS_AS(divisibility_order(poly, 1, 1), CoverError);
}

TEST_CASE("divisibility orders reproduce the exponent quantities") {
  // family with {d_n, d_{-n}} = {1, s-3}: (5,(3,3,2,1,1)), p=11, q=2
  PrimeContext ctx = make_prime_context(5, 11);
  CoverDatum fam = mk(5, {{3, 3, 2, 1, 1}});
  Tuple alpha = alpha_tuple(fam, {1});
  REQUIRE(eigenspace_dim(fam, {1}) == 2);  // = s-3
  REQUIRE(eigenspace_dim(fam, {4}) == 1);

  HWBlock big = hw_block_symbolic(fam, {1}, ctx);    // (s-3) x (s-3)
  HWBlock small = hw_block_symbolic(fam, {4}, ctx);  // 1 x 1, "a"
  REQUIRE(big.size == 2);
  REQUIRE(small.size == 1);

  std::int64_t q = static_cast<std::int64_t>(ctx.q);
  std::int64_t n = fam.modulus;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      std::int64_t pair_sum = static_cast<std::int64_t>(alpha[i]) + alpha[j];

      auto ord_a = divisibility_order(small.poly_at(0, 0), i, j);
      REQUIRE(ord_a.has_value());
      CHECK(*ord_a == q * std::max<std::int64_t>(0, pair_sum - n));

      // bottom diagonal entry: order 0 after restriction
      auto ord_a22 = divisibility_order(big.poly_at(1, 1), i, j);
      REQUIRE(ord_a22.has_value());
      CHECK(*ord_a22 == 0);
      // u_n(2) as an order difference
      CHECK(std::llabs(*ord_a22 - *ord_a) == q * std::max<std::int64_t>(0, pair_sum - n));

      // u_n(1): both alpha indices enter with a minus sign
      auto ord_a11 = divisibility_order(big.poly_at(0, 0), i, j);
      REQUIRE(ord_a11.has_value());
      CHECK(*ord_a11 == q * std::max<std::int64_t>(0, n - pair_sum));
      CHECK(std::llabs(*ord_a11 - *ord_a) == q * std::llabs(n - pair_sum));
    }
}
