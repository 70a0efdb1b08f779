#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covertab/datum.hpp"
#include "covertab/shapes.hpp"
#include "covertab/span.hpp"
#include "covertab/spectrum.hpp"

namespace covertab {

// Unordered eigenspace type {d_n, d_{-n}}, with the order-2 flag that decides
// between the unitary and symplectic monodromy factor.
struct EigenspaceType {
  std::int64_t a = 0;  // a >= b
  std::int64_t b = 0;
  bool order2 = false;

  bool operator==(const EigenspaceType& o) const {
    return a == o.a && b == o.b && order2 == o.order2;
  }
  bool operator<(const EigenspaceType& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return order2 < o.order2;
  }
};

EigenspaceType record_type(const EigenspaceRecord& rec);

// Symmetric-space dimension of the simple factor attached to a type:
// 0 when compact (b = 0), a*b for su(a,b), a(a+1)/2 for the symplectic
// order-2 case. Malformed order-2 types raise UnsupportedFactor.
std::int64_t delta(const EigenspaceType& t);

// Sum of delta over the distinct non-unitary types in the table, each type
// counted once. Type (1,1) is counted once whether or not the order-2 flag
// varies across its occurrences: su(1,1) and sp_2 are isomorphic, so those
// eigenspaces may share a factor.
std::int64_t monodromy_lower_bound(const SpectrumTable& t);

enum class Verdict { Special, NotSpecial, Undecided };
enum class Rule { R1, R2, R3, R4 };

std::string verdict_name(Verdict v);
std::string rule_name(Rule r);
std::optional<Verdict> verdict_from_name(const std::string&);
std::optional<Rule> rule_from_name(const std::string&);

struct TypeWitness {
  EigenspaceType type;
  Tuple alpha;  // sample eigenspace of that type

  bool operator==(const TypeWitness& o) const { return type == o.type && alpha == o.alpha; }
};

struct R4Witness {
  Tuple alpha;                  // character with all-nonzero associated tuple
  CoverDatum cyclic;            // its cyclic family (N/f, alpha/f)
  std::int64_t cyclic_dim_sg = 0;

  bool operator==(const R4Witness& o) const {
    return alpha == o.alpha && cyclic == o.cyclic && cyclic_dim_sg == o.cyclic_dim_sg;
  }
};

struct ClassificationReport {
  Verdict verdict = Verdict::Undecided;
  std::optional<Rule> rule;
  std::int64_t moduli_dim = 0;      // s - 3
  std::int64_t dim_sg = 0;          // dim S(G)
  std::int64_t monodromy_bound = 0;
  bool condition_star = false;
  std::optional<Tuple> star_alpha;  // witness for condition (*)
  std::optional<Tuple> star_n;
  std::int64_t star_d = 0, star_d_dual = 0;
  std::vector<TypeWitness> bound_types;  // distinct non-unitary types behind the bound
  std::optional<R4Witness> r4;

  bool operator==(const ClassificationReport& o) const {
    return verdict == o.verdict && rule == o.rule && moduli_dim == o.moduli_dim &&
           dim_sg == o.dim_sg && monodromy_bound == o.monodromy_bound &&
           condition_star == o.condition_star && star_alpha == o.star_alpha &&
           star_n == o.star_n && star_d == o.star_d && star_d_dual == o.star_d_dual &&
           bound_types == o.bound_types && r4 == o.r4;
  }
};

struct ClassifyOptions {
  bool use_r2 = true;
  bool use_r3 = true;
  bool use_r4 = true;
};

// Decision rules, first hit wins:
//   R1 Special:    dim S(G) = s-3.
//   R2 NotSpecial: monodromy lower bound > s-3.
//   R3 NotSpecial: dim S(G) > s-3 and condition (*) holds.
//   R4 NotSpecial: some character with all-nonzero associated tuple whose
//                  cyclic family has dim S(G) != s-3 (for cyclic families
//                  that equality characterizes the special ones).
// Otherwise Undecided.
ClassificationReport classify(const CoverDatum& d, const ClassifyOptions& opts = {});

// All special single-row families up to isomorphism with 4 <= s <= s_max,
// N <= n_max, gcd(N, entries) = 1, sorted by (N, s, canonical key).
std::vector<CoverDatum> cyclic_special_table(std::uint32_t n_max, std::size_t s_max,
                                             std::size_t workers = 0);

struct ShapeSurvivor {
  CoverDatum datum;
  CanonicalKey key;
  ClassificationReport report;
};

// Classifies every primitive 2x5 datum matching the shape zero patterns over
// the given moduli and returns the classes not proven NotSpecial.
std::map<Shape, std::vector<ShapeSurvivor>> theorem2_scan(
    const std::vector<std::uint32_t>& moduli, std::size_t workers = 0);

}  // namespace covertab
