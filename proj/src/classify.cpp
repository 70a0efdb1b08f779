#include "covertab/classify.hpp"

#include <algorithm>
#include <set>

#include "covertab/errors.hpp"

namespace covertab {

EigenspaceType record_type(const EigenspaceRecord& rec) {
  EigenspaceType t;
  t.a = std::max(rec.d, rec.d_dual);
  t.b = std::min(rec.d, rec.d_dual);
  t.order2 = rec.order2;
  return t;
}

std::int64_t delta(const EigenspaceType& t) {
  if (t.a < t.b || t.b < 0) raise("UnsupportedFactor", "malformed type");
  if (t.b == 0) return 0;  // compact factor
  if (t.order2) {
    if (t.a != t.b) raise("UnsupportedFactor", "order-2 type with d_n != d_{-n}");
    return t.a * (t.a + 1) / 2;  // sp_{2a}
  }
  return t.a * t.b;  // su(a,b)
}

namespace {

// identification used for distinctness: su(1,1) = sp_2
EigenspaceType normalize_type(EigenspaceType t) {
  if (t.a == 1 && t.b == 1) t.order2 = false;
  return t;
}

std::vector<TypeWitness> distinct_nonunitary_types(const SpectrumTable& table) {
  std::set<EigenspaceType> seen;
  std::vector<TypeWitness> out;
  for (const auto& rec : table.records) {
    EigenspaceType t = record_type(rec);
    if (t.b == 0) continue;
    if (seen.insert(normalize_type(t)).second) out.push_back({t, rec.chi.alpha});
  }
  return out;
}

}  // namespace

std::int64_t monodromy_lower_bound(const SpectrumTable& t) {
  std::int64_t bound = 0;
  for (const auto& w : distinct_nonunitary_types(t)) bound += delta(w.type);
  return bound;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Special: return "Special";
    case Verdict::NotSpecial: return "NotSpecial";
    case Verdict::Undecided: return "Undecided";
  }
  return "?";
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
  }
  return "?";
}

std::optional<Verdict> verdict_from_name(const std::string& s) {
  if (s == "Special") return Verdict::Special;
  if (s == "NotSpecial") return Verdict::NotSpecial;
  if (s == "Undecided") return Verdict::Undecided;
  return std::nullopt;
}

std::optional<Rule> rule_from_name(const std::string& s) {
  if (s == "R1") return Rule::R1;
  if (s == "R2") return Rule::R2;
  if (s == "R3") return Rule::R3;
  if (s == "R4") return Rule::R4;
  return std::nullopt;
}

ClassificationReport classify(const CoverDatum& d, const ClassifyOptions& opts) {
  SpectrumTable table = spectrum_table(d);
  ClassificationReport rep;
  rep.moduli_dim = static_cast<std::int64_t>(d.s()) - 3;
  rep.dim_sg = dim_special_group(table);
  rep.bound_types = distinct_nonunitary_types(table);
  rep.monodromy_bound = 0;
  for (const auto& w : rep.bound_types) rep.monodromy_bound += delta(w.type);
  if (auto star = condition_star(table)) {
    rep.condition_star = true;
    rep.star_alpha = star->chi.alpha;
    rep.star_n = star->chi.n;
    rep.star_d = star->d;
    rep.star_d_dual = star->d_dual;
  }

  if (rep.dim_sg == rep.moduli_dim) {
    rep.verdict = Verdict::Special;
    rep.rule = Rule::R1;
    return rep;
  }
  if (opts.use_r2 && rep.monodromy_bound > rep.moduli_dim) {
    rep.verdict = Verdict::NotSpecial;
    rep.rule = Rule::R2;
    return rep;
  }
  if (opts.use_r3 && rep.dim_sg > rep.moduli_dim && rep.condition_star) {
    rep.verdict = Verdict::NotSpecial;
    rep.rule = Rule::R3;
    return rep;
  }
  if (opts.use_r4) {
    std::int64_t s = static_cast<std::int64_t>(d.s());
    for (const auto& rec : table.records) {
      if (rec.nonzero_count != s) continue;
      auto cyclic = cyclic_datum_of_alpha(rec.chi.alpha, d.modulus);
      std::int64_t cyclic_dim = dim_special_group(*cyclic);
      if (cyclic_dim != s - 3) {  // cyclic family not special => neither is this one
        rep.verdict = Verdict::NotSpecial;
        rep.rule = Rule::R4;
        rep.r4 = R4Witness{rec.chi.alpha, *cyclic, cyclic_dim};
        return rep;
      }
    }
  }
  rep.verdict = Verdict::Undecided;
  return rep;
}

}  // namespace covertab
