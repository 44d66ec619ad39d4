#include "doctest.h"
#include "eftlab/conditions.hpp"
#include "eftlab/sweep.hpp"

using namespace eftlab;

namespace {
const FormatConfig kDesk4(4, -10, 10);

Fp lit(const char* text, const FormatConfig& fmt) {
  return *to_fp_exact(*Dyadic::parse(text), fmt);
}
}  // namespace

TEST_CASE("condition names round-trip") {
  for (ConditionId id : kAllConditions) CHECK(parse_condition(condition_name(id)) == id);
  CHECK(!parse_condition("theorem_faith3"));
}

TEST_CASE("worked condition examples at p = 4") {
  Fp a16 = lit("16", kDesk4), b_half = lit("1/2", kDesk4);
  CHECK(check(ConditionId::TheoremFaith2, a16, b_half, kDesk4));
  CHECK(!check(ConditionId::PriorJeannerod, a16, b_half, kDesk4));

  CHECK(!check(ConditionId::TheoremFaith2, a16, lit("1/16", kDesk4), kDesk4));
  CHECK(check(ConditionId::TheoremRto1, lit("18", kDesk4), lit("-1/16", kDesk4), kDesk4));
  CHECK(check(ConditionId::TheoremFaith1, lit("15", kDesk4), lit("1/16", kDesk4), kDesk4));
  CHECK(!check(ConditionId::PriorLinnainmaaH, lit("15", kDesk4), lit("1/16", kDesk4), kDesk4,
               lit("16", kDesk4)));
}

TEST_CASE("conjunct breakdown names the failing clause") {
  ConditionBreakdown b =
      check_detailed(ConditionId::TheoremFaith2, lit("16", kDesk4), lit("1/16", kDesk4), kDesk4);
  CHECK(!b.satisfied);
  bool found = false;
  for (const auto& [name, value] : b.conjuncts)
    if (name == "b_mult_of_2u2_ufp_a") {
      found = true;
      CHECK(!value);
    }
  CHECK(found);
}

TEST_CASE("zero operands are trivially admitted except for saturation") {
  Fp zero = Fp::zero(kDesk4);
  Fp other = lit("7/2", kDesk4);
  for (ConditionId id : kAllConditions) {
    std::optional<Fp> extra;
    if (id == ConditionId::PriorLinnainmaaH) extra = other;
    bool expected = id != ConditionId::LemmaRto1;
    CHECK(check(id, zero, other, kDesk4, extra) == expected);
    CHECK(check(id, other, zero, kDesk4, extra) == expected);
  }
}

TEST_CASE("post-hoc condition demands the computed sum") {
  CHECK_THROWS_AS(check(ConditionId::PriorLinnainmaaH, lit("15", kDesk4),
                        lit("1/16", kDesk4), kDesk4),
                  std::invalid_argument);
  CHECK_THROWS_AS(check(ConditionId::PriorLinnainmaaH, lit("15", kDesk4),
                        lit("1/16", kDesk4), kDesk4, Fp::pos_inf()),
                  std::invalid_argument);
}

TEST_CASE("exponent gap bounds") {
  CHECK(exponent_gap_bound(ConditionId::TheoremFaith1, kDesk4) == 7);
  CHECK(exponent_gap_bound(ConditionId::TheoremFaith2, kDesk4) == 7);
  CHECK(exponent_gap_bound(ConditionId::LemmaFaith2, kDesk4) == 4);
  CHECK(exponent_gap_bound(ConditionId::PriorBoldo, kDesk4) == 3);
  CHECK(exponent_gap_bound(ConditionId::PriorJeannerod, kDesk4) == 4);
  CHECK_THROWS_AS(exponent_gap_bound(ConditionId::LemmaRto1, kDesk4), std::invalid_argument);
}

TEST_CASE("gap bounds are attained and never exceeded") {
  FormatConfig fmt(3, -6, 6);
  auto floats = enumerate_format(fmt);
  for (ConditionId id : {ConditionId::LemmaFaith2, ConditionId::TheoremFaith1,
                         ConditionId::PriorBoldo}) {
    int bound = exponent_gap_bound(id, fmt);
    std::int64_t seen = -1000;
    for (const Fp& a : floats) {
      for (const Fp& b : floats) {
        if (a.is_zero() || b.is_zero()) continue;
        if (!check(id, a, b, fmt)) continue;
        std::int64_t ea = *a.value(fmt).floor_log2();
        std::int64_t eb = *b.value(fmt).floor_log2();
        std::int64_t gap = ea > eb ? ea - eb : eb - ea;
        CHECK(gap <= bound);
        seen = std::max(seen, gap);
      }
    }
    CHECK(seen == bound);
  }
}

TEST_CASE("implication lattice, exhaustively") {
  FormatConfig fmt(3, -6, 6);
  auto floats = enumerate_format(fmt);
  for (const Fp& a : floats) {
    for (const Fp& b : floats) {
      bool lf2 = check(ConditionId::LemmaFaith2, a, b, fmt);
      bool tf1 = check(ConditionId::TheoremFaith1, a, b, fmt);
      bool tf2 = check(ConditionId::TheoremFaith2, a, b, fmt);
      bool jean = check(ConditionId::PriorJeannerod, a, b, fmt);
      if (lf2) CHECK(tf1);
      if (tf2) CHECK(tf1);
      if (jean) CHECK(tf2);
    }
  }
}

TEST_CASE("strictness witnesses") {
  CHECK(check(ConditionId::TheoremFaith2, lit("16", kDesk4), lit("1/2", kDesk4), kDesk4));
  CHECK(!check(ConditionId::PriorJeannerod, lit("16", kDesk4), lit("1/2", kDesk4), kDesk4));

  CHECK(check(ConditionId::TheoremRto1, lit("18", kDesk4), lit("-1/16", kDesk4), kDesk4));
  CHECK(!check(ConditionId::TheoremFaith2, lit("18", kDesk4), lit("-1/16", kDesk4), kDesk4));
}

TEST_CASE("guarantee classes") {
  CHECK(guarantee_class(ConditionId::TheoremFaith1) == GuaranteeClass::DeltaInF);
  CHECK(guarantee_class(ConditionId::TheoremFaith2) == GuaranteeClass::Eft);
  CHECK(guarantee_class(ConditionId::TheoremRto1) == GuaranteeClass::Eft);
  CHECK(guarantee_class(ConditionId::TheoremExtractScalar) == GuaranteeClass::SplitEft);
  CHECK(guarantee_class(ConditionId::PriorBoldo) == GuaranteeClass::DeltaInF);
}

// The prior-work conditions carry their own guarantees; sweep them at a
// small format so regressions in the predicates show up loudly.
TEST_CASE("prior conditions keep their promises at fmt(3,-6,6)") {
  FormatConfig fmt(3, -6, 6);

  SUBCASE("Boldo's gap bound gives delta in F for all six modes") {
    SweepSpec spec(fmt);
    spec.target = SweepTarget::DeltaInF;
    spec.condition = ConditionId::PriorBoldo;
    spec.modes.assign(std::begin(kAllModes), std::end(kAllModes));
    CHECK(sweep_delta(spec).violations_total == 0);
  }

  SUBCASE("Jeannerod's conditions give an EFT for uniform faithful triples") {
    SweepSpec spec(fmt);
    spec.target = SweepTarget::FtsEft;
    spec.condition = ConditionId::PriorJeannerod;
    spec.triples = uniform_triples();
    spec.adversarial_fr = true;
    CHECK(sweep_fts(spec).violations_total == 0);
  }

  SUBCASE("sign conditions match their directed modes") {
    auto run = [&](ConditionId id, RoundingMode m) {
      SweepSpec spec(fmt);
      spec.target = SweepTarget::FtsEft;
      spec.condition = id;
      spec.triples = {{m, m, m}};
      return sweep_fts(spec).violations_total;
    };
    CHECK(run(ConditionId::PriorSignRd, RoundingMode::RD) == 0);
    CHECK(run(ConditionId::PriorSignRu, RoundingMode::RU) == 0);
    CHECK(run(ConditionId::PriorSignRz, RoundingMode::RZ) == 0);
  }

  SUBCASE("Dekker's ordering gives an EFT under the nearest modes") {
    for (RoundingMode m : {RoundingMode::RNE, RoundingMode::RNA}) {
      SweepSpec spec(fmt);
      spec.target = SweepTarget::FtsEft;
      spec.condition = ConditionId::PriorDekker;
      spec.triples = {{m, m, m}};
      CHECK(sweep_fts(spec).violations_total == 0);
    }
  }

  SUBCASE("Linnainmaa's parity condition under round-to-odd") {
    SweepSpec spec(fmt);
    spec.target = SweepTarget::FtsEft;
    spec.condition = ConditionId::PriorLinnainmaaParity;
    spec.triples.clear();
    for (RoundingMode o2 : kAllModes)
      for (RoundingMode o3 : kAllModes) spec.triples.push_back({RoundingMode::RO, o2, o3});
    CHECK(sweep_fts(spec).violations_total == 0);
  }

  SUBCASE("Linnainmaa's lsb-exponent condition under RZ and RO") {
    for (RoundingMode m : {RoundingMode::RZ, RoundingMode::RO}) {
      SweepSpec spec(fmt);
      spec.target = SweepTarget::DeltaInF;
      spec.condition = ConditionId::PriorLinnainmaaH;
      spec.modes = {m};
      CHECK(sweep_delta(spec).violations_total == 0);
    }
  }
}
