#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "eftlab/sweep.hpp"

using namespace eftlab;

namespace {

bool has_violation(const SweepReport& rep, const char* a, const char* b) {
  for (const Json& v : rep.violations)
    if (v.value("a", "") == a && v.value("b", "") == b) return true;
  return false;
}

}  // namespace

TEST_CASE("triple sets") {
  CHECK(uniform_triples().size() == 6);
  CHECK(mixed_triples().size() == 216);
  CHECK(adversarial_triples().size() == 8);
  CHECK(adversarial_triples(RoundingMode::RO).size() == 4);
}

TEST_CASE("unconditional round-up sweep finds the classic counterexample") {
  SweepSpec spec{FormatConfig(4, -10, 10)};
  spec.target = SweepTarget::DeltaInF;
  spec.modes = {RoundingMode::RU};
  spec.max_violations = 5'000'000;  // uncapped: the witness pair sits mid-list
  SweepReport rep = sweep_delta(spec);
  CHECK(rep.violations_total > 0);
  CHECK(rep.violations.size() == rep.violations_total);
  CHECK(has_violation(rep, "16", "1/16"));
  CHECK(rep.pairs_total == 351u * 351u);
  CHECK(rep.pairs_condition_true == rep.pairs_total);  // no condition
}

TEST_CASE("saturation sweep is clean") {
  SweepSpec spec{FormatConfig(3, -6, 6)};
  spec.target = SweepTarget::DeltaInF;
  spec.condition = ConditionId::LemmaRto1;
  spec.modes = {RoundingMode::RO};
  spec.pair_filter = "abs_sum_gt_omega";
  SweepReport rep = sweep_delta(spec);
  CHECK(rep.violations_total == 0);
  CHECK(rep.pairs_total > 0);
  CHECK(rep.pairs_condition_true == rep.pairs_total);
  CHECK(rep.overflow_total == 0);  // round-to-odd never overflows
}

TEST_CASE("unconditional truncating FastTwoSum sweep finds the known failing pair") {
  SweepSpec spec{FormatConfig(4, -10, 10)};
  spec.target = SweepTarget::FtsEft;
  spec.triples = {{RoundingMode::RZ, RoundingMode::RZ, RoundingMode::RZ}};
  spec.max_violations = 5'000'000;
  SweepReport rep = sweep_fts(spec);
  CHECK(rep.violations_total > 0);
  CHECK(has_violation(rep, "18", "-1/16"));
}

TEST_CASE("engine agrees with fast_two_sum pair by pair") {
  FormatConfig fmt(2, 0, 2);
  SweepSpec spec(fmt);
  spec.target = SweepTarget::FtsEft;
  spec.triples = mixed_triples();
  spec.max_violations = 100000;
  SweepReport rep = sweep_fts(spec);

  std::uint64_t direct_violations = 0, direct_overflow = 0;
  auto floats = enumerate_format(fmt);
  for (const Fp& a : floats)
    for (const Fp& b : floats)
      for (const ModeTriple& t : mixed_triples()) {
        FtsTrace trace = fast_two_sum(a, b, t, fmt);
        if (trace.overflow)
          ++direct_overflow;
        else if (!trace.eft)
          ++direct_violations;
      }
  CHECK(rep.violations_total == direct_violations);
  CHECK(rep.overflow_total == direct_overflow);
  CHECK(rep.evaluations == floats.size() * floats.size() * 216);
}

TEST_CASE("soundness holds at the minimum precision p = 2") {
  FormatConfig fmt(2, -3, 3);

  SweepSpec fts(fmt);
  fts.target = SweepTarget::FtsEft;
  fts.condition = ConditionId::TheoremFaith2;
  fts.triples = mixed_triples();
  CHECK(sweep_fts(fts).violations_total == 0);

  SweepSpec rto(fmt);
  rto.target = SweepTarget::FtsEft;
  rto.condition = ConditionId::TheoremRto1;
  for (RoundingMode o2 : kAllModes)
    for (RoundingMode o3 : kAllModes) rto.triples.push_back({RoundingMode::RO, o2, o3});
  CHECK(sweep_fts(rto).violations_total == 0);

  SweepSpec delta(fmt);
  delta.target = SweepTarget::DeltaInF;
  delta.condition = ConditionId::TheoremFaith1;
  delta.modes.assign(std::begin(kAllModes), std::end(kAllModes));
  CHECK(sweep_delta(delta).violations_total == 0);

  for (int k = fmt.emin - fmt.precision + 2; k <= fmt.emax; ++k) {
    SweepSpec split(fmt);
    split.target = SweepTarget::SplitEft;
    split.split_k = k;
    for (RoundingMode o2 : kAllModes)
      for (RoundingMode o3 : kAllModes) split.triples.push_back({RoundingMode::RO, o2, o3});
    CHECK(sweep_split(split).violations_total == 0);
  }
}

TEST_CASE("enumeration refuses formats beyond the size guard") {
  CHECK_THROWS_AS(enumerate_format(FormatConfig(30, -100000, 100000)), std::invalid_argument);
}

TEST_CASE("delta engine agrees with rounding_error pair by pair") {
  FormatConfig fmt(3, -2, 2);
  SweepSpec spec(fmt);
  spec.target = SweepTarget::DeltaInF;
  spec.modes.assign(std::begin(kAllModes), std::end(kAllModes));
  spec.max_violations = 100000;
  SweepReport rep = sweep_delta(spec);

  std::uint64_t direct_violations = 0, direct_overflow = 0;
  auto floats = enumerate_format(fmt);
  for (const Fp& a : floats)
    for (const Fp& b : floats)
      for (RoundingMode m : kAllModes) {
        RoundingError e = rounding_error(a, b, m, fmt);
        if (e.overflow)
          ++direct_overflow;
        else if (!e.in_format)
          ++direct_violations;
      }
  CHECK(rep.violations_total == direct_violations);
  CHECK(rep.overflow_total == direct_overflow);
}

TEST_CASE("split engine agrees with extract_scalar point by point") {
  FormatConfig fmt(4, -10, 10);
  SweepSpec spec(fmt);
  spec.target = SweepTarget::SplitEft;
  spec.split_k = 3;
  spec.split_control = false;
  for (RoundingMode o2 : kAllModes)
    for (RoundingMode o3 : kAllModes) spec.triples.push_back({RoundingMode::RO, o2, o3});
  SweepReport rep = sweep_split(spec);

  Fp sigma = succ(*to_fp_exact(Dyadic(8), fmt), fmt);
  std::uint64_t direct_failures = 0, xs = 0;
  for (const Fp& x : enumerate_format(fmt)) {
    if (!(x.value(fmt).abs() <= Dyadic(8))) continue;
    ++xs;
    for (const ModeTriple& t : spec.triples) {
      SplitTrace trace = extract_scalar(sigma, x, t, fmt);
      if (!trace.overflow && !(trace.exact_split && trace.grid_ok)) ++direct_failures;
    }
  }
  CHECK(rep.pairs_total == xs);
  CHECK(rep.violations_total == direct_failures);
  CHECK(rep.violations_total == 0);
}

TEST_CASE("budget guard refuses oversized sweeps") {
  SweepSpec spec{FormatConfig(4, -10, 10)};
  spec.target = SweepTarget::DeltaInF;
  spec.modes = {RoundingMode::RNE};
  spec.pair_budget = 1000;
  CHECK_THROWS_AS(sweep_delta(spec), BudgetExceeded);
}

TEST_CASE("violation list is capped but totals stay exact") {
  SweepSpec spec{FormatConfig(3, -6, 6)};
  spec.target = SweepTarget::DeltaInF;
  spec.modes = {RoundingMode::RU, RoundingMode::RD};
  spec.max_violations = 3;
  SweepReport capped = sweep_delta(spec);
  spec.max_violations = 1000000;
  SweepReport full = sweep_delta(spec);
  CHECK(capped.violations.size() == 3);
  CHECK(capped.violations_total == full.violations_total);
  CHECK(full.violations.size() == full.violations_total);
  // The cap keeps a prefix of the full list.
  for (std::size_t i = 0; i < capped.violations.size(); ++i)
    CHECK(capped.violations[i] == full.violations[i]);
}

TEST_CASE("determinism and partition soundness") {
  SweepSpec spec{FormatConfig(3, -6, 6)};
  spec.target = SweepTarget::DeltaInF;
  spec.modes = {RoundingMode::RU};
  SweepReport once = sweep_delta(spec);
  SweepReport twice = sweep_delta(spec);
  CHECK(reports_equivalent(once, twice));

  for (int jobs : {2, 3, 7}) {
    spec.jobs = jobs;
    SweepReport parallel = sweep_delta(spec);
    CHECK(reports_equivalent(once, parallel));
  }

  SweepSpec fts{FormatConfig(3, -6, 6)};
  fts.target = SweepTarget::FtsEft;
  fts.condition = ConditionId::TheoremFaith2;
  fts.triples = uniform_triples();
  SweepReport f1 = sweep_fts(fts);
  fts.jobs = 5;
  SweepReport f5 = sweep_fts(fts);
  CHECK(reports_equivalent(f1, f5));
}

TEST_CASE("report serialization round-trips") {
  SweepSpec spec{FormatConfig(3, -6, 6)};
  spec.target = SweepTarget::DeltaInF;
  spec.modes = {RoundingMode::RU};
  spec.max_violations = 5;
  SweepReport rep = sweep_delta(spec);

  std::string path = "roundtrip_report.json";
  emit_report(rep, ReportFormat::Json, path);
  SweepReport back = parse_report(path);
  CHECK(report_to_json(back) == report_to_json(rep));
  std::remove(path.c_str());

  std::string csv_path = "roundtrip_report.csv";
  emit_report(rep, ReportFormat::Csv, csv_path);
  std::ifstream is(csv_path);
  std::string header;
  std::getline(is, header);
  CHECK(header == "a,b,mode,x,delta");
  std::size_t rows = 0;
  for (std::string line; std::getline(is, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == rep.violations.size());
  is.close();
  std::remove(csv_path.c_str());

  CHECK_THROWS_AS(emit_report(rep, ReportFormat::Json, "/nonexistent-dir/x.json"),
                  std::runtime_error);
}

TEST_CASE("split sweep at the anchor from the worked example") {
  SweepSpec spec{FormatConfig(4, -10, 10)};
  spec.target = SweepTarget::SplitEft;
  spec.split_k = 0;
  for (RoundingMode o2 : kAllModes)
    for (RoundingMode o3 : kAllModes) spec.triples.push_back({RoundingMode::RO, o2, o3});
  SweepReport rep = sweep_split(spec);
  CHECK(rep.violations_total == 0);
  CHECK(rep.pairs_condition_true == rep.pairs_total);
  CHECK(rep.control_failures_total > 0);
  CHECK(rep.control_witness_checked);
  CHECK(rep.control_witness_found);

  bool control_has_witness_pair = false;
  for (const Json& v : rep.control_failures)
    if (v.value("sigma", "") == "1" && v.value("x", "") == "1/256") control_has_witness_pair = true;
  CHECK(control_has_witness_pair);
}

TEST_CASE("split sweep validates its inputs") {
  SweepSpec spec{FormatConfig(4, -10, 10)};
  spec.target = SweepTarget::SplitEft;
  spec.triples = {{RoundingMode::RO, RoundingMode::RO, RoundingMode::RO}};
  SUBCASE("k below 2 omega") {
    spec.split_k = -13;
    CHECK_THROWS_AS(sweep_split(spec), std::invalid_argument);
  }
  SUBCASE("k beyond emax") {
    spec.split_k = 11;
    CHECK_THROWS_AS(sweep_split(spec), std::invalid_argument);
  }
  SUBCASE("first step must be round-to-odd") {
    spec.split_k = 0;
    spec.triples = {{RoundingMode::RZ, RoundingMode::RO, RoundingMode::RO}};
    CHECK_THROWS_AS(sweep_split(spec), std::invalid_argument);
  }
  SUBCASE("missing k") {
    CHECK_THROWS_AS(sweep_split(spec), std::invalid_argument);
  }
}

TEST_CASE("double-round sweep validates the wide format") {
  SweepSpec spec{FormatConfig(3, -6, 6)};
  spec.target = SweepTarget::DoubleRound;
  spec.wide_fmt = FormatConfig(7, -24, 20);
  spec.dr_mant_bits = 4;
  spec.dr_qmin = -4;
  spec.dr_qmax = 0;
  CHECK_THROWS_AS(sweep_double_round(spec), std::invalid_argument);
  spec.wide_fmt = FormatConfig(8, -24, 20);
  SweepReport rep = sweep_double_round(spec);
  CHECK(rep.violations_total == 0);
  CHECK(rep.pairs_total == 31u * 5u);
}
