#include "eftlab/sweep.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace eftlab {

const char* target_name(SweepTarget target) {
  switch (target) {
    case SweepTarget::DeltaInF: return "delta-in-f";
    case SweepTarget::FtsEft: return "fts-eft";
    case SweepTarget::SplitEft: return "split-eft";
    case SweepTarget::DoubleRound: return "double-round";
  }
  return "?";
}

std::optional<SweepTarget> parse_target(std::string_view name) {
  for (SweepTarget t : {SweepTarget::DeltaInF, SweepTarget::FtsEft, SweepTarget::SplitEft,
                        SweepTarget::DoubleRound})
    if (name == target_name(t)) return t;
  return std::nullopt;
}

std::vector<ModeTriple> uniform_triples() {
  std::vector<ModeTriple> out;
  for (RoundingMode m : kAllModes) out.push_back({m, m, m});
  return out;
}

std::vector<ModeTriple> mixed_triples() {
  std::vector<ModeTriple> out;
  for (RoundingMode o1 : kAllModes)
    for (RoundingMode o2 : kAllModes)
      for (RoundingMode o3 : kAllModes) out.push_back({o1, o2, o3});
  return out;
}

std::vector<ModeTriple> adversarial_triples(std::optional<RoundingMode> fixed_o1) {
  const RoundingMode dirs[] = {RoundingMode::RD, RoundingMode::RU};
  std::vector<ModeTriple> out;
  if (fixed_o1) {
    for (RoundingMode o2 : dirs)
      for (RoundingMode o3 : dirs) out.push_back({*fixed_o1, o2, o3});
  } else {
    for (RoundingMode o1 : dirs)
      for (RoundingMode o2 : dirs)
        for (RoundingMode o3 : dirs) out.push_back({o1, o2, o3});
  }
  return out;
}

std::uint64_t default_pair_budget() {
  if (const char* env = std::getenv("EFTLAB_PAIR_BUDGET")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
  }
  return 1'000'000'000ULL;
}

namespace {

constexpr const char* kReportSchema = "eftlab-report/1";

enum class PairFilter { None, SumLeOmega, SumGtOmega };

PairFilter parse_filter(const std::optional<std::string>& name) {
  if (!name) return PairFilter::None;
  if (*name == "abs_sum_le_omega") return PairFilter::SumLeOmega;
  if (*name == "abs_sum_gt_omega") return PairFilter::SumGtOmega;
  throw std::invalid_argument("sweep: unknown pair filter '" + *name + "'");
}

std::uint64_t effective_budget(const SweepSpec& spec) {
  return spec.pair_budget ? spec.pair_budget : default_pair_budget();
}

void check_budget(const BigInt& space, const SweepSpec& spec) {
  std::uint64_t budget = effective_budget(spec);
  if (space > budget) {
    std::ostringstream msg;
    msg << "sweep: operand space of " << space << " exceeds the pair budget of " << budget
        << "; use a smaller format or raise the budget (--pair-budget / EFTLAB_PAIR_BUDGET)";
    throw BudgetExceeded(msg.str());
  }
}

std::vector<ModeTriple> effective_triples(const SweepSpec& spec) {
  std::vector<ModeTriple> out = spec.triples;
  if (spec.adversarial_fr)
    for (const ModeTriple& t : adversarial_triples(spec.adversarial_fixed_o1)) out.push_back(t);
  std::vector<ModeTriple> dedup;
  for (const ModeTriple& t : out)
    if (std::find(dedup.begin(), dedup.end(), t) == dedup.end()) dedup.push_back(t);
  return dedup;
}

struct Partial {
  std::uint64_t pairs_total = 0;
  std::uint64_t pairs_condition_true = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t violations_total = 0;
  std::uint64_t overflow_total = 0;
  std::uint64_t gap = 0;
  std::vector<Json> violations;

  void merge(Partial&& other, std::uint64_t cap) {
    pairs_total += other.pairs_total;
    pairs_condition_true += other.pairs_condition_true;
    evaluations += other.evaluations;
    violations_total += other.violations_total;
    overflow_total += other.overflow_total;
    gap += other.gap;
    for (auto& v : other.violations) {
      if (violations.size() >= cap) break;
      violations.push_back(std::move(v));
    }
  }
};

// Runs fn over [0, items) in jobs contiguous chunks and merges the partial
// results in chunk order, which keeps reports identical for any worker
// count.
template <typename Fn>
Partial run_partitioned(std::uint64_t items, const SweepSpec& spec, Fn fn) {
  int jobs = std::max(1, spec.jobs);
  if (jobs == 1 || items < 2) return fn(0, items);

  std::uint64_t chunk = (items + jobs - 1) / jobs;
  std::vector<Partial> parts(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  for (int w = 0; w < jobs; ++w) {
    std::uint64_t lo = std::min(items, w * chunk);
    std::uint64_t hi = std::min(items, lo + chunk);
    threads.emplace_back([&, w, lo, hi] { parts[static_cast<std::size_t>(w)] = fn(lo, hi); });
  }
  for (auto& t : threads) t.join();

  Partial merged;
  for (auto& p : parts) merged.merge(std::move(p), spec.max_violations);
  return merged;
}

Json spec_to_json(const SweepSpec& spec) {
  Json j;
  j["fmt"] = spec.fmt.id();
  j["target"] = target_name(spec.target);
  j["condition"] = spec.condition ? condition_name(*spec.condition) : "none";
  if (spec.pair_filter)
    j["pair_filter"] = *spec.pair_filter;
  else
    j["pair_filter"] = nullptr;
  switch (spec.target) {
    case SweepTarget::DeltaInF: {
      Json modes = Json::array();
      for (RoundingMode m : spec.modes) modes.push_back(mode_name(m));
      j["modes"] = modes;
      break;
    }
    case SweepTarget::FtsEft:
    case SweepTarget::SplitEft: {
      Json triples = Json::array();
      for (const ModeTriple& t : spec.triples)
        triples.push_back({mode_name(t.o1), mode_name(t.o2), mode_name(t.o3)});
      j["triples"] = triples;
      j["adversarial_fr"] = spec.adversarial_fr;
      j["adversarial_fixed_o1"] =
          spec.adversarial_fixed_o1 ? Json(mode_name(*spec.adversarial_fixed_o1)) : Json(nullptr);
      if (spec.target == SweepTarget::SplitEft) {
        j["split_k"] = spec.split_k ? Json(*spec.split_k) : Json(nullptr);
        j["split_control"] = spec.split_control;
      }
      break;
    }
    case SweepTarget::DoubleRound:
      j["wide_fmt"] = spec.wide_fmt ? Json(spec.wide_fmt->id()) : Json(nullptr);
      j["mant_bits"] = spec.dr_mant_bits;
      j["qmin"] = spec.dr_qmin;
      j["qmax"] = spec.dr_qmax;
      break;
  }
  j["max_violations"] = spec.max_violations;
  return j;
}

struct Table {
  FormatConfig fmt;
  std::vector<Fp> floats;
  std::vector<Dyadic> values;

  explicit Table(const FormatConfig& f) : fmt(f), floats(enumerate_format(f)) {
    values.reserve(floats.size());
    for (const Fp& x : floats) values.push_back(x.value(f));
  }
};

std::string fp_str(const Fp& x, const FormatConfig& fmt) { return x.str(fmt); }

bool filter_keeps(PairFilter filter, const Dyadic& sum, const Dyadic& omega_cap) {
  switch (filter) {
    case PairFilter::None: return true;
    case PairFilter::SumLeOmega: return sum.abs() <= omega_cap;
    case PairFilter::SumGtOmega: return sum.abs() > omega_cap;
  }
  return true;
}

SweepReport finish_report(const SweepSpec& spec, Partial&& part,
                          std::chrono::steady_clock::time_point start) {
  SweepReport rep;
  rep.spec_echo = spec_to_json(spec);
  rep.pairs_total = part.pairs_total;
  rep.pairs_condition_true = part.pairs_condition_true;
  rep.evaluations = part.evaluations;
  rep.violations_total = part.violations_total;
  rep.overflow_total = part.overflow_total;
  rep.guarantee_holds_outside_condition = part.gap;
  rep.violations = std::move(part.violations);
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

}  // namespace

SweepReport sweep_delta(const SweepSpec& spec) {
  if (spec.target != SweepTarget::DeltaInF)
    throw std::invalid_argument("sweep_delta: spec target mismatch");
  if (spec.modes.empty()) throw std::invalid_argument("sweep_delta: no modes given");
  auto start = std::chrono::steady_clock::now();

  BigInt card = format_cardinality(spec.fmt);
  check_budget(card * card, spec);
  Table table(spec.fmt);
  std::uint64_t n = table.floats.size();
  PairFilter filter = parse_filter(spec.pair_filter);
  Dyadic omega_cap = spec.fmt.max_finite();
  bool posthoc = spec.condition == ConditionId::PriorLinnainmaaH;

  Partial part = run_partitioned(n * n, spec, [&](std::uint64_t lo, std::uint64_t hi) {
    Partial p;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::size_t i = static_cast<std::size_t>(idx / n), j = static_cast<std::size_t>(idx % n);
      const Fp& a = table.floats[i];
      const Fp& b = table.floats[j];
      Dyadic sum = table.values[i] + table.values[j];
      if (!filter_keeps(filter, sum, omega_cap)) continue;
      ++p.pairs_total;

      bool cond_pair = true;
      if (spec.condition && !posthoc) cond_pair = check(*spec.condition, a, b, spec.fmt);
      if (!posthoc && cond_pair) ++p.pairs_condition_true;

      for (RoundingMode mode : spec.modes) {
        ++p.evaluations;
        Fp x = round(sum, mode, spec.fmt);
        if (x.is_inf()) {
          ++p.overflow_total;
          continue;
        }
        bool cond = cond_pair;
        if (posthoc) {
          cond = check(*spec.condition, a, b, spec.fmt, x);
          if (cond) ++p.pairs_condition_true;
        }
        Dyadic delta = sum - x.value(spec.fmt);
        bool in_f = in_format(delta, spec.fmt);
        if (cond && !in_f) {
          ++p.violations_total;
          if (p.violations.size() < spec.max_violations) {
            Json rec;
            rec["a"] = fp_str(a, spec.fmt);
            rec["b"] = fp_str(b, spec.fmt);
            rec["mode"] = mode_name(mode);
            rec["x"] = fp_str(x, spec.fmt);
            rec["delta"] = delta.str();
            rec["in_format"] = false;
            p.violations.push_back(std::move(rec));
          }
        } else if (!cond && in_f) {
          ++p.gap;
        }
      }
    }
    return p;
  });

  return finish_report(spec, std::move(part), start);
}

SweepReport sweep_fts(const SweepSpec& spec) {
  if (spec.target != SweepTarget::FtsEft)
    throw std::invalid_argument("sweep_fts: spec target mismatch");
  std::vector<ModeTriple> triples = effective_triples(spec);
  if (triples.empty()) throw std::invalid_argument("sweep_fts: no mode triples given");
  auto start = std::chrono::steady_clock::now();

  BigInt card = format_cardinality(spec.fmt);
  check_budget(card * card, spec);
  Table table(spec.fmt);
  std::uint64_t n = table.floats.size();
  PairFilter filter = parse_filter(spec.pair_filter);
  Dyadic omega_cap = spec.fmt.max_finite();
  bool posthoc = spec.condition == ConditionId::PriorLinnainmaaH;

  Partial part = run_partitioned(n * n, spec, [&](std::uint64_t lo, std::uint64_t hi) {
    Partial p;
    // Step results shared across triples: x depends only on o1 and z only
    // on (o1, o2).
    std::array<std::optional<Fp>, 6> x_cache;
    std::array<std::optional<Fp>, 36> z_cache;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::size_t i = static_cast<std::size_t>(idx / n), j = static_cast<std::size_t>(idx % n);
      const Fp& a = table.floats[i];
      const Fp& b = table.floats[j];
      const Dyadic& va = table.values[i];
      const Dyadic& vb = table.values[j];
      Dyadic sum = va + vb;
      if (!filter_keeps(filter, sum, omega_cap)) continue;
      ++p.pairs_total;
      x_cache.fill(std::nullopt);
      z_cache.fill(std::nullopt);

      bool cond_pair = true;
      if (spec.condition && !posthoc) cond_pair = check(*spec.condition, a, b, spec.fmt);
      if (!posthoc && cond_pair) ++p.pairs_condition_true;

      for (const ModeTriple& t : triples) {
        ++p.evaluations;
        int i1 = static_cast<int>(t.o1), i2 = static_cast<int>(t.o2);
        if (!x_cache[i1]) x_cache[i1] = round(sum, t.o1, spec.fmt);
        const Fp& x = *x_cache[i1];
        bool cond = cond_pair;
        if (posthoc) {
          cond = x.is_finite() && check(*spec.condition, a, b, spec.fmt, x);
          if (cond) ++p.pairs_condition_true;
        }
        if (x.is_inf()) {
          ++p.overflow_total;
          continue;
        }
        if (!z_cache[i1 * 6 + i2])
          z_cache[i1 * 6 + i2] = round(x.value(spec.fmt) - va, t.o2, spec.fmt);
        const Fp& z = *z_cache[i1 * 6 + i2];
        if (z.is_inf()) {
          ++p.overflow_total;
          continue;
        }
        Fp y = round(vb - z.value(spec.fmt), t.o3, spec.fmt);
        if (y.is_inf()) {
          ++p.overflow_total;
          continue;
        }
        bool eft = (x.value(spec.fmt) + y.value(spec.fmt)) == sum;
        if (cond && !eft) {
          ++p.violations_total;
          if (p.violations.size() < spec.max_violations) {
            Json rec;
            rec["a"] = fp_str(a, spec.fmt);
            rec["b"] = fp_str(b, spec.fmt);
            rec["modes"] = {mode_name(t.o1), mode_name(t.o2), mode_name(t.o3)};
            rec["x"] = fp_str(x, spec.fmt);
            rec["z"] = fp_str(z, spec.fmt);
            rec["y"] = fp_str(y, spec.fmt);
            rec["delta"] = (sum - x.value(spec.fmt)).str();
            rec["eft"] = false;
            p.violations.push_back(std::move(rec));
          }
        } else if (!cond && eft) {
          ++p.gap;
        }
      }
    }
    return p;
  });

  return finish_report(spec, std::move(part), start);
}

namespace {

Json split_record(const SplitTrace& t, const ModeTriple& modes, const FormatConfig& fmt) {
  Json rec;
  rec["sigma"] = t.sigma.str(fmt);
  rec["x"] = t.x.str(fmt);
  rec["modes"] = {mode_name(modes.o1), mode_name(modes.o2), mode_name(modes.o3)};
  rec["s"] = t.s.str(fmt);
  rec["x_h"] = t.x_h.str(fmt);
  rec["x_l"] = t.x_l.str(fmt);
  rec["exact_split"] = t.exact_split;
  rec["grid_ok"] = t.grid_ok;
  rec["overflow"] = t.overflow;
  return rec;
}

}  // namespace

SweepReport sweep_split(const SweepSpec& spec) {
  if (spec.target != SweepTarget::SplitEft)
    throw std::invalid_argument("sweep_split: spec target mismatch");
  if (!spec.split_k) throw std::invalid_argument("sweep_split: anchor exponent k not set");
  int k = *spec.split_k;
  const FormatConfig& fmt = spec.fmt;
  if (k < fmt.emin - fmt.precision + 2 || k > fmt.emax)
    throw std::invalid_argument("sweep_split: k out of range; need 2^k >= 2*omega and 2^k in F");

  std::vector<ModeTriple> triples = effective_triples(spec);
  if (triples.empty()) throw std::invalid_argument("sweep_split: no mode triples given");
  for (const ModeTriple& t : triples)
    if (t.o1 != RoundingMode::RO)
      throw std::invalid_argument("sweep_split: the first step must round to odd");
  auto start = std::chrono::steady_clock::now();

  Table table(fmt);
  Dyadic anchor = Dyadic::pow2(k);
  Fp anchor_fp = *to_fp_exact(anchor, fmt);
  Fp sigma = succ(anchor_fp, fmt);  // 2^k + ulp(2^k)

  std::vector<std::size_t> xs;
  for (std::size_t i = 0; i < table.floats.size(); ++i)
    if (table.values[i].abs() <= anchor) xs.push_back(i);
  check_budget(BigInt(xs.size()), spec);

  Partial part = run_partitioned(xs.size(), spec, [&](std::uint64_t lo, std::uint64_t hi) {
    Partial p;
    for (std::uint64_t ii = lo; ii < hi; ++ii) {
      const Fp& x = table.floats[xs[static_cast<std::size_t>(ii)]];
      ++p.pairs_total;
      if (check(ConditionId::TheoremExtractScalar, sigma, x, fmt)) ++p.pairs_condition_true;
      for (const ModeTriple& t : triples) {
        ++p.evaluations;
        SplitTrace trace = extract_scalar(sigma, x, t, fmt);
        if (trace.overflow) {
          ++p.overflow_total;
          continue;
        }
        if (!(trace.exact_split && trace.grid_ok)) {
          ++p.violations_total;
          if (p.violations.size() < spec.max_violations)
            p.violations.push_back(split_record(trace, t, fmt));
        }
      }
    }
    return p;
  });

  SweepReport rep = finish_report(spec, std::move(part), start);

  if (spec.split_control) {
    // Control: the plain power-of-two anchor sigma = 2^k, under the
    // all-odd triple, is expected to fail somewhere once x = 2^(k-2p)
    // is representable.
    ModeTriple odd{RoundingMode::RO, RoundingMode::RO, RoundingMode::RO};
    for (std::size_t i : xs) {
      SplitTrace trace = extract_scalar(anchor_fp, table.floats[i], odd, fmt);
      if (trace.overflow) continue;
      if (!(trace.exact_split && trace.grid_ok)) {
        ++rep.control_failures_total;
        if (rep.control_failures.size() < spec.max_violations)
          rep.control_failures.push_back(split_record(trace, odd, fmt));
      }
    }
    Dyadic x_witness = Dyadic::pow2(static_cast<std::int64_t>(k) - 2 * fmt.precision);
    if (auto xp = to_fp_exact(x_witness, fmt)) {
      rep.control_witness_checked = true;
      SplitTrace trace = extract_scalar(anchor_fp, *xp, odd, fmt);
      rep.control_witness_found =
          !trace.overflow && !(trace.exact_split && trace.grid_ok);
    }
  }
  return rep;
}

SweepReport sweep_split(SweepSpec spec, int k) {
  spec.split_k = k;
  return sweep_split(spec);
}

SweepReport sweep_double_round(const SweepSpec& spec) {
  if (spec.target != SweepTarget::DoubleRound)
    throw std::invalid_argument("sweep_double_round: spec target mismatch");
  if (!spec.wide_fmt) throw std::invalid_argument("sweep_double_round: wide format not set");
  if (spec.dr_mant_bits < 1 || spec.dr_mant_bits > 62)
    throw std::invalid_argument("sweep_double_round: mant_bits out of range");
  if (spec.dr_qmax < spec.dr_qmin)
    throw std::invalid_argument("sweep_double_round: empty exponent range");
  auto start = std::chrono::steady_clock::now();

  const FormatConfig& narrow = spec.fmt;
  const FormatConfig& wide = *spec.wide_fmt;
  std::int64_t mant_hi = (std::int64_t{1} << spec.dr_mant_bits) - 1;
  std::uint64_t mant_count = static_cast<std::uint64_t>(2 * mant_hi + 1);
  std::uint64_t q_count = static_cast<std::uint64_t>(spec.dr_qmax - spec.dr_qmin + 1);
  check_budget(BigInt(mant_count) * q_count, spec);

  Partial part =
      run_partitioned(mant_count * q_count, spec, [&](std::uint64_t lo, std::uint64_t hi) {
        Partial p;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          std::int64_t q = spec.dr_qmin + static_cast<std::int64_t>(idx / mant_count);
          std::int64_t m = static_cast<std::int64_t>(idx % mant_count) - mant_hi;
          Dyadic r(BigInt(m), q);
          ++p.pairs_total;
          ++p.pairs_condition_true;
          ++p.evaluations;
          Fp doubled = double_round_ro(r, wide, narrow);
          Fp direct = round(r, RoundingMode::RNE, narrow);
          if (!(doubled == direct)) {
            ++p.violations_total;
            if (p.violations.size() < spec.max_violations) {
              Json rec;
              rec["r"] = r.str();
              rec["via_wide"] = doubled.str(narrow);
              rec["direct"] = direct.str(narrow);
              p.violations.push_back(std::move(rec));
            }
          }
        }
        return p;
      });

  return finish_report(spec, std::move(part), start);
}

SweepReport run_sweep(const SweepSpec& spec) {
  switch (spec.target) {
    case SweepTarget::DeltaInF: return sweep_delta(spec);
    case SweepTarget::FtsEft: return sweep_fts(spec);
    case SweepTarget::SplitEft: return sweep_split(spec);
    case SweepTarget::DoubleRound: return sweep_double_round(spec);
  }
  throw std::logic_error("run_sweep: unreachable");
}

Json report_to_json(const SweepReport& report) {
  Json j;
  j["schema"] = kReportSchema;
  j["spec"] = report.spec_echo;
  j["pairs_total"] = report.pairs_total;
  j["pairs_condition_true"] = report.pairs_condition_true;
  j["evaluations"] = report.evaluations;
  j["violations_total"] = report.violations_total;
  j["overflow_total"] = report.overflow_total;
  j["guarantee_holds_outside_condition"] = report.guarantee_holds_outside_condition;
  j["violations"] = report.violations;
  if (report.spec_echo.contains("target") && report.spec_echo["target"] == "split-eft") {
    j["control_failures_total"] = report.control_failures_total;
    j["control_witness_checked"] = report.control_witness_checked;
    j["control_witness_found"] = report.control_witness_found;
    j["control_failures"] = report.control_failures;
  }
  j["wall_ms"] = report.wall_ms;
  return j;
}

SweepReport report_from_json(const Json& j) {
  if (!j.contains("schema") || j["schema"] != kReportSchema)
    throw std::invalid_argument("report_from_json: unknown schema");
  SweepReport rep;
  rep.spec_echo = j.at("spec");
  rep.pairs_total = j.at("pairs_total").get<std::uint64_t>();
  rep.pairs_condition_true = j.at("pairs_condition_true").get<std::uint64_t>();
  rep.evaluations = j.at("evaluations").get<std::uint64_t>();
  rep.violations_total = j.at("violations_total").get<std::uint64_t>();
  rep.overflow_total = j.at("overflow_total").get<std::uint64_t>();
  rep.guarantee_holds_outside_condition =
      j.at("guarantee_holds_outside_condition").get<std::uint64_t>();
  rep.violations = j.at("violations").get<std::vector<Json>>();
  if (j.contains("control_failures_total")) {
    rep.control_failures_total = j["control_failures_total"].get<std::uint64_t>();
    rep.control_witness_checked = j["control_witness_checked"].get<bool>();
    rep.control_witness_found = j["control_witness_found"].get<bool>();
    rep.control_failures = j["control_failures"].get<std::vector<Json>>();
  }
  rep.wall_ms = j.at("wall_ms").get<double>();
  return rep;
}

namespace {

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << fields[i];
  }
  os << '\n';
}

void emit_csv(const SweepReport& report, std::ostream& os) {
  std::string target = report.spec_echo.value("target", "");
  auto str = [](const Json& rec, const char* key) { return rec.value(key, std::string()); };
  auto modes = [](const Json& rec, int i) {
    return rec.contains("modes") ? rec["modes"][i].get<std::string>() : std::string();
  };
  if (target == "delta-in-f") {
    csv_row(os, {"a", "b", "mode", "x", "delta"});
    for (const Json& v : report.violations)
      csv_row(os, {str(v, "a"), str(v, "b"), str(v, "mode"), str(v, "x"), str(v, "delta")});
  } else if (target == "fts-eft") {
    csv_row(os, {"a", "b", "o1", "o2", "o3", "x", "z", "y", "delta"});
    for (const Json& v : report.violations)
      csv_row(os, {str(v, "a"), str(v, "b"), modes(v, 0), modes(v, 1), modes(v, 2), str(v, "x"),
                   str(v, "z"), str(v, "y"), str(v, "delta")});
  } else if (target == "split-eft") {
    csv_row(os, {"sigma", "x", "o1", "o2", "o3", "s", "x_h", "x_l", "exact_split", "grid_ok"});
    for (const Json& v : report.violations)
      csv_row(os, {str(v, "sigma"), str(v, "x"), modes(v, 0), modes(v, 1), modes(v, 2),
                   str(v, "s"), str(v, "x_h"), str(v, "x_l"),
                   v.value("exact_split", false) ? "true" : "false",
                   v.value("grid_ok", false) ? "true" : "false"});
  } else if (target == "double-round") {
    csv_row(os, {"r", "via_wide", "direct"});
    for (const Json& v : report.violations)
      csv_row(os, {str(v, "r"), str(v, "via_wide"), str(v, "direct")});
  } else {
    throw std::invalid_argument("emit_report: unknown target in report");
  }
}

}  // namespace

void emit_report(const SweepReport& report, ReportFormat format, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("emit_report: cannot open '" + path + "' for writing");
  if (format == ReportFormat::Json) {
    os << report_to_json(report).dump(2) << '\n';
  } else {
    emit_csv(report, os);
  }
  os.flush();
  if (!os) throw std::runtime_error("emit_report: write to '" + path + "' failed");
}

SweepReport parse_report(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("parse_report: cannot open '" + path + "'");
  Json j = Json::parse(is, nullptr, true);
  return report_from_json(j);
}

bool reports_equivalent(const SweepReport& lhs, const SweepReport& rhs) {
  Json a = report_to_json(lhs);
  Json b = report_to_json(rhs);
  a.erase("wall_ms");
  b.erase("wall_ms");
  return a == b;
}

}  // namespace eftlab
