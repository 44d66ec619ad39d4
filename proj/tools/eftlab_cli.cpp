// Command-line front end: round, fts, extract, check, sweep.
//
// Exit codes: 0 on success (and clean sweeps), 1 when a sweep found
// violations, 2 for usage or configuration errors.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eftlab/sweep.hpp"

namespace {

using namespace eftlab;

FormatConfig parse_fmt_or_throw(const std::string& text) {
  auto fmt = FormatConfig::parse(text);
  if (!fmt) throw CLI::ValidationError("--fmt", "expected p,emin,emax with p >= 2, got '" + text + "'");
  return *fmt;
}

Dyadic parse_lit_or_throw(const std::string& flag, const std::string& text) {
  auto d = Dyadic::parse(text);
  if (!d)
    throw CLI::ValidationError(
        flag, "expected a dyadic literal like 16, -9*2^1 or 1/16, got '" + text + "'");
  return *d;
}

Fp parse_fp_or_throw(const std::string& flag, const std::string& text, const FormatConfig& fmt) {
  Dyadic d = parse_lit_or_throw(flag, text);
  auto x = to_fp_exact(d, fmt);
  if (!x)
    throw CLI::ValidationError(flag, "'" + text + "' is not a member of F(" + fmt.id() + ")");
  return *x;
}

RoundingMode parse_mode_or_throw(const std::string& flag, const std::string& text) {
  auto m = parse_mode(text);
  if (!m) throw CLI::ValidationError(flag, "unknown rounding mode '" + text + "'");
  return *m;
}

ModeTriple parse_triple_or_throw(const std::string& flag, const std::string& text) {
  std::array<RoundingMode, 3> modes{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t next = i < 2 ? text.find(',', pos) : text.size();
    if (next == std::string::npos)
      throw CLI::ValidationError(flag, "expected o1,o2,o3 but got '" + text + "'");
    modes[i] = parse_mode_or_throw(flag, text.substr(pos, next - pos));
    pos = next + 1;
  }
  return {modes[0], modes[1], modes[2]};
}

Json fp_json(const Fp& x, const FormatConfig& fmt) {
  Json j;
  j["lit"] = x.str(fmt);
  if (x.is_finite()) {
    j["M"] = x.significand().str();
    j["E"] = x.exponent();
  }
  return j;
}

int run_round(const std::string& fmt_text, const std::string& mode_text,
              const std::string& r_text) {
  FormatConfig fmt = parse_fmt_or_throw(fmt_text);
  RoundingMode mode = parse_mode_or_throw("--mode", mode_text);
  Dyadic r = parse_lit_or_throw("--r", r_text);
  Fp x = round(r, mode, fmt);
  Json out;
  out["schema"] = "eftlab-round/1";
  out["fmt"] = fmt.id();
  out["mode"] = mode_name(mode);
  out["r"] = r.str();
  out["result"] = fp_json(x, fmt);
  out["faithful"] = is_faithful_result(r, x, fmt);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_fts(const std::string& fmt_text, const std::string& modes_text, const std::string& a_text,
            const std::string& b_text) {
  FormatConfig fmt = parse_fmt_or_throw(fmt_text);
  ModeTriple modes = parse_triple_or_throw("--modes", modes_text);
  Fp a = parse_fp_or_throw("--a", a_text, fmt);
  Fp b = parse_fp_or_throw("--b", b_text, fmt);
  FtsTrace t = fast_two_sum(a, b, modes, fmt);
  Json out;
  out["schema"] = "eftlab-trace/1";
  out["kind"] = "fts";
  out["fmt"] = fmt.id();
  out["modes"] = {mode_name(modes.o1), mode_name(modes.o2), mode_name(modes.o3)};
  out["a"] = fp_json(t.a, fmt);
  out["b"] = fp_json(t.b, fmt);
  out["x"] = fp_json(t.x, fmt);
  out["z"] = fp_json(t.z, fmt);
  out["y"] = fp_json(t.y, fmt);
  out["delta"] = t.delta ? Json(t.delta->str()) : Json(nullptr);
  out["eft"] = t.eft;
  out["overflow"] = t.overflow;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_extract(const std::string& fmt_text, const std::string& modes_text,
                const std::string& sigma_text, const std::string& x_text) {
  FormatConfig fmt = parse_fmt_or_throw(fmt_text);
  ModeTriple modes = parse_triple_or_throw("--modes", modes_text);
  Fp sigma = parse_fp_or_throw("--sigma", sigma_text, fmt);
  Fp x = parse_fp_or_throw("--x", x_text, fmt);
  SplitTrace t = extract_scalar(sigma, x, modes, fmt);
  Json out;
  out["schema"] = "eftlab-trace/1";
  out["kind"] = "extract";
  out["fmt"] = fmt.id();
  out["modes"] = {mode_name(modes.o1), mode_name(modes.o2), mode_name(modes.o3)};
  out["sigma"] = fp_json(t.sigma, fmt);
  out["x"] = fp_json(t.x, fmt);
  out["s"] = fp_json(t.s, fmt);
  out["x_h"] = fp_json(t.x_h, fmt);
  out["x_l"] = fp_json(t.x_l, fmt);
  out["exact_split"] = t.exact_split;
  out["grid_ok"] = t.grid_ok;
  out["overflow"] = t.overflow;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_check(const std::string& fmt_text, const std::string& cond_text, const std::string& a_text,
              const std::string& b_text, const std::string& x_text) {
  FormatConfig fmt = parse_fmt_or_throw(fmt_text);
  auto cond = parse_condition(cond_text);
  if (!cond) throw CLI::ValidationError("--cond", "unknown condition '" + cond_text + "'");
  Fp a = parse_fp_or_throw("--a", a_text, fmt);
  Fp b = parse_fp_or_throw("--b", b_text, fmt);
  std::optional<Fp> extra;
  if (!x_text.empty()) extra = parse_fp_or_throw("--x", x_text, fmt);
  ConditionBreakdown breakdown = check_detailed(*cond, a, b, fmt, extra);

  std::cout << (breakdown.satisfied ? "true" : "false") << '\n';
  Json out;
  out["schema"] = "eftlab-check/1";
  out["fmt"] = fmt.id();
  out["condition"] = condition_name(*cond);
  out["a"] = a.str(fmt);
  out["b"] = b.str(fmt);
  if (extra) out["x"] = extra->str(fmt);
  out["satisfied"] = breakdown.satisfied;
  Json cj;
  for (const auto& [name, value] : breakdown.conjuncts) cj[name] = value;
  out["conjuncts"] = cj;
  switch (guarantee_class(*cond)) {
    case GuaranteeClass::DeltaInF: out["guarantee"] = "delta-in-f"; break;
    case GuaranteeClass::Eft: out["guarantee"] = "eft"; break;
    case GuaranteeClass::SplitEft: out["guarantee"] = "split-eft"; break;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct SweepCliArgs {
  std::string fmt;
  std::string target = "delta-in-f";
  std::string cond = "none";
  std::string modes;
  std::string filter;
  int split_k = 0;
  bool has_split_k = false;
  bool no_control = false;
  std::string wide_fmt;
  int mant_bits = 10;
  int qmin = -20;
  int qmax = 6;
  std::string out_path;
  std::string out_format = "json";
  std::uint64_t max_violations = 100;
  bool adversarial = false;
  int jobs = 1;
  std::uint64_t pair_budget = 0;
};

void fill_modes(SweepSpec& spec, const std::string& modes_text) {
  std::string text = modes_text;
  if (spec.target == SweepTarget::DeltaInF) {
    if (text.empty() || text == "all") {
      spec.modes.assign(std::begin(kAllModes), std::end(kAllModes));
      return;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      spec.modes.push_back(parse_mode_or_throw("--modes", text.substr(pos, next - pos)));
      pos = next + 1;
      if (next == text.size()) break;
    }
    return;
  }

  bool split = spec.target == SweepTarget::SplitEft;
  if (text.empty()) text = split ? "mixed" : "uniform";
  if (text == "uniform") {
    if (split) {
      spec.triples = {{RoundingMode::RO, RoundingMode::RO, RoundingMode::RO}};
    } else {
      spec.triples = uniform_triples();
    }
    return;
  }
  if (text == "mixed") {
    if (split) {
      // The split theorem pins the first step to round-to-odd; "mixed"
      // spans the 36 (o2, o3) pairs.
      for (RoundingMode o2 : kAllModes)
        for (RoundingMode o3 : kAllModes) spec.triples.push_back({RoundingMode::RO, o2, o3});
    } else {
      spec.triples = mixed_triples();
    }
    return;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(';', pos);
    if (next == std::string::npos) next = text.size();
    spec.triples.push_back(parse_triple_or_throw("--modes", text.substr(pos, next - pos)));
    pos = next + 1;
    if (next == text.size()) break;
  }
}

int run_sweep_cli(const SweepCliArgs& args) {
  SweepSpec spec(parse_fmt_or_throw(args.fmt));
  auto target = parse_target(args.target);
  if (!target) throw CLI::ValidationError("--target", "unknown target '" + args.target + "'");
  spec.target = *target;
  if (args.cond != "none") {
    auto cond = parse_condition(args.cond);
    if (!cond) throw CLI::ValidationError("--cond", "unknown condition '" + args.cond + "'");
    spec.condition = cond;
  }
  fill_modes(spec, args.modes);
  if (!args.filter.empty()) spec.pair_filter = args.filter;
  if (args.has_split_k) spec.split_k = args.split_k;
  spec.split_control = !args.no_control;
  if (!args.wide_fmt.empty()) spec.wide_fmt = parse_fmt_or_throw(args.wide_fmt);
  spec.dr_mant_bits = args.mant_bits;
  spec.dr_qmin = args.qmin;
  spec.dr_qmax = args.qmax;
  spec.max_violations = args.max_violations;
  spec.adversarial_fr = args.adversarial;
  if (args.adversarial && spec.target == SweepTarget::SplitEft)
    spec.adversarial_fixed_o1 = RoundingMode::RO;
  // Conditions whose guarantee fixes the first rounding to odd: the
  // adversarial expansion then only ranges over the free steps.
  if (args.adversarial && spec.target == SweepTarget::FtsEft &&
      (spec.condition == ConditionId::TheoremRto1 ||
       spec.condition == ConditionId::PriorLinnainmaaParity))
    spec.adversarial_fixed_o1 = RoundingMode::RO;
  spec.jobs = args.jobs;
  spec.pair_budget = args.pair_budget;

  SweepReport report = run_sweep(spec);

  std::cout << "target:           " << target_name(spec.target) << '\n'
            << "fmt:              " << spec.fmt.id() << '\n'
            << "condition:        " << (spec.condition ? condition_name(*spec.condition) : "none")
            << '\n'
            << "pairs:            " << report.pairs_total << '\n'
            << "condition true:   " << report.pairs_condition_true << '\n'
            << "evaluations:      " << report.evaluations << '\n'
            << "violations:       " << report.violations_total << '\n'
            << "overflow:         " << report.overflow_total << '\n'
            << "guarantee w/o cond: " << report.guarantee_holds_outside_condition << '\n';
  if (spec.target == SweepTarget::SplitEft) {
    std::cout << "control failures: " << report.control_failures_total << '\n';
    if (report.control_witness_checked)
      std::cout << "control witness:   "
                << (report.control_witness_found ? "failed as expected" : "missing!")
                << '\n';
  }
  std::cout << "wall ms:          " << report.wall_ms << '\n';

  if (!args.out_path.empty()) {
    ReportFormat rf = args.out_format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
    emit_report(report, rf, args.out_path);
    std::cout << "report:           " << args.out_path << '\n';
  }
  return report.violations_total > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eftlab: a parametric floating-point laboratory for error-free "
               "transformations under faithful rounding modes"};
  app.require_subcommand(1);

  std::string fmt_text = "4,-10,10";

  auto* cmd_round = app.add_subcommand("round", "Round an exact dyadic value");
  std::string round_mode = "rne", round_value;
  cmd_round->add_option("--fmt", fmt_text, "Format p,emin,emax");
  cmd_round->add_option("--mode", round_mode, "rd|ru|rz|rne|rna|ro");
  cmd_round->add_option("--r", round_value, "Dyadic literal")->required();

  auto* cmd_fts = app.add_subcommand("fts", "Trace FastTwoSum on a pair");
  std::string fts_modes = "rne,rne,rne", fts_a, fts_b;
  cmd_fts->add_option("--fmt", fmt_text, "Format p,emin,emax");
  cmd_fts->add_option("--modes", fts_modes, "Rounding triple o1,o2,o3");
  cmd_fts->add_option("--a", fts_a, "First operand")->required();
  cmd_fts->add_option("--b", fts_b, "Second operand")->required();

  auto* cmd_extract = app.add_subcommand("extract", "Trace ExtractScalar on (sigma, x)");
  std::string ex_modes = "ro,ro,ro", ex_sigma, ex_x;
  cmd_extract->add_option("--fmt", fmt_text, "Format p,emin,emax");
  cmd_extract->add_option("--modes", ex_modes, "Rounding triple o1,o2,o3");
  cmd_extract->add_option("--sigma", ex_sigma, "Anchor")->required();
  cmd_extract->add_option("--x", ex_x, "Value to split")->required();

  auto* cmd_check = app.add_subcommand("check", "Evaluate a sufficient condition on a pair");
  std::string check_cond, check_a, check_b, check_x;
  cmd_check->add_option("--fmt", fmt_text, "Format p,emin,emax");
  cmd_check->add_option("--cond", check_cond, "Condition identifier")->required();
  cmd_check->add_option("--a", check_a, "First operand (sigma for the split condition)")
      ->required();
  cmd_check->add_option("--b", check_b, "Second operand (x for the split condition)")->required();
  cmd_check->add_option("--x", check_x, "Computed sum, for prior_linnainmaa_h");

  auto* cmd_sweep = app.add_subcommand("sweep", "Exhaustively verify a guarantee");
  SweepCliArgs sw;
  cmd_sweep->add_option("--fmt", sw.fmt, "Format p,emin,emax")->required();
  cmd_sweep->add_option("--target", sw.target, "delta-in-f|fts-eft|split-eft|double-round");
  cmd_sweep->add_option("--cond", sw.cond, "Condition identifier or 'none'");
  cmd_sweep->add_option("--modes", sw.modes,
                        "Mode list (delta), or uniform|mixed|'o1,o2,o3;...' (triples)");
  cmd_sweep->add_option("--filter", sw.filter, "abs_sum_le_omega|abs_sum_gt_omega");
  auto* opt_k = cmd_sweep->add_option("--k", sw.split_k, "Split anchor exponent: sigma = succ(2^k)");
  cmd_sweep->add_flag("--no-control", sw.no_control, "Skip the sigma = 2^k control run");
  cmd_sweep->add_option("--wide-fmt", sw.wide_fmt, "Wide format for double-round");
  cmd_sweep->add_option("--mant-bits", sw.mant_bits, "Double-round grid: |m| < 2^bits");
  cmd_sweep->add_option("--qmin", sw.qmin, "Double-round grid: smallest exponent");
  cmd_sweep->add_option("--qmax", sw.qmax, "Double-round grid: largest exponent");
  cmd_sweep->add_option("--out", sw.out_path, "Write the report here");
  cmd_sweep->add_option("--format", sw.out_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_sweep->add_option("--max-violations", sw.max_violations, "Cap on recorded traces");
  cmd_sweep->add_flag("--adversarial-fr", sw.adversarial,
                      "Also enumerate per-step RD/RU faithful choices");
  cmd_sweep->add_option("--jobs", sw.jobs, "Worker threads");
  cmd_sweep->add_option("--pair-budget", sw.pair_budget,
                        "Override the operand-space guard rail");

  try {
    app.parse(argc, argv);
    sw.has_split_k = opt_k->count() > 0;
    if (*cmd_round) return run_round(fmt_text, round_mode, round_value);
    if (*cmd_fts) return run_fts(fmt_text, fts_modes, fts_a, fts_b);
    if (*cmd_extract) return run_extract(fmt_text, ex_modes, ex_sigma, ex_x);
    if (*cmd_check) return run_check(fmt_text, check_cond, check_a, check_b, check_x);
    if (*cmd_sweep) return run_sweep_cli(sw);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const eftlab::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
