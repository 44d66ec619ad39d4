#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eftlab/conditions.hpp"

namespace eftlab {

using Json = nlohmann::ordered_json;

enum class SweepTarget { DeltaInF, FtsEft, SplitEft, DoubleRound };

const char* target_name(SweepTarget target);  // "delta-in-f", ...
std::optional<SweepTarget> parse_target(std::string_view name);

/// The six all-equal mode triples.
std::vector<ModeTriple> uniform_triples();
/// The full 6^3 cross product (contains the uniform six).
std::vector<ModeTriple> mixed_triples();
/// Per-step choice between RD and RU, which exhausts every possible
/// faithful-rounding behavior on a single FastTwoSum run: each step rounds
/// exactly one value, and a faithful rounding of a value is RD or RU of
/// it. 8 triples, or 4 with the first step pinned.
std::vector<ModeTriple> adversarial_triples(std::optional<RoundingMode> fixed_o1 = {});

/// What to sweep. The operand space is every ordered pair of finite
/// members of fmt (or every |x| <= 2^k against sigma for the split
/// target, or an m * 2^q grid for the double-rounding target).
struct SweepSpec {
  FormatConfig fmt;
  SweepTarget target = SweepTarget::DeltaInF;
  std::optional<ConditionId> condition;  // empty = unconditional
  std::vector<RoundingMode> modes;       // delta target
  std::vector<ModeTriple> triples;       // fts / split targets
  bool adversarial_fr = false;           // append adversarial_triples(...)
  std::optional<RoundingMode> adversarial_fixed_o1;
  std::optional<std::string> pair_filter;  // "abs_sum_le_omega" | "abs_sum_gt_omega"

  // Split target: anchor exponent k with sigma = succ(2^k), plus the
  // plain sigma = 2^k control run that reproduces the known failure.
  std::optional<int> split_k;
  bool split_control = true;

  // Double-rounding target: narrow format is fmt, wide format below;
  // the grid is every m * 2^q with |m| < 2^mant_bits, q in [qmin, qmax].
  std::optional<FormatConfig> wide_fmt;
  int dr_mant_bits = 10;
  int dr_qmin = -20;
  int dr_qmax = 6;

  // Engine knobs. jobs and pair_budget never change results, only how
  // they are computed, and are excluded from the report echo.
  std::uint64_t max_violations = 100;
  int jobs = 1;
  std::uint64_t pair_budget = 0;  // 0: EFTLAB_PAIR_BUDGET env or 10^9

  explicit SweepSpec(FormatConfig f) : fmt(f) {}
};

/// Raised when |F|^2 exceeds the pair budget guard rail.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepReport {
  Json spec_echo;
  std::uint64_t pairs_total = 0;
  std::uint64_t pairs_condition_true = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t violations_total = 0;
  std::uint64_t overflow_total = 0;  // infinite intermediates, kept apart from violations
  std::uint64_t guarantee_holds_outside_condition = 0;
  std::vector<Json> violations;  // capped at max_violations, enumeration order

  // Split-control results.
  std::uint64_t control_failures_total = 0;
  bool control_witness_checked = false;
  bool control_witness_found = false;
  std::vector<Json> control_failures;  // capped

  double wall_ms = 0.0;
};

std::uint64_t default_pair_budget();

SweepReport sweep_delta(const SweepSpec& spec);
SweepReport sweep_fts(const SweepSpec& spec);
SweepReport sweep_split(const SweepSpec& spec);
SweepReport sweep_split(SweepSpec spec, int k);
SweepReport sweep_double_round(const SweepSpec& spec);
SweepReport run_sweep(const SweepSpec& spec);  // dispatch on spec.target

enum class ReportFormat { Json, Csv };

Json report_to_json(const SweepReport& report);
SweepReport report_from_json(const Json& j);
void emit_report(const SweepReport& report, ReportFormat format, const std::string& path);
SweepReport parse_report(const std::string& path);  // JSON reports only

/// Content equality; wall time is not content.
bool reports_equivalent(const SweepReport& lhs, const SweepReport& rhs);

}  // namespace eftlab
