#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eftlab/algorithms.hpp"

namespace eftlab {

/// Sufficient conditions on operand pairs (a, b) -- or on (sigma, x) for
/// the split condition -- each tied to a guarantee: the rounding error
/// delta = a+b - o(a+b) is in F, FastTwoSum is an error-free
/// transformation, or ExtractScalar splits exactly.
enum class ConditionId {
  LemmaFaith1,         // both operands subnormal
  CorollaryFaith1,     // |a+b| < 2^(emin+1)
  LemmaFaith2,         // |a| >= u ufp(b), |b| >= u ufp(a), no overflow
  TheoremFaith1,       // a in 2u^2 ufp(b) Z, b in 2u^2 ufp(a) Z, no overflow
  TheoremFaith2,       // a in ulp(b) Z, b in 2u^2 ufp(a) Z, no overflow
  LemmaRto1,           // |a+b| > Omega (round-to-odd saturation)
  LemmaRto3,           // larger-magnitude operand has an odd significand
  CorollaryRto1,       // the Theorem divisibility pair, no magnitude bound
  TheoremRto1,         // a odd, a in ulp(b) Z
  TheoremExtractScalar,  // sigma = 2^k + ulp(2^k), 2^k >= 2 omega, |x| <= 2^k
  PriorDekker,         // e_a >= e_b
  PriorBoldo,          // |e_a - e_b| <= p - 1
  PriorJeannerod,      // a in ulp(b) Z, e_a - e_b <= p
  PriorSignRd,         // a in ulp(b) Z, b >= 0
  PriorSignRu,         // a in ulp(b) Z, b <= 0
  PriorSignRz,         // a in ulp(b) Z, a*b >= 0
  PriorLinnainmaaParity,  // |a| >= |b|, a odd
  PriorLinnainmaaH,    // e_x - h_min(|a|,|b|) < 2p; needs the computed x
};

inline constexpr ConditionId kAllConditions[] = {
    ConditionId::LemmaFaith1,    ConditionId::CorollaryFaith1,
    ConditionId::LemmaFaith2,    ConditionId::TheoremFaith1,
    ConditionId::TheoremFaith2,  ConditionId::LemmaRto1,
    ConditionId::LemmaRto3,      ConditionId::CorollaryRto1,
    ConditionId::TheoremRto1,    ConditionId::TheoremExtractScalar,
    ConditionId::PriorDekker,    ConditionId::PriorBoldo,
    ConditionId::PriorJeannerod, ConditionId::PriorSignRd,
    ConditionId::PriorSignRu,    ConditionId::PriorSignRz,
    ConditionId::PriorLinnainmaaParity, ConditionId::PriorLinnainmaaH,
};

const char* condition_name(ConditionId id);  // "theorem_faith2", ...
std::optional<ConditionId> parse_condition(std::string_view name);

enum class GuaranteeClass { DeltaInF, Eft, SplitEft };
GuaranteeClass guarantee_class(ConditionId id);

/// Evaluation of a condition, one named conjunct at a time. A pair with a
/// zero operand is deemed satisfied (the guaranteed conclusion holds
/// trivially) except for the saturation condition, which keeps its
/// natural |a+b| > Omega test.
struct ConditionBreakdown {
  bool satisfied = false;
  std::vector<std::pair<std::string, bool>> conjuncts;
};

ConditionBreakdown check_detailed(ConditionId id, const Fp& a, const Fp& b,
                                  const FormatConfig& fmt,
                                  const std::optional<Fp>& extra = std::nullopt);

bool check(ConditionId id, const Fp& a, const Fp& b, const FormatConfig& fmt,
           const std::optional<Fp>& extra = std::nullopt);

/// Largest exponent difference between nonzero operands admitted by the
/// condition (directed e_a - e_b where the condition is asymmetric).
/// Defined for the magnitude-gap conditions only; others are rejected.
int exponent_gap_bound(ConditionId id, const FormatConfig& fmt);

}  // namespace eftlab
