#pragma once

#include <optional>

#include "eftlab/rounding.hpp"

namespace eftlab {

/// Independent rounding choices for the three operations of FastTwoSum
/// (or ExtractScalar): x = o1(a+b), z = o2(x-a), y = o3(b-z).
struct ModeTriple {
  RoundingMode o1;
  RoundingMode o2;
  RoundingMode o3;

  bool operator==(const ModeTriple&) const = default;
};

/// Full record of one FastTwoSum evaluation. delta = a + b - x is exact
/// and eft holds exactly when x + y = a + b over the dyadics; both are
/// derived facts, never assumed. If any step produces an infinity the
/// trace is flagged as overflow (a distinct outcome from a numeric EFT
/// failure), delta is empty and eft is false.
struct FtsTrace {
  Fp a, b;
  Fp x, z, y;
  std::optional<Dyadic> delta;
  bool eft = false;
  bool overflow = false;
};

FtsTrace fast_two_sum(const Fp& a, const Fp& b, const ModeTriple& modes,
                      const FormatConfig& fmt);

/// delta = a + b - o(a+b), exact, plus its membership in F. Overflow of
/// the rounded sum is reported instead of a delta.
struct RoundingError {
  std::optional<Dyadic> delta;
  bool in_format = false;
  bool overflow = false;
};

RoundingError rounding_error(const Fp& a, const Fp& b, RoundingMode mode,
                             const FormatConfig& fmt);

/// One ExtractScalar evaluation: s = o1(sigma+x), x_h = o2(s-sigma),
/// x_l = o3(x-x_h). exact_split and grid_ok (x_h in 1/2 ulp(sigma) Z) are
/// computed in the exact dyadic domain.
struct SplitTrace {
  Fp sigma, x;
  Fp s, x_h, x_l;
  bool exact_split = false;
  bool grid_ok = false;
  bool overflow = false;
};

SplitTrace extract_scalar(const Fp& sigma, const Fp& x, const ModeTriple& modes,
                          const FormatConfig& fmt);

}  // namespace eftlab
