#pragma once

#include <optional>
#include <string>

#include "eftlab/format.hpp"

namespace eftlab {

/// The five IEEE-754 modes plus round-to-odd. All six are faithful:
/// for every real r, the result is RD(r) or RU(r).
enum class RoundingMode { RD, RU, RZ, RNE, RNA, RO };

inline constexpr RoundingMode kAllModes[] = {RoundingMode::RD,  RoundingMode::RU,
                                             RoundingMode::RZ,  RoundingMode::RNE,
                                             RoundingMode::RNA, RoundingMode::RO};

bool is_nearest(RoundingMode mode);  // RNE or RNA

const char* mode_name(RoundingMode mode);  // "rd", "ru", ...
std::optional<RoundingMode> parse_mode(std::string_view name);

/// Largest finite member <= r; -inf when r < -Omega. Exact on members of F.
Fp round_down(const Dyadic& r, const FormatConfig& fmt);
/// Smallest finite member >= r; +inf when r > Omega.
Fp round_up(const Dyadic& r, const FormatConfig& fmt);

/// Total rounding of an exact value. Members of F are returned unchanged
/// under every mode. Out-of-range magnitudes follow IEEE-754 for the five
/// standard modes (RU/RD/RZ clamp or produce an infinity, the nearest
/// modes overflow at (2 - u) * 2^emax), while RO saturates to +-Omega:
/// an infinite neighbor has no odd significand, and Omega's significand
/// 2^p - 1 is odd.
Fp round(const Dyadic& r, RoundingMode mode, const FormatConfig& fmt);

/// Whether x is one of {RD(r), RU(r)}, i.e. a faithful rounding of r.
bool is_faithful_result(const Dyadic& r, const Fp& x, const FormatConfig& fmt);

/// Round r through the wide format with round-to-odd, then to the narrow
/// format with nearest-even. Requires wide.precision >= 2 * narrow.precision
/// + 2 and a wide exponent range with margin (emax + 2 above, emin - p - 2
/// below) so no intermediate overflow or underflow perturbs the result;
/// under those conditions the result equals rounding r directly.
Fp double_round_ro(const Dyadic& r, const FormatConfig& wide, const FormatConfig& narrow);

}  // namespace eftlab
