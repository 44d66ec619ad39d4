#include "eftlab/rounding.hpp"

#include <stdexcept>

namespace eftlab {

bool is_nearest(RoundingMode mode) {
  return mode == RoundingMode::RNE || mode == RoundingMode::RNA;
}

const char* mode_name(RoundingMode mode) {
  switch (mode) {
    case RoundingMode::RD: return "rd";
    case RoundingMode::RU: return "ru";
    case RoundingMode::RZ: return "rz";
    case RoundingMode::RNE: return "rne";
    case RoundingMode::RNA: return "rna";
    case RoundingMode::RO: return "ro";
  }
  return "?";
}

std::optional<RoundingMode> parse_mode(std::string_view name) {
  for (RoundingMode m : kAllModes)
    if (name == mode_name(m)) return m;
  return std::nullopt;
}

namespace {

// Floor of a positive r onto the representable grid at its magnitude.
Fp floor_positive(const Dyadic& r, const FormatConfig& fmt) {
  std::int64_t e = *r.floor_log2();
  if (e > fmt.emax) return Fp::largest(fmt);
  std::int64_t k = std::max<std::int64_t>(e, fmt.emin) - fmt.precision + 1;
  BigInt m;
  if (r.exp2() >= k) {
    m = r.mant() << static_cast<std::size_t>(r.exp2() - k);
  } else {
    m = r.mant() >> static_cast<std::size_t>(k - r.exp2());  // r > 0, so this floors
  }
  return Fp::finite(m, std::max<std::int64_t>(e, fmt.emin), fmt);
}

// Ceiling of a positive r; +inf past Omega.
Fp ceil_positive(const Dyadic& r, const FormatConfig& fmt) {
  std::int64_t e = *r.floor_log2();
  if (e > fmt.emax) return Fp::pos_inf();
  std::int64_t k = std::max<std::int64_t>(e, fmt.emin) - fmt.precision + 1;
  BigInt m;
  if (r.exp2() >= k) {
    m = r.mant() << static_cast<std::size_t>(r.exp2() - k);
  } else {
    std::size_t shift = static_cast<std::size_t>(k - r.exp2());
    m = ((r.mant() - 1) >> shift) + 1;
  }
  if (m == (BigInt(1) << fmt.precision)) {
    if (e + 1 > fmt.emax) return Fp::pos_inf();
    return Fp::finite(BigInt(1) << (fmt.precision - 1), e + 1, fmt);
  }
  return Fp::finite(m, std::max<std::int64_t>(e, fmt.emin), fmt);
}

Fp negate(const Fp& x, const FormatConfig& fmt) {
  switch (x.kind()) {
    case Fp::Kind::PosInf: return Fp::neg_inf();
    case Fp::Kind::NegInf: return Fp::pos_inf();
    case Fp::Kind::Finite: break;
  }
  return Fp::finite(-x.significand(), x.exponent(), fmt);
}

}  // namespace

Fp round_down(const Dyadic& r, const FormatConfig& fmt) {
  if (r.is_zero()) return Fp::zero(fmt);
  if (r.is_negative()) return negate(ceil_positive(-r, fmt), fmt);
  return floor_positive(r, fmt);
}

Fp round_up(const Dyadic& r, const FormatConfig& fmt) {
  if (r.is_zero()) return Fp::zero(fmt);
  if (r.is_negative()) return negate(floor_positive(-r, fmt), fmt);
  return ceil_positive(r, fmt);
}

Fp round(const Dyadic& r, RoundingMode mode, const FormatConfig& fmt) {
  Fp lo = round_down(r, fmt);
  Fp hi = round_up(r, fmt);
  if (lo == hi) return lo;  // r is a member of F

  switch (mode) {
    case RoundingMode::RD:
      return lo;
    case RoundingMode::RU:
      return hi;
    case RoundingMode::RZ:
      return r.is_negative() ? hi : lo;
    case RoundingMode::RNE:
    case RoundingMode::RNA: {
      // The nearest modes overflow to an infinity at and beyond the
      // midpoint (2 - u) * 2^emax = Omega + 1/2 ulp(Omega).
      Dyadic threshold((BigInt(1) << (fmt.precision + 1)) - 1, fmt.emax - fmt.precision);
      if (r.abs() >= threshold) return r.is_negative() ? Fp::neg_inf() : Fp::pos_inf();
      if (hi.is_inf()) return lo;  // r in (Omega, threshold)
      if (lo.is_inf()) return hi;
      Dyadic down_gap = r - lo.value(fmt);
      Dyadic up_gap = hi.value(fmt) - r;
      if (down_gap < up_gap) return lo;
      if (up_gap < down_gap) return hi;
      if (mode == RoundingMode::RNA) return r.is_negative() ? lo : hi;
      return lo.odd_significand() ? hi : lo;  // exactly one neighbor is even
    }
    case RoundingMode::RO:
      // Saturation: an infinite neighbor is never odd, and +-Omega is.
      if (hi.is_inf()) return lo;
      if (lo.is_inf()) return hi;
      return hi.odd_significand() ? hi : lo;
  }
  throw std::logic_error("round: unreachable");
}

bool is_faithful_result(const Dyadic& r, const Fp& x, const FormatConfig& fmt) {
  return x == round_down(r, fmt) || x == round_up(r, fmt);
}

Fp double_round_ro(const Dyadic& r, const FormatConfig& wide, const FormatConfig& narrow) {
  if (wide.precision < 2 * narrow.precision + 2)
    throw std::invalid_argument("double_round_ro: wide precision must be >= 2p + 2");
  if (wide.emax < narrow.emax + 2 || wide.emin > narrow.emin - narrow.precision - 2)
    throw std::invalid_argument("double_round_ro: wide exponent range lacks margin");
  Fp mid = round(r, RoundingMode::RO, wide);
  return round(mid.value(wide), RoundingMode::RNE, narrow);
}

}  // namespace eftlab
