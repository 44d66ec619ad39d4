#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eftlab/dyadic.hpp"

namespace eftlab {

/// A binary floating-point format F(p, emin, emax): precision p >= 2 bits
/// and extremal exponents emin <= emax. Finite members are M * 2^(E-p+1)
/// with emin <= E <= emax, |M| < 2^p, and |M| >= 2^(p-1) whenever E > emin.
struct FormatConfig {
  int precision;
  int emin;
  int emax;

  FormatConfig(int p, int emin_, int emax_);

  Dyadic unit_roundoff() const { return Dyadic::pow2(-precision); }
  Dyadic max_finite() const;    // (2^p - 1) * 2^(emax-p+1)
  Dyadic min_positive() const;  // 2^(emin-p+1)

  bool operator==(const FormatConfig& rhs) const = default;

  std::string id() const;  // "p,emin,emax"
  static std::optional<FormatConfig> parse(std::string_view text);
};

/// A member of F: either finite in canonical (M, E) form or a signed
/// infinity. The canonical form is unique, zero is M = 0 at E = emin,
/// and there is no signed zero.
class Fp {
 public:
  enum class Kind { Finite, PosInf, NegInf };

  Fp() = default;  // placeholder value; construct real members via the factories

  static Fp finite(BigInt significand, std::int64_t exponent, const FormatConfig& fmt);
  static Fp zero(const FormatConfig& fmt);
  static Fp pos_inf();
  static Fp neg_inf();
  static Fp largest(const FormatConfig& fmt);   // Omega
  static Fp smallest(const FormatConfig& fmt);  // omega

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_inf() const { return kind_ != Kind::Finite; }
  bool is_zero() const { return is_finite() && significand_.is_zero(); }

  // Canonical integral significand M and exponent E; finite only.
  const BigInt& significand() const;
  std::int64_t exponent() const;
  bool odd_significand() const;  // |M| odd; false for zero and infinities

  int sign() const;  // -1, 0, +1 (infinities are signed)

  // Exact value M * 2^(E-p+1); finite only. The scale depends on the
  // format's precision, so the format is part of the call.
  Dyadic value(const FormatConfig& fmt) const;

  bool operator==(const Fp& rhs) const = default;

  std::string str(const FormatConfig& fmt) const;  // dyadic literal, or "+inf" / "-inf"

 private:
  Kind kind_ = Kind::Finite;
  BigInt significand_;
  std::int64_t exponent_ = 0;
};

/// ulp per the format: 2u*ufp(r) when |r| >= 2^emin, else omega.
/// In particular ulp(0) = omega.
Dyadic ulp(const Dyadic& r, const FormatConfig& fmt);
Dyadic ulp(const Fp& x, const FormatConfig& fmt);

/// Whether the exact value r is a finite member of F.
bool in_format(const Dyadic& r, const FormatConfig& fmt);

/// Exact conversion; empty when r is not in F.
std::optional<Fp> to_fp_exact(const Dyadic& r, const FormatConfig& fmt);

/// Floating-point neighbors of a finite x, including the half-ulp step
/// below positive powers of two, succ(Omega) = +inf, pred(-Omega) = -inf,
/// succ(0) = omega and pred(0) = -omega.
Fp pred(const Fp& x, const FormatConfig& fmt);
Fp succ(const Fp& x, const FormatConfig& fmt);

/// Number of finite members of F.
BigInt format_cardinality(const FormatConfig& fmt);

/// All finite members in ascending order. Rejects formats with more than
/// 2^26 members; exhaustive sweeps are meant for desk-scale formats.
std::vector<Fp> enumerate_format(const FormatConfig& fmt);

}  // namespace eftlab
