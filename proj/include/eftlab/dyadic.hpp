#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace eftlab {

using BigInt = boost::multiprecision::cpp_int;

/// An exact dyadic rational m * 2^q. Canonical form: m is odd or zero,
/// and q = 0 when m = 0. Addition, subtraction, negation and comparison
/// are exact; no operation ever rounds.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long value) : Dyadic(BigInt(value), 0) {}
  Dyadic(BigInt mant, std::int64_t exp);

  static Dyadic pow2(std::int64_t k) { return Dyadic(BigInt(1), k); }

  // Canonical mantissa (odd or zero) and its exponent. For a nonzero value
  // the exponent is the position of the least significant set bit.
  const BigInt& mant() const { return mant_; }
  std::int64_t exp2() const { return exp_; }

  bool is_zero() const { return mant_.is_zero(); }
  bool is_negative() const { return mant_ < 0; }
  int sign() const { return mant_ < 0 ? -1 : (mant_.is_zero() ? 0 : 1); }
  bool is_power_of_two() const;

  // floor(log2(|value|)); empty for zero.
  std::optional<std::int64_t> floor_log2() const;

  Dyadic operator-() const;
  Dyadic operator+(const Dyadic& rhs) const;
  Dyadic operator-(const Dyadic& rhs) const;
  Dyadic abs() const;

  // value * 2^k, exact.
  Dyadic ldexp(std::int64_t k) const;

  bool operator==(const Dyadic& rhs) const {
    return exp_ == rhs.exp_ && mant_ == rhs.mant_;
  }
  std::strong_ordering operator<=>(const Dyadic& rhs) const;

  // Literal grammar: "<sign?><int>", "<sign?><int>*2^<int>" or
  // "<sign?><int>/<pow2-int>"; e.g. "-9*2^1" is -18 and "1/16" is 2^-4.
  static std::optional<Dyadic> parse(std::string_view text);
  std::string str() const;

 private:
  BigInt mant_;           // odd or zero
  std::int64_t exp_ = 0;  // 0 when mant_ == 0
};

/// Unit in the first place: 0 for zero, else the power of two with
/// ufp(r) <= |r| < 2*ufp(r).
Dyadic ufp(const Dyadic& r);

/// Exponent of the least significant non-zero bit: the largest k with
/// r in 2^k Z. Rejects zero.
std::int64_t h_lsb(const Dyadic& r);

/// Whether r is an integer multiple of g. g must be zero or a power of
/// two (every divisibility test in this library uses such moduli);
/// anything else is rejected.
bool is_multiple_of(const Dyadic& r, const Dyadic& g);

}  // namespace eftlab
