#include "eftlab/format.hpp"

#include <stdexcept>
#include <utility>

namespace eftlab {

FormatConfig::FormatConfig(int p, int emin_, int emax_)
    : precision(p), emin(emin_), emax(emax_) {
  if (p < 2) throw std::invalid_argument("FormatConfig: precision must be >= 2");
  if (emax_ < emin_) throw std::invalid_argument("FormatConfig: emax must be >= emin");
}

Dyadic FormatConfig::max_finite() const {
  return Dyadic((BigInt(1) << precision) - 1, emax - precision + 1);
}

Dyadic FormatConfig::min_positive() const {
  return Dyadic::pow2(static_cast<std::int64_t>(emin) - precision + 1);
}

std::string FormatConfig::id() const {
  return std::to_string(precision) + "," + std::to_string(emin) + "," + std::to_string(emax);
}

std::optional<FormatConfig> FormatConfig::parse(std::string_view text) {
  int fields[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t next = i < 2 ? text.find(',', pos) : text.size();
    if (next == std::string_view::npos) return std::nullopt;
    try {
      std::size_t used = 0;
      std::string part(text.substr(pos, next - pos));
      fields[i] = std::stoi(part, &used);
      if (used != part.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    pos = next + 1;
  }
  if (fields[0] < 2 || fields[2] < fields[1]) return std::nullopt;
  return FormatConfig(fields[0], fields[1], fields[2]);
}

Fp Fp::finite(BigInt significand, std::int64_t exponent, const FormatConfig& fmt) {
  BigInt mag = significand < 0 ? BigInt(-significand) : significand;
  if (exponent < fmt.emin || exponent > fmt.emax)
    throw std::invalid_argument("Fp: exponent out of range");
  if (mag >= (BigInt(1) << fmt.precision))
    throw std::invalid_argument("Fp: |significand| must be < 2^p");
  if (exponent > fmt.emin && mag < (BigInt(1) << (fmt.precision - 1)))
    throw std::invalid_argument("Fp: non-minimal exponent requires a normal significand");
  Fp x;
  x.kind_ = Kind::Finite;
  x.significand_ = std::move(significand);
  x.exponent_ = exponent;
  return x;
}

Fp Fp::zero(const FormatConfig& fmt) { return finite(BigInt(0), fmt.emin, fmt); }

Fp Fp::pos_inf() {
  Fp x;
  x.kind_ = Kind::PosInf;
  return x;
}

Fp Fp::neg_inf() {
  Fp x;
  x.kind_ = Kind::NegInf;
  return x;
}

Fp Fp::largest(const FormatConfig& fmt) {
  return finite((BigInt(1) << fmt.precision) - 1, fmt.emax, fmt);
}

Fp Fp::smallest(const FormatConfig& fmt) { return finite(BigInt(1), fmt.emin, fmt); }

const BigInt& Fp::significand() const {
  if (!is_finite()) throw std::invalid_argument("Fp: infinity has no significand");
  return significand_;
}

std::int64_t Fp::exponent() const {
  if (!is_finite()) throw std::invalid_argument("Fp: infinity has no exponent");
  return exponent_;
}

bool Fp::odd_significand() const {
  return is_finite() && boost::multiprecision::bit_test(
                            significand_ < 0 ? BigInt(-significand_) : significand_, 0);
}

int Fp::sign() const {
  switch (kind_) {
    case Kind::PosInf: return 1;
    case Kind::NegInf: return -1;
    case Kind::Finite: break;
  }
  return significand_ < 0 ? -1 : (significand_.is_zero() ? 0 : 1);
}

Dyadic Fp::value(const FormatConfig& fmt) const {
  if (!is_finite()) throw std::invalid_argument("Fp: infinity has no dyadic value");
  return Dyadic(significand_, exponent_ - fmt.precision + 1);
}

std::string Fp::str(const FormatConfig& fmt) const {
  switch (kind_) {
    case Kind::PosInf: return "+inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: break;
  }
  return value(fmt).str();
}

Dyadic ulp(const Dyadic& r, const FormatConfig& fmt) {
  auto e = r.floor_log2();
  if (e && *e >= fmt.emin) return Dyadic::pow2(*e - fmt.precision + 1);
  return fmt.min_positive();
}

Dyadic ulp(const Fp& x, const FormatConfig& fmt) { return ulp(x.value(fmt), fmt); }

namespace {

std::int64_t grid_exponent(std::int64_t e, const FormatConfig& fmt) {
  return std::max<std::int64_t>(e, fmt.emin) - fmt.precision + 1;
}

}  // namespace

bool in_format(const Dyadic& r, const FormatConfig& fmt) {
  return to_fp_exact(r, fmt).has_value();
}

std::optional<Fp> to_fp_exact(const Dyadic& r, const FormatConfig& fmt) {
  if (r.is_zero()) return Fp::zero(fmt);
  std::int64_t e = *r.floor_log2();
  if (e > fmt.emax) return std::nullopt;
  std::int64_t k = grid_exponent(e, fmt);
  if (r.exp2() < k) return std::nullopt;
  BigInt m = r.mant() << static_cast<std::size_t>(r.exp2() - k);
  return Fp::finite(std::move(m), std::max<std::int64_t>(e, fmt.emin), fmt);
}

namespace {

Fp fp_from_exact_value(const Dyadic& r, const FormatConfig& fmt) {
  auto x = to_fp_exact(r, fmt);
  if (!x) throw std::logic_error("neighbor fell outside F: " + r.str());
  return *x;
}

}  // namespace

Fp pred(const Fp& x, const FormatConfig& fmt) {
  if (!x.is_finite()) throw std::invalid_argument("pred: requires a finite input");
  if (x.is_zero()) return fp_from_exact_value(-fmt.min_positive(), fmt);
  Dyadic v = x.value(fmt);
  if (v == -fmt.max_finite()) return Fp::neg_inf();
  Dyadic step = ulp(v, fmt);
  bool at_binade_floor = v.is_power_of_two() && !v.is_negative() &&
                         v > Dyadic::pow2(fmt.emin);
  if (at_binade_floor) step = step.ldexp(-1);
  return fp_from_exact_value(v - step, fmt);
}

Fp succ(const Fp& x, const FormatConfig& fmt) {
  if (!x.is_finite()) throw std::invalid_argument("succ: requires a finite input");
  if (x.is_zero()) return fp_from_exact_value(fmt.min_positive(), fmt);
  Dyadic v = x.value(fmt);
  if (v == fmt.max_finite()) return Fp::pos_inf();
  Dyadic step = ulp(v, fmt);
  bool at_binade_floor = (-v).is_power_of_two() && v.is_negative() &&
                         v < -Dyadic::pow2(fmt.emin);
  if (at_binade_floor) step = step.ldexp(-1);
  return fp_from_exact_value(v + step, fmt);
}

BigInt format_cardinality(const FormatConfig& fmt) {
  BigInt half = BigInt(1) << (fmt.precision - 1);
  BigInt positives = BigInt(fmt.emax - fmt.emin + 1) * half + half - 1;
  return 2 * positives + 1;
}

std::vector<Fp> enumerate_format(const FormatConfig& fmt) {
  BigInt count = format_cardinality(fmt);
  if (count > (BigInt(1) << 26))
    throw std::invalid_argument("enumerate_format: format too large to enumerate (" +
                                count.str() + " members)");

  std::vector<Fp> positives;
  BigInt half = BigInt(1) << (fmt.precision - 1);
  for (BigInt m = 1; m < half; ++m) positives.push_back(Fp::finite(m, fmt.emin, fmt));
  for (int e = fmt.emin; e <= fmt.emax; ++e)
    for (BigInt m = half; m < 2 * half; ++m) positives.push_back(Fp::finite(m, e, fmt));

  std::vector<Fp> all;
  all.reserve(2 * positives.size() + 1);
  for (auto it = positives.rbegin(); it != positives.rend(); ++it)
    all.push_back(Fp::finite(-it->significand(), it->exponent(), fmt));
  all.push_back(Fp::zero(fmt));
  all.insert(all.end(), positives.begin(), positives.end());
  return all;
}

}  // namespace eftlab
