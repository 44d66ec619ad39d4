#include "eftlab/dyadic.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace eftlab {

namespace mp = boost::multiprecision;

Dyadic::Dyadic(BigInt mant, std::int64_t exp) : mant_(std::move(mant)), exp_(exp) {
  if (mant_.is_zero()) {
    exp_ = 0;
    return;
  }
  std::size_t shift = mp::lsb(mant_ < 0 ? BigInt(-mant_) : mant_);
  if (shift > 0) {
    mant_ >>= shift;
    exp_ += static_cast<std::int64_t>(shift);
  }
}

bool Dyadic::is_power_of_two() const { return mant_ == 1; }

std::optional<std::int64_t> Dyadic::floor_log2() const {
  if (is_zero()) return std::nullopt;
  BigInt mag = mant_ < 0 ? BigInt(-mant_) : mant_;
  return exp_ + static_cast<std::int64_t>(mp::msb(mag));
}

Dyadic Dyadic::operator-() const {
  Dyadic r;
  r.mant_ = -mant_;
  r.exp_ = exp_;
  return r;
}

Dyadic Dyadic::operator+(const Dyadic& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  // Align both mantissas to the smaller exponent; the result stays exact.
  std::int64_t q = std::min(exp_, rhs.exp_);
  BigInt a = mant_ << static_cast<std::size_t>(exp_ - q);
  BigInt b = rhs.mant_ << static_cast<std::size_t>(rhs.exp_ - q);
  return Dyadic(a + b, q);
}

Dyadic Dyadic::operator-(const Dyadic& rhs) const { return *this + (-rhs); }

Dyadic Dyadic::abs() const { return mant_ < 0 ? -*this : *this; }

Dyadic Dyadic::ldexp(std::int64_t k) const {
  if (is_zero()) return Dyadic();
  Dyadic r;
  r.mant_ = mant_;
  r.exp_ = exp_ + k;
  return r;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& rhs) const {
  int sl = sign(), sr = rhs.sign();
  if (sl != sr) return sl <=> sr;
  if (sl == 0) return std::strong_ordering::equal;
  Dyadic diff = *this - rhs;
  return diff.sign() <=> 0;
}

namespace {

bool parse_integer(std::string_view text, std::size_t& pos, BigInt& out) {
  std::size_t start = pos;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_start) {
    pos = start;
    return false;
  }
  out = BigInt(std::string(text.substr(digits_start, pos - digits_start)));
  if (negative) out = -out;
  return true;
}

}  // namespace

std::optional<Dyadic> Dyadic::parse(std::string_view text) {
  std::size_t pos = 0;
  BigInt mant;
  if (!parse_integer(text, pos, mant)) return std::nullopt;
  if (pos == text.size()) return Dyadic(mant, 0);

  if (text.compare(pos, 3, "*2^") == 0) {
    pos += 3;
    BigInt exp;
    if (!parse_integer(text, pos, exp) || pos != text.size()) return std::nullopt;
    if (exp < -(1LL << 40) || exp > (1LL << 40)) return std::nullopt;
    return Dyadic(mant, static_cast<std::int64_t>(exp));
  }

  if (text[pos] == '/') {
    ++pos;
    BigInt den;
    if (!parse_integer(text, pos, den) || pos != text.size()) return std::nullopt;
    if (den <= 0) return std::nullopt;
    std::size_t k = mp::lsb(den);
    if ((den >> k) != 1) return std::nullopt;  // denominator must be a power of two
    return Dyadic(mant, -static_cast<std::int64_t>(k));
  }

  return std::nullopt;
}

std::string Dyadic::str() const {
  if (is_zero()) return "0";
  if (exp_ >= 0) {
    // Exact integer; print it plainly up to a sane width.
    if (exp_ <= 512) {
      BigInt v = mant_ << static_cast<std::size_t>(exp_);
      return v.str();
    }
    return mant_.str() + "*2^" + std::to_string(exp_);
  }
  if (exp_ >= -512) {
    BigInt den = BigInt(1) << static_cast<std::size_t>(-exp_);
    return mant_.str() + "/" + den.str();
  }
  return mant_.str() + "*2^" + std::to_string(exp_);
}

Dyadic ufp(const Dyadic& r) {
  auto e = r.floor_log2();
  if (!e) return Dyadic();
  return Dyadic::pow2(*e);
}

std::int64_t h_lsb(const Dyadic& r) {
  if (r.is_zero()) throw std::invalid_argument("h_lsb: undefined for zero");
  return r.exp2();
}

bool is_multiple_of(const Dyadic& r, const Dyadic& g) {
  if (g.is_zero()) return r.is_zero();
  if (!g.is_power_of_two())
    throw std::invalid_argument("is_multiple_of: modulus must be zero or a power of two, got " + g.str());
  return r.is_zero() || r.exp2() >= g.exp2();
}

}  // namespace eftlab
