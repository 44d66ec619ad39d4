#include "eftlab/algorithms.hpp"

#include <stdexcept>

namespace eftlab {

namespace {

void require_finite(const Fp& v, const char* who) {
  if (!v.is_finite()) throw std::invalid_argument(std::string(who) + ": operands must be finite");
}

}  // namespace

FtsTrace fast_two_sum(const Fp& a, const Fp& b, const ModeTriple& modes,
                      const FormatConfig& fmt) {
  require_finite(a, "fast_two_sum");
  require_finite(b, "fast_two_sum");

  FtsTrace t;
  t.a = a;
  t.b = b;
  Dyadic va = a.value(fmt), vb = b.value(fmt);
  Dyadic sum = va + vb;

  t.x = round(sum, modes.o1, fmt);
  if (t.x.is_inf()) {
    // Infinities propagate through the remaining steps: x - a keeps the
    // sign of x, b - z flips it.
    t.z = t.x;
    t.y = t.x.kind() == Fp::Kind::PosInf ? Fp::neg_inf() : Fp::pos_inf();
    t.overflow = true;
    return t;
  }
  t.delta = sum - t.x.value(fmt);

  t.z = round(t.x.value(fmt) - va, modes.o2, fmt);
  if (t.z.is_inf()) {
    t.y = t.z.kind() == Fp::Kind::PosInf ? Fp::neg_inf() : Fp::pos_inf();
    t.overflow = true;
    return t;
  }

  t.y = round(vb - t.z.value(fmt), modes.o3, fmt);
  if (t.y.is_inf()) {
    t.overflow = true;
    return t;
  }

  t.eft = (t.x.value(fmt) + t.y.value(fmt)) == sum;
  return t;
}

RoundingError rounding_error(const Fp& a, const Fp& b, RoundingMode mode,
                             const FormatConfig& fmt) {
  require_finite(a, "rounding_error");
  require_finite(b, "rounding_error");

  Dyadic sum = a.value(fmt) + b.value(fmt);
  Fp x = round(sum, mode, fmt);
  RoundingError r;
  if (x.is_inf()) {
    r.overflow = true;
    return r;
  }
  r.delta = sum - x.value(fmt);
  r.in_format = in_format(*r.delta, fmt);
  return r;
}

SplitTrace extract_scalar(const Fp& sigma, const Fp& x, const ModeTriple& modes,
                          const FormatConfig& fmt) {
  require_finite(sigma, "extract_scalar");
  require_finite(x, "extract_scalar");

  SplitTrace t;
  t.sigma = sigma;
  t.x = x;
  Dyadic vs = sigma.value(fmt), vx = x.value(fmt);

  t.s = round(vs + vx, modes.o1, fmt);
  if (t.s.is_inf()) {
    t.x_h = t.s;
    t.x_l = t.s.kind() == Fp::Kind::PosInf ? Fp::neg_inf() : Fp::pos_inf();
    t.overflow = true;
    return t;
  }

  t.x_h = round(t.s.value(fmt) - vs, modes.o2, fmt);
  if (t.x_h.is_inf()) {
    t.x_l = t.x_h.kind() == Fp::Kind::PosInf ? Fp::neg_inf() : Fp::pos_inf();
    t.overflow = true;
    return t;
  }

  t.x_l = round(vx - t.x_h.value(fmt), modes.o3, fmt);
  if (t.x_l.is_inf()) {
    t.overflow = true;
    return t;
  }

  t.exact_split = (t.x_h.value(fmt) + t.x_l.value(fmt)) == vx;
  t.grid_ok = is_multiple_of(t.x_h.value(fmt), ulp(vs, fmt).ldexp(-1));
  return t;
}

}  // namespace eftlab
