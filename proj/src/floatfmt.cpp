#include "noisedim/floatfmt.hpp"

#include "noisedim/text.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace noisedim {

std::string FloatFormat::name() const {
  if (*this == binary16()) return "fp16";
  if (*this == binary32()) return "fp32";
  if (*this == binary64()) return "fp64";
  return "e" + std::to_string(exponent_bits_) + "m" + std::to_string(fraction_bits_);
}

Real decode(FloatValue v) noexcept {
  const FloatFormat fmt = v.format;
  const Real sign = v.negative() ? -1.0L : 1.0L;
  const std::uint64_t exponent = v.exponent_field();
  const auto fraction = static_cast<Real>(v.fraction_field());
  const int m = fmt.fraction_bits();

  if (exponent == fmt.exponent_field_max()) {
    if (v.fraction_field() != 0) return std::numeric_limits<Real>::quiet_NaN();
    return sign * std::numeric_limits<Real>::infinity();
  }
  if (exponent == 0) return sign * std::ldexp(fraction, fmt.min_exponent() - m);

  const auto significand = std::ldexp(1.0L, m) + fraction;
  return sign * std::ldexp(significand, static_cast<int>(exponent) - fmt.bias() - m);
}

FloatValue round_to_format(Real x, FloatFormat fmt) {
  if (std::isnan(x)) throw std::domain_error("round_to_format: NaN input");

  const bool negative = std::signbit(x);
  const Real magnitude = std::fabs(x);
  if (std::isinf(magnitude)) return make_value(fmt, negative, fmt.max_finite_magnitude());
  if (magnitude == 0) return make_value(fmt, negative, 0);

  const int m = fmt.fraction_bits();
  // magnitude = frac * 2^e2 with frac in [0.5, 1), so the leading bit sits at 2^(e2-1).
  int e2 = 0;
  std::frexp(magnitude, &e2);
  const int exponent = std::max(e2 - 1, fmt.min_exponent());
  if (exponent > fmt.max_exponent()) return make_value(fmt, negative, fmt.max_finite_magnitude());

  // Scaling by a power of two is exact; nearbyint rounds half to even.
  const Real scaled = std::ldexp(magnitude, m - exponent);
  const auto integral = static_cast<std::uint64_t>(std::nearbyint(scaled));

  // Subnormal: the integral is the fraction field itself (2^m rolls into the
  // smallest normal). Normal: integral in [2^m, 2^(m+1)], where the upper end
  // rolls into the next binade.
  std::uint64_t bits = integral;
  if (e2 - 1 >= fmt.min_exponent())
    bits = (static_cast<std::uint64_t>(exponent + fmt.bias() - 1) << m) + integral;
  if (bits > fmt.max_finite_magnitude()) bits = fmt.max_finite_magnitude();
  return make_value(fmt, negative, bits);
}

namespace {

void require_finite(FloatValue v, const char* who) {
  if (!v.is_finite()) throw std::domain_error(std::string(who) + ": value is not finite");
}

}  // namespace

FloatValue next_up(FloatValue v) {
  require_finite(v, "next_up");
  const FloatFormat fmt = v.format;
  if (v.is_zero()) return make_value(fmt, false, 1);
  if (v.negative()) return make_value(fmt, v.magnitude() != 1, v.magnitude() - 1);
  return make_value(fmt, false, v.magnitude() + 1);
}

FloatValue next_down(FloatValue v) {
  require_finite(v, "next_down");
  const FloatFormat fmt = v.format;
  if (v.is_zero()) return make_value(fmt, true, 1);
  if (!v.negative()) return make_value(fmt, false, v.magnitude() - 1);
  return make_value(fmt, true, v.magnitude() + 1);
}

FiniteValues enumerate_finite(FloatFormat fmt, int cap_bits) {
  if (fmt.width() > cap_bits)
    throw EnumerationCapError("enumerate_finite: format " + fmt.name() + " is " +
                              std::to_string(fmt.width()) + " bits wide, cap is " +
                              std::to_string(cap_bits) + " bits");
  return FiniteValues(fmt);
}

FloatFormat parse_format(const std::string& text) {
  const std::string name = to_lower(text);
  if (name == "fp16" || name == "binary16" || name == "half") return FloatFormat::binary16();
  if (name == "fp32" || name == "binary32" || name == "single") return FloatFormat::binary32();
  if (name == "fp64" || name == "binary64" || name == "double") return FloatFormat::binary64();

  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("unknown float format '" + text + "' (expected fp16, fp32, fp64 or E:M)");
  int e = 0;
  int m = 0;
  const char* first = text.data();
  const char* mid = first + colon;
  const char* last = first + text.size();
  const auto re = std::from_chars(first, mid, e);
  const auto rm = std::from_chars(mid + 1, last, m);
  if (re.ec != std::errc{} || re.ptr != mid || rm.ec != std::errc{} || rm.ptr != last)
    throw std::invalid_argument("malformed float format '" + text + "' (expected E:M)");
  return {e, m};
}

}  // namespace noisedim
