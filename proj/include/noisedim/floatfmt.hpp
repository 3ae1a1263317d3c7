#ifndef NOISEDIM_FLOATFMT_HPP
#define NOISEDIM_FLOATFMT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>

namespace noisedim {

/// Widest native real type. Every simulated format up to binary64 decodes
/// exactly into it, and so do midpoints between adjacent binary64 values.
using Real = long double;

/// Parametric IEEE-754 style binary format: one sign bit, `exponent_bits`
/// of biased exponent and `fraction_bits` of trailing significand.
///
/// Supported range is 2..11 exponent bits and 1..52 fraction bits, so that
/// every value and every neighbour midpoint is exact in `Real`.
class FloatFormat {
 public:
  constexpr FloatFormat(int exponent_bits, int fraction_bits)
      : exponent_bits_(exponent_bits), fraction_bits_(fraction_bits) {
    if (exponent_bits < 2 || exponent_bits > 11)
      throw std::invalid_argument("FloatFormat: exponent_bits must be in [2, 11]");
    if (fraction_bits < 1 || fraction_bits > 52)
      throw std::invalid_argument("FloatFormat: fraction_bits must be in [1, 52]");
  }

  static constexpr FloatFormat binary16() { return {5, 10}; }
  static constexpr FloatFormat binary32() { return {8, 23}; }
  static constexpr FloatFormat binary64() { return {11, 52}; }

  constexpr int exponent_bits() const noexcept { return exponent_bits_; }
  constexpr int fraction_bits() const noexcept { return fraction_bits_; }
  constexpr int width() const noexcept { return 1 + exponent_bits_ + fraction_bits_; }
  constexpr int bias() const noexcept { return (1 << (exponent_bits_ - 1)) - 1; }
  /// Unbiased exponent of the smallest normal value.
  constexpr int min_exponent() const noexcept { return 1 - bias(); }
  constexpr int max_exponent() const noexcept { return bias(); }

  constexpr std::uint64_t sign_mask() const noexcept {
    return std::uint64_t{1} << (exponent_bits_ + fraction_bits_);
  }
  constexpr std::uint64_t fraction_mask() const noexcept {
    return (std::uint64_t{1} << fraction_bits_) - 1;
  }
  constexpr std::uint64_t exponent_field_max() const noexcept {
    return (std::uint64_t{1} << exponent_bits_) - 1;
  }
  /// Magnitude bits (sign cleared) of +infinity.
  constexpr std::uint64_t infinity_magnitude() const noexcept {
    return exponent_field_max() << fraction_bits_;
  }
  /// Magnitude bits of the largest finite value.
  constexpr std::uint64_t max_finite_magnitude() const noexcept {
    return infinity_magnitude() - 1;
  }

  /// "fp16", "fp32", "fp64", or "e<E>m<M>" for anything else.
  std::string name() const;

  constexpr bool operator==(const FloatFormat&) const = default;

 private:
  int exponent_bits_;
  int fraction_bits_;
};

/// A bit pattern interpreted in a given format.
struct FloatValue {
  std::uint64_t bits = 0;
  FloatFormat format = FloatFormat::binary32();

  constexpr std::uint64_t magnitude() const noexcept { return bits & ~format.sign_mask(); }
  constexpr bool negative() const noexcept { return (bits & format.sign_mask()) != 0; }
  constexpr std::uint64_t exponent_field() const noexcept {
    return magnitude() >> format.fraction_bits();
  }
  constexpr std::uint64_t fraction_field() const noexcept { return bits & format.fraction_mask(); }

  constexpr bool is_nan() const noexcept { return magnitude() > format.infinity_magnitude(); }
  constexpr bool is_infinite() const noexcept { return magnitude() == format.infinity_magnitude(); }
  constexpr bool is_finite() const noexcept { return magnitude() < format.infinity_magnitude(); }
  constexpr bool is_zero() const noexcept { return magnitude() == 0; }
  constexpr bool is_subnormal() const noexcept {
    return exponent_field() == 0 && fraction_field() != 0;
  }

  /// Same value with the sign bit cleared.
  constexpr FloatValue abs() const noexcept { return {magnitude(), format}; }
  constexpr FloatValue negated() const noexcept { return {bits ^ format.sign_mask(), format}; }

  constexpr bool operator==(const FloatValue&) const = default;
};

/// Extended-real value of `v`: finite, +-infinity or NaN. Exact.
Real decode(FloatValue v) noexcept;

/// Bit pattern with the given sign and magnitude in `fmt`.
constexpr FloatValue make_value(FloatFormat fmt, bool negative, std::uint64_t magnitude) noexcept {
  return {magnitude | (negative ? fmt.sign_mask() : 0), fmt};
}

/// Round `x` to the nearest value of `fmt`, ties to even. Magnitudes beyond
/// the largest finite value (including infinities) clamp to that value.
/// Throws std::domain_error for NaN.
FloatValue round_to_format(Real x, FloatFormat fmt);

/// Smallest representable value strictly greater than `v`. Both zeros are
/// one atom, so next_up(-min_subnormal) is +0. next_up of the largest finite
/// value returns +infinity, the range-end sentinel.
/// Throws std::domain_error if `v` is not finite.
FloatValue next_up(FloatValue v);
/// Mirror of next_up; returns -infinity below the most negative finite value.
FloatValue next_down(FloatValue v);

/// Thrown when a traversal would exceed the configured enumeration cap.
class EnumerationCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kDefaultEnumerationCapBits = 32;

/// Every finite value of a format once, in strictly increasing real order,
/// with +0 and -0 merged into a single +0 atom.
///
/// Atoms are addressed by an ordinal in [0, size()); ordinal
/// size()/2 is zero.
class FiniteValues {
 public:
  class iterator {
   public:
    using iterator_category = std::random_access_iterator_tag;
    using value_type = FloatValue;
    using difference_type = std::ptrdiff_t;
    using reference = FloatValue;
    using pointer = void;

    iterator() = default;
    iterator(FloatFormat fmt, std::uint64_t ordinal) : format_(fmt), ordinal_(ordinal) {}

    FloatValue operator*() const { return FiniteValues(format_).at(ordinal_); }
    FloatValue operator[](difference_type n) const { return FiniteValues(format_).at(ordinal_ + n); }
    iterator& operator++() { ++ordinal_; return *this; }
    iterator operator++(int) { auto old = *this; ++ordinal_; return old; }
    iterator& operator--() { --ordinal_; return *this; }
    iterator operator--(int) { auto old = *this; --ordinal_; return old; }
    iterator& operator+=(difference_type n) { ordinal_ += n; return *this; }
    iterator& operator-=(difference_type n) { ordinal_ -= n; return *this; }
    friend iterator operator+(iterator it, difference_type n) { return it += n; }
    friend iterator operator+(difference_type n, iterator it) { return it += n; }
    friend iterator operator-(iterator it, difference_type n) { return it -= n; }
    friend difference_type operator-(const iterator& a, const iterator& b) {
      return static_cast<difference_type>(a.ordinal_) - static_cast<difference_type>(b.ordinal_);
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.ordinal_ == b.ordinal_; }
    friend auto operator<=>(const iterator& a, const iterator& b) { return a.ordinal_ <=> b.ordinal_; }

   private:
    FloatFormat format_ = FloatFormat::binary32();
    std::uint64_t ordinal_ = 0;
  };

  explicit constexpr FiniteValues(FloatFormat fmt) noexcept : format_(fmt) {}

  FloatFormat format() const noexcept { return format_; }
  std::uint64_t size() const noexcept { return 2 * format_.max_finite_magnitude() + 1; }
  FloatValue at(std::uint64_t ordinal) const noexcept {
    const std::uint64_t zero = format_.max_finite_magnitude();
    return ordinal < zero ? make_value(format_, true, zero - ordinal)
                          : make_value(format_, false, ordinal - zero);
  }
  /// Ordinal of a finite value; -0 maps to the zero atom.
  std::uint64_t ordinal_of(FloatValue v) const noexcept {
    const std::uint64_t zero = format_.max_finite_magnitude();
    return v.negative() ? zero - v.magnitude() : zero + v.magnitude();
  }

  iterator begin() const { return {format_, 0}; }
  iterator end() const { return {format_, size()}; }

 private:
  FloatFormat format_;
};

/// Checked entry point for traversals: refuses formats wider than
/// `cap_bits` with EnumerationCapError.
FiniteValues enumerate_finite(FloatFormat fmt, int cap_bits = kDefaultEnumerationCapBits);

/// Parses "fp16", "fp32", "fp64", "binary16/32/64", "half", "single",
/// "double" (any case) or "E:M".
FloatFormat parse_format(const std::string& text);

}  // namespace noisedim

#endif  // NOISEDIM_FLOATFMT_HPP
