#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>

#include "noisedim/floatfmt.hpp"

using namespace noisedim;

namespace {

constexpr FloatFormat kHalf = FloatFormat::binary16();
constexpr FloatFormat kSingle = FloatFormat::binary32();
constexpr FloatFormat kDouble = FloatFormat::binary64();

// Straight textbook decode of a binary16 pattern, kept apart from the
// library's parametric decoder.
double half_oracle(std::uint16_t h) {
  const int sign = h >> 15;
  const int exponent = (h >> 10) & 0x1f;
  const int fraction = h & 0x3ff;
  double magnitude;
  if (exponent == 0)
    magnitude = std::ldexp(fraction, -24);
  else if (exponent == 31)
    magnitude = fraction ? std::numeric_limits<double>::quiet_NaN() : std::numeric_limits<double>::infinity();
  else
    magnitude = std::ldexp(1024 + fraction, exponent - 25);
  return sign ? -magnitude : magnitude;
}

}  // namespace

TEST(FloatFormat, StandardLayouts) {
  EXPECT_EQ(kHalf.width(), 16);
  EXPECT_EQ(kSingle.width(), 32);
  EXPECT_EQ(kDouble.width(), 64);
  EXPECT_EQ(kHalf.bias(), 15);
  EXPECT_EQ(kSingle.bias(), 127);
  EXPECT_EQ(kDouble.bias(), 1023);
  EXPECT_EQ(kSingle.min_exponent(), -126);
  EXPECT_EQ(kHalf.name(), "fp16");
  EXPECT_EQ(FloatFormat(4, 3).name(), "e4m3");
  EXPECT_THROW(FloatFormat(1, 10), std::invalid_argument);
  EXPECT_THROW(FloatFormat(12, 10), std::invalid_argument);
  EXPECT_THROW(FloatFormat(5, 0), std::invalid_argument);
  EXPECT_THROW(FloatFormat(5, 53), std::invalid_argument);
}

TEST(FloatFormat, ParseNames) {
  EXPECT_EQ(parse_format("fp16"), kHalf);
  EXPECT_EQ(parse_format("binary32"), kSingle);
  EXPECT_EQ(parse_format("FP64"), kDouble);
  EXPECT_EQ(parse_format("double"), kDouble);
  EXPECT_EQ(parse_format("8:7"), FloatFormat(8, 7));
  EXPECT_THROW(parse_format("fp8"), std::invalid_argument);
  EXPECT_THROW(parse_format("8:"), std::invalid_argument);
  EXPECT_THROW(parse_format("1:7"), std::invalid_argument);
}

TEST(Decode, ExhaustiveHalfMatchesTextbookDecoder) {
  for (std::uint32_t bits = 0; bits <= 0xffff; ++bits) {
    const double want = half_oracle(static_cast<std::uint16_t>(bits));
    const Real got = decode({bits, kHalf});
    if (std::isnan(want)) {
      ASSERT_TRUE(std::isnan(got)) << bits;
    } else {
      ASSERT_EQ(static_cast<double>(got), want) << bits;
      ASSERT_EQ(std::signbit(got), std::signbit(want)) << bits;
    }
  }
}

TEST(Decode, SpotValues) {
  EXPECT_EQ(decode({0x3c00, kHalf}), 1.0L);
  EXPECT_EQ(decode({0x3e00, kHalf}), 1.5L);
  EXPECT_EQ(decode({0x7bff, kHalf}), 65504.0L);
  EXPECT_EQ(decode({0x0001, kHalf}), std::ldexp(1.0L, -24));
  EXPECT_EQ(decode({0x3fc00000, kSingle}), 1.5L);
  EXPECT_EQ(decode({0x3ff8000000000000, kDouble}), 1.5L);
  EXPECT_TRUE(std::isinf(decode({0x7c00, kHalf})));
}

TEST(Decode, RandomSinglesAndDoublesMatchHardware) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200000; ++i) {
    const auto b32 = static_cast<std::uint32_t>(rng());
    const float f = std::bit_cast<float>(b32);
    const Real got32 = decode({b32, kSingle});
    if (std::isnan(f))
      ASSERT_TRUE(std::isnan(got32));
    else
      ASSERT_EQ(got32, static_cast<Real>(f)) << b32;

    const std::uint64_t b64 = rng();
    const double d = std::bit_cast<double>(b64);
    const Real got64 = decode({b64, kDouble});
    if (std::isnan(d))
      ASSERT_TRUE(std::isnan(got64));
    else
      ASSERT_EQ(got64, static_cast<Real>(d)) << b64;
  }
}

TEST(RoundToFormat, MatchesHardwareConversion) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 200000; ++i) {
    const double x = normal(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
    const float f = static_cast<float>(x);
    ASSERT_EQ(round_to_format(x, kSingle).bits, std::bit_cast<std::uint32_t>(f)) << x;
    ASSERT_EQ(round_to_format(x, kDouble).bits, std::bit_cast<std::uint64_t>(x)) << x;
  }
}

TEST(RoundToFormat, FixedPointsOfEveryHalf) {
  for (std::uint32_t bits = 0; bits < 0x10000; ++bits) {
    const FloatValue v{bits, kHalf};
    if (!v.is_finite()) continue;
    ASSERT_EQ(round_to_format(decode(v), kHalf).bits, bits) << bits;
  }
}

TEST(RoundToFormat, TiesToEvenAndClamping) {
  // Midway between 1 and the next half (1 + 2^-10) rounds to the even 1.
  EXPECT_EQ(round_to_format(1.0L + std::ldexp(1.0L, -11), kHalf).bits, 0x3c00u);
  EXPECT_EQ(round_to_format(1.0L + 3 * std::ldexp(1.0L, -11), kHalf).bits, 0x3c02u);
  EXPECT_EQ(decode(round_to_format(1e10L, kHalf)), 65504.0L);
  EXPECT_EQ(decode(round_to_format(-1e10L, kHalf)), -65504.0L);
  EXPECT_EQ(decode(round_to_format(std::numeric_limits<Real>::infinity(), kSingle)),
            static_cast<Real>(std::numeric_limits<float>::max()));
  EXPECT_EQ(round_to_format(std::ldexp(1.0L, -26), kHalf).bits, 0u);
  EXPECT_THROW(round_to_format(std::numeric_limits<Real>::quiet_NaN(), kHalf), std::domain_error);
}

TEST(Neighbours, SinglesMatchNextafter) {
  std::mt19937 rng(13);
  for (int i = 0; i < 100000; ++i) {
    float f = std::bit_cast<float>(static_cast<std::uint32_t>(rng()));
    if (!std::isfinite(f) || f == std::numeric_limits<float>::max() || f == -std::numeric_limits<float>::max())
      continue;
    const FloatValue v = round_to_format(f, kSingle);
    float up = std::nextafter(f, std::numeric_limits<float>::infinity());
    float down = std::nextafter(f, -std::numeric_limits<float>::infinity());
    // The zeros are one atom: stepping from a zero skips the other zero.
    if (up == 0) up = 0.0f;
    if (f == 0) {
      up = std::numeric_limits<float>::denorm_min();
      down = -std::numeric_limits<float>::denorm_min();
    }
    ASSERT_EQ(decode(next_up(v)), static_cast<Real>(up)) << f;
    ASSERT_EQ(decode(next_down(v)), static_cast<Real>(down)) << f;
  }
}

TEST(Neighbours, RangeEndsAndErrors) {
  const FloatValue top = make_value(kHalf, false, kHalf.max_finite_magnitude());
  EXPECT_TRUE(next_up(top).is_infinite());
  EXPECT_TRUE(next_down(top.negated()).is_infinite());
  EXPECT_TRUE(next_down(top.negated()).negative());
  EXPECT_TRUE(next_up({0x8001, kHalf}).is_zero());
  EXPECT_FALSE(next_up({0x8001, kHalf}).negative());
  EXPECT_THROW(next_up({0x7c00, kHalf}), std::domain_error);
  EXPECT_THROW(next_down({0x7e00, kHalf}), std::domain_error);
}

TEST(FiniteValues, HalfEnumerationIsStrictlyIncreasingAndComplete) {
  const FiniteValues atoms = enumerate_finite(kHalf);
  ASSERT_EQ(atoms.size(), 63487u);
  EXPECT_EQ(decode(*atoms.begin()), -65504.0L);
  EXPECT_EQ(decode(*(atoms.end() - 1)), 65504.0L);
  EXPECT_TRUE(atoms.at(atoms.size() / 2).is_zero());

  Real previous = -std::numeric_limits<Real>::infinity();
  std::uint64_t ordinal = 0;
  for (FloatValue v : atoms) {
    const Real x = decode(v);
    ASSERT_GT(x, previous);
    ASSERT_EQ(atoms.ordinal_of(v), ordinal);
    if (ordinal + 1 < atoms.size()) ASSERT_EQ(next_up(v), atoms.at(ordinal + 1));
    previous = x;
    ++ordinal;
  }
  EXPECT_EQ(atoms.ordinal_of({0x8000, kHalf}), atoms.size() / 2);
}

TEST(FiniteValues, IteratorArithmetic) {
  const FiniteValues atoms(FloatFormat(3, 2));
  EXPECT_EQ(atoms.end() - atoms.begin(), static_cast<std::ptrdiff_t>(atoms.size()));
  auto it = atoms.begin() + 5;
  EXPECT_EQ(*it, atoms.at(5));
  EXPECT_EQ(it[2], atoms.at(7));
  EXPECT_LT(atoms.begin(), it);
}

TEST(FiniteValues, CapRefusesWideFormats) {
  EXPECT_NO_THROW(enumerate_finite(kSingle));
  EXPECT_THROW(enumerate_finite(kDouble), EnumerationCapError);
  EXPECT_THROW(enumerate_finite(kSingle, 16), EnumerationCapError);
  EXPECT_NO_THROW(enumerate_finite(kHalf, 16));
}
