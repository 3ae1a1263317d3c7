#include "noisedim/gauss_entropy.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "noisedim/parallel.hpp"

namespace noisedim {

namespace {

constexpr Real kInvSqrt2 = 1.0L / std::numbers::sqrt2_v<Real>;
constexpr Real kInvSqrt2Pi = std::numbers::inv_sqrtpi_v<Real> * kInvSqrt2;

// 5-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<Real, 3> kGaussNodes = {
    0.0L,
    0.5384693101056830910363144207002088L,
    0.9061798459386639927976268782993929L,
};
constexpr std::array<Real, 3> kGaussWeights = {
    0.5688888888888888888888888888888889L,
    0.4786286704993664680412915148356382L,
    0.2369268850561890875142640407199173L,
};

// Upper limit on width * (1 + |x|) for the quadrature branch; keeps the
// exponent variation across the interval below 1/32.
constexpr Real kNarrowInterval = 1.0L / 16;

Real gauss_legendre_mass(Real lower, Real upper) noexcept {
  const Real half = (upper - lower) / 2;
  const Real mid = lower + half;
  Real sum = kGaussWeights[0] * std_normal_density(mid);
  for (std::size_t k = 1; k < kGaussNodes.size(); ++k) {
    const Real offset = half * kGaussNodes[k];
    sum += kGaussWeights[k] * (std_normal_density(mid - offset) + std_normal_density(mid + offset));
  }
  return half * sum;
}

}  // namespace

Real std_normal_cdf(Real x) noexcept { return 0.5L * std::erfc(-x * kInvSqrt2); }

Real std_normal_upper_tail(Real x) noexcept { return 0.5L * std::erfc(x * kInvSqrt2); }

Real std_normal_density(Real x) noexcept { return kInvSqrt2Pi * std::exp(-0.5L * x * x); }

Real std_normal_mass(Real lower, Real upper) noexcept {
  if (!(upper > lower)) return 0;
  const Real width = upper - lower;
  const bool finite = std::isfinite(width);
  const Real reach = std::max(std::fabs(lower), std::fabs(upper));
  if (finite && width * (1 + reach) <= kNarrowInterval) return gauss_legendre_mass(lower, upper);

  Real mass = 0;
  if (lower >= 0)
    mass = std_normal_upper_tail(lower) - std_normal_upper_tail(upper);
  else
    mass = std_normal_cdf(upper) - std_normal_cdf(lower);

  // Deep-tail underflow of the CDF difference.
  if (finite && mass < std::numeric_limits<Real>::min()) mass = std_normal_density(lower + width / 2) * width;
  return mass;
}

AtomInterval atom_interval(FloatValue v) {
  if (!v.is_finite()) throw std::domain_error("atom_interval: value is not finite");
  const FloatValue magnitude = v.abs();
  const Real centre = decode(magnitude);
  const Real below = decode(next_down(magnitude));
  const Real above = decode(next_up(magnitude));
  const Real lower = (below + centre) / 2;
  const Real upper = std::isinf(above) ? above : (centre + above) / 2;
  if (v.negative() && !v.is_zero()) return {-upper, -lower};
  return {lower, upper};
}

Real pmf(FloatValue v) {
  if (!v.is_finite()) throw std::domain_error("pmf: value is not finite");
  // Evaluate on |v| so that both signs take the identical arithmetic path.
  const AtomInterval interval = atom_interval(v.abs());
  return std_normal_mass(interval.lower, interval.upper);
}

std::string to_string(EntropyMethod method) {
  return method == EntropyMethod::exact ? "exact" : "monte_carlo";
}

NormalStream::NormalStream(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  engine_.seed(sequence);
}

Real NormalStream::uniform_symmetric() {
  // 63 random bits plus a half offset: uniform on a lattice strictly inside (-1, 1).
  const auto raw = static_cast<std::int64_t>(engine_()) >> 1;
  return std::ldexp(static_cast<Real>(raw) + 0.5L, -62);
}

Real NormalStream::operator()() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  Real u = 0;
  Real v = 0;
  Real s = 0;
  do {
    u = uniform_symmetric();
    v = uniform_symmetric();
    s = u * u + v * v;
  } while (s >= 1 || s == 0);
  const Real factor = std::sqrt(-2 * std::log(s) / s);
  spare_ = v * factor;
  has_spare_ = true;
  return u * factor;
}

namespace {

// Welford accumulator, merged with Chan's pairwise update.
struct Moments {
  std::uint64_t count = 0;
  Real mean = 0;
  Real m2 = 0;

  void add(Real x) {
    ++count;
    const Real delta = x - mean;
    mean += delta / static_cast<Real>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const auto total = static_cast<Real>(count + other.count);
    const Real delta = other.mean - mean;
    mean += delta * static_cast<Real>(other.count) / total;
    m2 += other.m2 + delta * delta * static_cast<Real>(count) * static_cast<Real>(other.count) / total;
    count += other.count;
  }
};

}  // namespace

EntropyEstimate mc_entropy(FloatFormat fmt, std::uint64_t samples, std::uint64_t seed,
                           unsigned threads) {
  if (samples == 0) throw std::invalid_argument("mc_entropy: sample count must be at least 1");

  const std::uint64_t chunks = (samples + kMonteCarloChunkSize - 1) / kMonteCarloChunkSize;
  std::vector<Moments> partial(chunks);
  parallel_for(chunks, threads, [&](std::size_t chunk) {
    const std::uint64_t begin = chunk * kMonteCarloChunkSize;
    const std::uint64_t end = std::min(samples, begin + kMonteCarloChunkSize);
    NormalStream normal(seed, chunk);
    Moments moments;
    for (std::uint64_t i = begin; i < end; ++i) {
      const FloatValue z = round_to_format(normal(), fmt);
      moments.add(-std::log2(pmf(z)));
    }
    partial[chunk] = moments;
  });

  Moments total;
  for (const auto& m : partial) total.merge(m);

  EntropyEstimate est;
  est.bits_per_dim = static_cast<double>(total.mean);
  est.std_error = samples > 1 ? static_cast<double>(std::sqrt(total.m2 / static_cast<Real>(samples - 1) /
                                                              static_cast<Real>(samples)))
                              : 0.0;
  est.method = EntropyMethod::monte_carlo;
  est.sample_count = samples;
  est.format = fmt;
  est.seed = seed;
  return est;
}

EntropyEstimate exact_entropy(FloatFormat fmt, int cap_bits, unsigned threads) {
  const FiniteValues atoms = enumerate_finite(fmt, cap_bits);

  auto term = [](Real p) { return p > 0 ? -p * std::log2(p) : Real{0}; };

  // Past |x| = 160 the normal tail is below the smallest subnormal Real, so
  // every atom beyond contributes exactly zero and is skipped.
  const std::uint64_t last = round_to_format(160.0L, fmt).magnitude();
  const std::uint64_t chunk_size = std::uint64_t{1} << 16;
  const std::uint64_t chunks = (last + chunk_size - 1) / chunk_size;
  std::vector<Real> partial(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t chunk) {
    const std::uint64_t begin = 1 + chunk * chunk_size;
    const std::uint64_t end = std::min(last, begin + chunk_size - 1);
    Real sum = 0;
    for (std::uint64_t magnitude = begin; magnitude <= end; ++magnitude)
      sum += term(pmf(make_value(fmt, false, magnitude)));
    partial[chunk] = sum;
  });

  Real positive = 0;
  for (Real s : partial) positive += s;

  EntropyEstimate est;
  est.bits_per_dim = static_cast<double>(term(pmf(make_value(fmt, false, 0))) + 2 * positive);
  est.std_error = 0;
  est.method = EntropyMethod::exact;
  est.sample_count = atoms.size();
  est.format = fmt;
  est.seed = 0;
  return est;
}

double noise_entropy(double bits_per_dim, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("noise_entropy: dimension must be at least 1");
  return bits_per_dim * static_cast<double>(n);
}

double noise_entropy(const EntropyEstimate& per_dim, std::uint64_t n) {
  return noise_entropy(per_dim.bits_per_dim, n);
}

}  // namespace noisedim
