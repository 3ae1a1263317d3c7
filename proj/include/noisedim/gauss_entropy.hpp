#ifndef NOISEDIM_GAUSS_ENTROPY_HPP
#define NOISEDIM_GAUSS_ENTROPY_HPP

#include <cstdint>
#include <random>
#include <string>

#include "noisedim/floatfmt.hpp"

namespace noisedim {

// ---------------------------------------------------------------------------
// Standard normal law
// ---------------------------------------------------------------------------

/// Phi(x), the standard normal CDF. Evaluated through erfc on the side of
/// the origin where no cancellation occurs, so the lower tail keeps full
/// relative accuracy out to |x| ~ 150.
Real std_normal_cdf(Real x) noexcept;

/// 1 - Phi(x) without cancellation.
Real std_normal_upper_tail(Real x) noexcept;

Real std_normal_density(Real x) noexcept;

/// Probability that a standard normal lands in [lower, upper]. Bounds may be
/// infinite. Narrow finite intervals are integrated with 5-point
/// Gauss-Legendre, which avoids the cancellation of a CDF difference;
/// wide ones take the CDF difference on the tail side.
Real std_normal_mass(Real lower, Real upper) noexcept;

// ---------------------------------------------------------------------------
// Quantized normal PMF
// ---------------------------------------------------------------------------

/// The slice of the real line that rounds to an atom: midpoints to both
/// neighbours, widened to +-infinity at the ends of the finite range.
struct AtomInterval {
  Real lower;
  Real upper;
};

/// Throws std::domain_error for NaN or infinite `v`.
AtomInterval atom_interval(FloatValue v);

/// Mass a standard normal assigns to the atom `v` (the zeros are one atom).
/// pmf(v) == pmf(-v) bit for bit. Throws std::domain_error for NaN/infinity.
Real pmf(FloatValue v);

// ---------------------------------------------------------------------------
// Entropy of the quantized normal
// ---------------------------------------------------------------------------

enum class EntropyMethod { exact, monte_carlo };

std::string to_string(EntropyMethod method);

struct EntropyEstimate {
  double bits_per_dim = 0;  ///< H(Z) for one coordinate, bits
  double std_error = 0;     ///< Monte Carlo standard error; 0 when exact
  EntropyMethod method = EntropyMethod::exact;
  std::uint64_t sample_count = 0;  ///< draws for MC, atoms for exact
  FloatFormat format = FloatFormat::binary32();
  std::uint64_t seed = 0;
};

/// Samples per deterministic substream. Part of the reproducibility contract:
/// changing it changes every Monte Carlo result.
inline constexpr std::uint64_t kMonteCarloChunkSize = std::uint64_t{1} << 16;

/// Marsaglia polar normal generator in extended precision over mt19937_64.
///
/// One instance per chunk: the engine is seeded from (seed, chunk) through
/// std::seed_seq, so a chunk's draws do not depend on which worker runs it.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t chunk);

  Real operator()();

 private:
  Real uniform_symmetric();

  std::mt19937_64 engine_;
  Real spare_ = 0;
  bool has_spare_ = false;
};

/// Monte Carlo estimate of H(Z) = E[-log2 pmf(Z)]. Result is bit-identical
/// for equal (fmt, samples, seed) whatever `threads` is (0 = default).
/// Throws std::invalid_argument for samples == 0.
EntropyEstimate mc_entropy(FloatFormat fmt, std::uint64_t samples, std::uint64_t seed,
                           unsigned threads = 0);

/// -sum pmf log2 pmf over every atom of the format.
/// Throws EnumerationCapError for formats wider than `cap_bits`.
EntropyEstimate exact_entropy(FloatFormat fmt, int cap_bits = kDefaultEnumerationCapBits,
                              unsigned threads = 0);

/// Entropy of n independent coordinates, n * H(Z).
/// Throws std::invalid_argument for n == 0.
double noise_entropy(double bits_per_dim, std::uint64_t n);
double noise_entropy(const EntropyEstimate& per_dim, std::uint64_t n);

}  // namespace noisedim

#endif  // NOISEDIM_GAUSS_ENTROPY_HPP
