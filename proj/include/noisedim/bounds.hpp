#ifndef NOISEDIM_BOUNDS_HPP
#define NOISEDIM_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace noisedim {

/// Noise-dimension bounds for a generator that reproduces a source exactly.
///
/// With per-coordinate noise entropy h and source codelength L bits:
/// n >= L / h is the headline requirement, (L - 1) / h the strict lower
/// bound after the Kraft correction, and (L + 2) / h what suffices when
/// the generator is bijective.
struct DimensionBound {
  double total_bits = 0;
  double per_dim_entropy = 0;
  std::uint64_t n_required = 0;  ///< ceil(total_bits / per_dim_entropy)
  double n_lower_strict = 0;     ///< (total_bits - 1) / per_dim_entropy
  double n_upper_bijective = 0;  ///< (total_bits + 2) / per_dim_entropy
};

/// Throws std::domain_error unless both arguments are positive and finite.
DimensionBound perfect_gan_dimension(double total_bits, double per_dim_entropy);

enum class SizeUnit { bytes, bits };

SizeUnit parse_size_unit(const std::string& text);
double to_bits(double amount, SizeUnit unit);

/// Row/column labelled matrix of n_required.
struct DimensionTable {
  std::vector<std::string> datasets;  ///< columns
  std::vector<std::string> formats;   ///< rows
  std::vector<std::vector<DimensionBound>> cells;  ///< cells[format][dataset]

  const DimensionBound& at(const std::string& format, const std::string& dataset) const;
};

/// perfect_gan_dimension for every (format, dataset) pair; sizes in bytes.
DimensionTable reproduce_table3(const std::vector<std::pair<std::string, double>>& dataset_bytes,
                                const std::vector<std::pair<std::string, double>>& format_entropies);

/// "format,<dataset>,..." header then one row of n_required per format.
std::string table_to_csv(const DimensionTable& table);

}  // namespace noisedim

#endif  // NOISEDIM_BOUNDS_HPP
