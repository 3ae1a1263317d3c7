#ifndef NOISEDIM_REFERENCE_HPP
#define NOISEDIM_REFERENCE_HPP

// Published figures the reproduction commands compare against. Values are
// inputs and expectations only; nothing in the library derives from them.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace noisedim::reference {

/// Bumped whenever any constant below changes.
inline constexpr int kVersion = 1;

/// Published per-coordinate entropy of quantized N(0, 1), bits.
struct FormatEntropy {
  std::string_view format;
  double bits;
};
inline constexpr std::array<FormatEntropy, 3> kFormatEntropies = {{
    {"fp16", 11.36},
    {"fp32", 26.55},
    {"fp64", 55.56},
}};

/// Mean lossless-compressed bytes per image.
struct CodecBytes {
  std::string_view codec;
  double cifar10;
  double lsun_church;
};
inline constexpr std::array<CodecBytes, 3> kCodecBytes = {{
    {"PNG", 2271, 103897},
    {"WebP", 1807, 69246},
    {"JPEG-XL", 1576, 62940},
}};

/// Codec whose sizes feed the dimension table (the smallest of the three).
inline constexpr std::string_view kBestCodec = "JPEG-XL";

inline constexpr std::array<std::string_view, 2> kDatasets = {"CIFAR10", "LSUN-Church"};

/// Published noise dimensions; rows fp16, fp32, fp64, columns as kDatasets.
inline constexpr std::array<std::array<std::uint64_t, 2>, 3> kPublishedDimensions = {{
    {1110, 44324},
    {475, 18966},
    {227, 9063},
}};

/// Seven-class example source, H = 1.856401 bits.
inline const std::vector<double> kToySource = {0.57, 0.21, 0.10, 0.05, 0.035, 0.02, 0.015};

/// Published entropy of the seven-class example source, bits.
inline constexpr double kToySourceEntropy = 1.857;

double format_entropy(std::string_view format);

}  // namespace noisedim::reference

#endif  // NOISEDIM_REFERENCE_HPP
