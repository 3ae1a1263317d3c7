#include "noisedim/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "noisedim/text.hpp"

namespace noisedim {

DimensionBound perfect_gan_dimension(double total_bits, double per_dim_entropy) {
  if (!(total_bits > 0) || !std::isfinite(total_bits))
    throw std::domain_error("perfect_gan_dimension: total bits must be positive");
  if (!(per_dim_entropy > 0) || !std::isfinite(per_dim_entropy))
    throw std::domain_error("perfect_gan_dimension: per-dimension entropy must be positive");

  DimensionBound bound;
  bound.total_bits = total_bits;
  bound.per_dim_entropy = per_dim_entropy;
  bound.n_lower_strict = (total_bits - 1) / per_dim_entropy;
  bound.n_upper_bijective = (total_bits + 2) / per_dim_entropy;

  // Settle the ceiling against the products, not just the rounded quotient.
  auto n = static_cast<std::uint64_t>(std::ceil(total_bits / per_dim_entropy));
  while (static_cast<double>(n) * per_dim_entropy < total_bits) ++n;
  while (n > 1 && static_cast<double>(n - 1) * per_dim_entropy >= total_bits) --n;
  bound.n_required = n;
  return bound;
}

SizeUnit parse_size_unit(const std::string& text) {
  const std::string lower = to_lower(text);
  if (lower == "bytes" || lower == "byte" || lower == "b") return SizeUnit::bytes;
  if (lower == "bits" || lower == "bit") return SizeUnit::bits;
  throw std::invalid_argument("unknown size unit '" + text + "' (expected bytes or bits)");
}

double to_bits(double amount, SizeUnit unit) { return unit == SizeUnit::bytes ? amount * 8 : amount; }

const DimensionBound& DimensionTable::at(const std::string& format, const std::string& dataset) const {
  for (std::size_t r = 0; r < formats.size(); ++r) {
    if (formats[r] != format) continue;
    for (std::size_t c = 0; c < datasets.size(); ++c)
      if (datasets[c] == dataset) return cells[r][c];
  }
  throw std::out_of_range("dimension table: no cell (" + format + ", " + dataset + ")");
}

DimensionTable reproduce_table3(const std::vector<std::pair<std::string, double>>& dataset_bytes,
                                const std::vector<std::pair<std::string, double>>& format_entropies) {
  DimensionTable table;
  for (const auto& [name, bytes] : dataset_bytes) table.datasets.push_back(name);
  for (const auto& [name, bits] : format_entropies) {
    table.formats.push_back(name);
    auto& row = table.cells.emplace_back();
    for (const auto& [dataset, bytes] : dataset_bytes)
      row.push_back(perfect_gan_dimension(to_bits(bytes, SizeUnit::bytes), bits));
  }
  return table;
}

std::string table_to_csv(const DimensionTable& table) {
  std::ostringstream out;
  out << "format";
  for (const auto& d : table.datasets) out << ',' << d;
  out << '\n';
  for (std::size_t r = 0; r < table.formats.size(); ++r) {
    out << table.formats[r];
    for (const auto& cell : table.cells[r]) out << ',' << cell.n_required;
    out << '\n';
  }
  return out.str();
}

}  // namespace noisedim
