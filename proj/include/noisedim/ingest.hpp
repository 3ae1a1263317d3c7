#ifndef NOISEDIM_INGEST_HPP
#define NOISEDIM_INGEST_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace noisedim {

/// Malformed input or an empty match set. `line()` is the 1-based manifest
/// line for parse errors and 0 otherwise.
class IngestError : public std::runtime_error {
 public:
  explicit IngestError(const std::string& message, std::size_t line = 0)
      : std::runtime_error(message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class SizeSource { directory, manifest };

std::string to_string(SizeSource source);

/// Byte-size statistics of a set of compressed files.
struct SizeStats {
  std::uint64_t file_count = 0;
  double mean_bytes = 0;
  std::uint64_t total_bytes = 0;
  std::vector<std::string> extension_filter;
  SizeSource source = SizeSource::directory;
  std::uint64_t skipped_count = 0;    ///< unreadable entries (directory scans)
  std::uint64_t duplicate_count = 0;  ///< repeated filenames (manifests)
};

struct ScanOptions {
  bool include_hidden = false;
  bool follow_symlinks = false;
};

struct FileSize {
  std::string name;  ///< path relative to the scan root, '/'-separated
  std::uint64_t bytes = 0;
};

/// Regular files under `root` whose names end with one of `extensions`
/// (case-insensitive; empty list matches everything), sorted by name.
/// Throws IngestError if `root` is not a directory.
std::vector<FileSize> list_files(const std::filesystem::path& root, const std::vector<std::string>& extensions,
                                 const ScanOptions& options = {}, std::uint64_t* skipped = nullptr);

/// Statistics over list_files. Throws IngestError("no files matched") when
/// nothing qualifies.
SizeStats scan_dataset(const std::filesystem::path& root, const std::vector<std::string>& extensions,
                       const ScanOptions& options = {});

/// Reads a "filename,bytes" CSV. Throws IngestError with the offending line
/// number for malformed rows or non-positive sizes.
SizeStats load_manifest(const std::filesystem::path& csv_path);

/// Writes files in the format load_manifest reads.
void write_manifest(const std::filesystem::path& csv_path, const std::vector<FileSize>& files);

}  // namespace noisedim

#endif  // NOISEDIM_INGEST_HPP
