#include "noisedim/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <system_error>

#include "noisedim/text.hpp"

namespace noisedim {

namespace fs = std::filesystem;

std::string to_string(SizeSource source) { return source == SizeSource::directory ? "directory" : "manifest"; }

namespace {

bool matches_extension(const std::string& filename, const std::vector<std::string>& lowered) {
  if (lowered.empty()) return true;
  const std::string name = to_lower(filename);
  return std::any_of(lowered.begin(), lowered.end(), [&](const std::string& ext) {
    return name.size() >= ext.size() && name.compare(name.size() - ext.size(), ext.size(), ext) == 0;
  });
}

bool is_hidden(const fs::path& p) {
  const std::string name = p.filename().string();
  return !name.empty() && name.front() == '.';
}

SizeStats summarise(const std::vector<std::uint64_t>& sizes, SizeSource source) {
  SizeStats stats;
  stats.source = source;
  stats.file_count = sizes.size();
  for (auto s : sizes) stats.total_bytes += s;
  stats.mean_bytes = stats.file_count ? static_cast<double>(stats.total_bytes) / static_cast<double>(stats.file_count) : 0;
  return stats;
}

}  // namespace

std::vector<FileSize> list_files(const fs::path& root, const std::vector<std::string>& extensions,
                                 const ScanOptions& options, std::uint64_t* skipped) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IngestError("not a readable directory: " + root.string());

  std::vector<std::string> lowered;
  for (const auto& e : extensions) lowered.push_back(to_lower(e));

  auto dir_options = fs::directory_options::skip_permission_denied;
  if (options.follow_symlinks) dir_options |= fs::directory_options::follow_directory_symlink;

  std::vector<FileSize> files;
  std::uint64_t skipped_here = 0;
  fs::recursive_directory_iterator it(root, dir_options, ec);
  if (ec) throw IngestError("cannot open directory " + root.string() + ": " + ec.message());

  for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
    if (ec) {
      ++skipped_here;
      ec.clear();
      continue;
    }
    const fs::directory_entry& entry = *it;
    if (!options.include_hidden && is_hidden(entry.path())) {
      if (entry.is_directory(ec)) it.disable_recursion_pending();
      continue;
    }
    if (!options.follow_symlinks && entry.is_symlink(ec)) {
      it.disable_recursion_pending();
      continue;
    }
    if (!entry.is_regular_file(ec)) continue;
    if (!matches_extension(entry.path().filename().string(), lowered)) continue;
    const std::uintmax_t size = entry.file_size(ec);
    if (ec) {
      ++skipped_here;
      ec.clear();
      continue;
    }
    files.push_back({fs::relative(entry.path(), root).generic_string(), static_cast<std::uint64_t>(size)});
  }

  std::sort(files.begin(), files.end(), [](const FileSize& a, const FileSize& b) { return a.name < b.name; });
  if (skipped) *skipped = skipped_here;
  return files;
}

SizeStats scan_dataset(const fs::path& root, const std::vector<std::string>& extensions, const ScanOptions& options) {
  std::uint64_t skipped = 0;
  const auto files = list_files(root, extensions, options, &skipped);
  if (files.empty()) throw IngestError("no files matched under " + root.string());

  std::vector<std::uint64_t> sizes;
  sizes.reserve(files.size());
  for (const auto& f : files) sizes.push_back(f.bytes);
  SizeStats stats = summarise(sizes, SizeSource::directory);
  stats.extension_filter = extensions;
  stats.skipped_count = skipped;
  return stats;
}

SizeStats load_manifest(const fs::path& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw IngestError("cannot open manifest " + csv_path.string());

  std::string line;
  std::size_t line_number = 0;
  bool header_seen = false;
  std::vector<std::uint64_t> sizes;
  std::set<std::string> names;
  std::uint64_t duplicates = 0;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    if (!header_seen) {
      header_seen = true;
      if (to_lower(line) != "filename,bytes")
        throw IngestError("manifest line " + std::to_string(line_number) + ": expected header 'filename,bytes'",
                          line_number);
      continue;
    }

    // Filenames may contain commas; the size is after the last one.
    const auto comma = line.rfind(',');
    if (comma == std::string::npos || comma == 0)
      throw IngestError("manifest line " + std::to_string(line_number) + ": expected 'filename,bytes'", line_number);
    const std::string name = line.substr(0, comma);
    const std::string field = line.substr(comma + 1);
    std::uint64_t bytes = 0;
    const auto [ptr, err] = std::from_chars(field.data(), field.data() + field.size(), bytes);
    if (err != std::errc{} || ptr != field.data() + field.size() || bytes == 0)
      throw IngestError("manifest line " + std::to_string(line_number) + ": size '" + field +
                            "' is not a positive integer",
                        line_number);
    if (!names.insert(name).second) ++duplicates;
    sizes.push_back(bytes);
  }

  if (!header_seen) throw IngestError("manifest " + csv_path.string() + " is empty");
  if (sizes.empty()) throw IngestError("no files matched: manifest " + csv_path.string() + " has no rows");

  SizeStats stats = summarise(sizes, SizeSource::manifest);
  stats.duplicate_count = duplicates;
  return stats;
}

void write_manifest(const fs::path& csv_path, const std::vector<FileSize>& files) {
  std::ofstream out(csv_path);
  if (!out) throw IngestError("cannot write manifest " + csv_path.string());
  out << "filename,bytes\n";
  for (const auto& f : files) out << f.name << ',' << f.bytes << '\n';
}

}  // namespace noisedim
