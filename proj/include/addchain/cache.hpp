#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "addchain/chain.hpp"

namespace addchain {

struct CacheEntry {
  std::uint64_t n = 0;
  int length = 0;
  std::vector<std::uint64_t> witness_terms;
};

/// File-backed length cache. One record per line:
///   n <tab> length <tab> terms-comma-separated <tab> checksum
/// appended atomically (single write). Lines whose checksum or syntax does
/// not hold are skipped on load, so a torn final line never poisons the
/// rest of the file. Writes are write-through and serialized.
class LengthCache {
 public:
  explicit LengthCache(std::filesystem::path path);

  std::optional<CacheEntry> get(std::uint64_t n) const;
  void put(std::uint64_t n, int length, const AdditionChain& witness);

  const std::filesystem::path& path() const noexcept { return path_; }
  std::size_t size() const;
  /// Lines skipped as corrupt during the initial load.
  std::size_t corrupt_lines() const noexcept { return corrupt_; }

  static std::string format_line(std::uint64_t n, int length,
                                 const std::vector<std::uint64_t>& terms);
  static std::optional<CacheEntry> parse_line(const std::string& line);

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<std::uint64_t, CacheEntry> entries_;
  std::size_t corrupt_ = 0;
};

}  // namespace addchain
