#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "zslab/atoms.hpp"

namespace zslab {

// Content-addressed, append-only store for complete atom sets. File names
// are the SHA-256 of (canonical group literal, sorted subset, cap); files
// carry a format version tag and are written via temp-then-rename so
// concurrent readers never observe partial content. Incomplete atom sets are
// never stored.
class AtomCache {
 public:
  AtomCache() = default;  // disabled
  explicit AtomCache(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(true) {}

  bool enabled() const { return enabled_; }

  static std::string key(const Group& group, const std::vector<int>& support, int cap);

  std::optional<AtomSet> load(const Group& group, const std::vector<int>& support, int cap) const;
  void store(const AtomSet& set) const;

 private:
  std::filesystem::path dir_;
  bool enabled_ = false;
};

std::string sha256_hex(std::string_view data);

// Cached wrapper around enumerate_atoms for the default cap.
AtomSet cached_atoms(const AtomCache& cache, const Group& group, const std::vector<int>& support,
                     int cap, const Budget& budget);

}  // namespace zslab
