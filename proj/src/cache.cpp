#include "zslab/cache.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zslab {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string AtomCache::key(const Group& group, const std::vector<int>& support, int cap) {
  std::vector<int> sorted = support;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::ostringstream in;
  in << "zslab-atoms-1|" << group.literal() << "|cap=" << cap << "|";
  for (int e : sorted) in << Group::format_element(group.coords(e)) << ";";
  return sha256_hex(in.str());
}

std::optional<AtomSet> AtomCache::load(const Group& group, const std::vector<int>& support,
                                       int cap) const {
  if (!enabled_) return std::nullopt;
  std::filesystem::path file = dir_ / (key(group, support, cap) + ".atoms");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    AtomSet set = parse_atom_set(buf.str());
    if (!set.complete) return std::nullopt;
    if (!(set.universe->group() == group)) return std::nullopt;
    return set;
  } catch (const std::exception&) {
    return std::nullopt;  // treat unreadable entries as misses
  }
}

void AtomCache::store(const AtomSet& set) const {
  if (!enabled_ || !set.complete) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  std::string name =
      key(set.universe->group(), set.universe->elements(), set.length_cap) + ".atoms";
  std::filesystem::path final_path = dir_ / name;
  if (std::filesystem::exists(final_path)) return;  // append-only
  std::filesystem::path tmp = dir_ / (name + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    out << serialize_atom_set(set);
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

AtomSet cached_atoms(const AtomCache& cache, const Group& group, const std::vector<int>& support,
                     int cap, const Budget& budget) {
  int effective = cap > 0 ? cap : group.size();
  if (auto hit = cache.load(group, support, effective)) return *hit;
  AtomSet set = enumerate_atoms(group, support, effective, budget);
  cache.store(set);
  return set;
}

}  // namespace zslab
