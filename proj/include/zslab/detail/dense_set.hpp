#pragma once

#include <cstdint>
#include <vector>

namespace zslab::detail {

// Dense bit set over group element indices. Subset-sum reachability states
// are copied per search node, so the representation stays a flat word array.
class DenseSet {
 public:
  DenseSet() = default;
  explicit DenseSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  int size() const { return size_; }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  // Inserts perm[i] for every member i of src. perm must map [0,size) into
  // [0,size); used with a universe element's addition table to shift the
  // reachable-sum set by that element.
  void or_shifted(const DenseSet& src, const std::vector<int>& perm) {
    for (std::size_t w = 0; w < src.words_.size(); ++w) {
      std::uint64_t bits = src.words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        set(perm[(static_cast<int>(w) << 6) + b]);
      }
    }
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace zslab::detail
