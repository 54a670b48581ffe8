#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zslab/group.hpp"
#include "zslab/rational.hpp"

namespace zslab {

// Declared support G0 inside a group: distinct elements ordered by their
// mixed-radix index. Shared (immutable) by all sequences over the same
// support; carries the per-element addition tables the subset-sum searches
// run on.
class Universe {
 public:
  Universe(Group group, std::vector<int> elements);

  const Group& group() const { return group_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int element(int pos) const { return elements_[pos]; }
  const std::vector<int>& elements() const { return elements_; }
  int position(int element_index) const;  // -1 if absent
  long long element_order(int pos) const { return orders_[pos]; }
  int negate_element(int pos) const { return negatives_[pos]; }
  bool contains_zero() const { return !elements_.empty() && elements_[0] == 0; }
  // s -> s + element(pos) over all group indices s.
  const std::vector<int>& add_table(int pos) const { return add_tables_[pos]; }

  bool operator==(const Universe& o) const {
    return group_ == o.group_ && elements_ == o.elements_;
  }

 private:
  Group group_;
  std::vector<int> elements_;
  std::vector<long long> orders_;
  std::vector<int> negatives_;
  std::vector<std::vector<int>> add_tables_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(const Group& group, std::vector<int> elements);

// Multiset of universe elements: mults[i] = v_g(S) for g = universe element i.
// Immutable in spirit; all operations are pure.
class Sequence {
 public:
  Sequence(UniversePtr universe, std::vector<int> mults);
  static Sequence empty(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<int>& mults() const { return mults_; }
  int mult(int pos) const { return mults_[pos]; }

  long long length() const;                 // |S|
  int sum() const;                          // group index of sigma(S)
  int height() const;                       // h(S): maximal multiplicity
  std::vector<int> support() const;         // universe positions with v_g > 0
  Rational cross() const;                   // k(S) = sum v_g / ord(g), exact

  Sequence operator*(const Sequence& other) const;  // multiset union
  bool operator==(const Sequence& other) const;

  // Literal form "[1,0]^2 [0,3]^1"; the empty sequence prints as "".
  std::string str() const;
  static Sequence parse(UniversePtr universe, std::string_view text);

 private:
  UniversePtr universe_;
  std::vector<int> mults_;
};

// v_g(s) <= v_g(b) for all g (divisibility in the free abelian monoid over
// the universe). Universe mismatch is an input error.
bool divides(const Sequence& s, const Sequence& b);

struct SubsumLimits {
  long long max_length = 64;
  long long max_order = Group::kMaxDenseOrder;
};

// True iff some nonempty proper subsequence of s sums to zero. Dynamic
// programming over the set of reachable subsequence sums, indexed by the
// ambient group; this is the minimality test behind atom enumeration.
bool has_proper_zero_subsum(const Sequence& s, const SubsumLimits& limits = {});

}  // namespace zslab
