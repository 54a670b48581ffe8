#pragma once

// Brute-force reference implementations for the test suites. These stay
// deliberately independent of the library's search paths: no subsum pruning,
// no kernel algebra, no memoization.

#include <set>
#include <vector>

#include "zslab/group.hpp"

namespace zslab::test {

// All minimal zero-sum multisets over the support with length <= max_len:
// plain odometer enumeration of every multiset, zero-sum filter by direct
// summation, minimality by exhaustive proper-submultiset search.
std::vector<std::vector<int>> oracle_atoms(const Group& g, const std::vector<int>& support,
                                           int max_len);

// True iff some nonempty proper submultiset sums to zero (exhaustive).
bool oracle_has_proper_zero_subsum(const Group& g, const std::vector<int>& support,
                                   const std::vector<int>& mults);

// Factorization lengths by unrestricted recursion over the given atom list
// (no memo, no branching discipline). Small inputs only.
std::set<int> oracle_factorization_lengths(const std::vector<int>& b,
                                           const std::vector<std::vector<int>>& atoms);

// Every abelian group of order 1..max_order, in canonical form.
std::vector<Group> all_abelian_groups_up_to(long long max_order);

}  // namespace zslab::test
