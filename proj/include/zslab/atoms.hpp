#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zslab/budget.hpp"
#include "zslab/sequence.hpp"

namespace zslab {

// The minimal zero-sum sequences over a declared support, as multiplicity
// vectors aligned to the universe, in lexicographic order.
//
// complete == true certifies that `atoms` is exactly the full atom set of
// the support; otherwise cap_hit / budget_hit say why the search was cut.
struct AtomSet {
  UniversePtr universe;
  std::vector<std::vector<int>> atoms;
  int length_cap = 0;
  bool complete = true;
  bool cap_hit = false;
  bool budget_hit = false;
  int max_length = 0;  // D(G0) when complete; otherwise a lower bound

  Sequence atom(std::size_t j) const { return Sequence(universe, atoms[j]); }
  // M[g][j] = v_g(A_j): one row per universe element, one column per atom.
  std::vector<std::vector<long long>> exponent_matrix() const;
};

// Enumerates the atoms of length <= length_cap (0 = order of the group, a
// universal upper bound for D(G0)).
//
// The search walks multisets that are nondecreasing in the element order and
// maintains the set of nonempty-subsequence sums of the current prefix. A
// prefix whose sum set reaches 0 is pruned; a prefix P with sum -g closed by
// g is minimal outright, because any proper zero subsum of P*g would leave a
// zero subsum inside P on one side. Each emitted candidate is still passed
// through an independent has_proper_zero_subsum check.
AtomSet enumerate_atoms(const Group& group, const std::vector<int>& support,
                        int length_cap = 0, const Budget& budget = {});

struct DavenportResult {
  int value = 0;        // D(G0) when verified; otherwise the best lower bound found
  bool verified = false;
  int max_zero_sum_free = -1;  // -1 when that search did not finish
};

// D(G0) by two routes: the maximal atom length of the complete atom set, and
// a separate search for the longest zero-sum-free sequence. When the support
// contains every nonzero element of its own span the two routes must satisfy
// D = 1 + max-zsf and the disagreement is an internal error; for other
// supports only D <= 1 + max-zsf is a theorem (the closing element -sigma(S)
// of a longest zero-sum-free S need not lie in G0), and that bound is what
// gets enforced.
DavenportResult davenport(const Group& group, const std::vector<int>& support,
                          const Budget& budget = {});

// Longest zero-sum-free sequence over the support, by depth-first search over
// subsum-avoiding extensions. Throws budget_exhausted if cut.
int longest_zero_sum_free(const Group& group, const std::vector<int>& support,
                          const Budget& budget = {});

// Line-oriented text format: a version line, a header line
// `group=<literal> subset=<element list> complete=<bool> cap=<int>`, then one
// multiplicity vector per line.
std::string serialize_atom_set(const AtomSet& set);
AtomSet parse_atom_set(std::string_view text);

}  // namespace zslab
