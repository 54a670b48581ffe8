#pragma once

#include <optional>
#include <set>
#include <vector>

#include "zslab/atoms.hpp"
#include "zslab/budget.hpp"
#include "zslab/sequence.hpp"

namespace zslab {

using LengthSet = std::set<int>;

// Successive gaps of a length set; empty iff |L| <= 1.
std::set<int> delta(const LengthSet& lengths);

// L(B) = { t : B = A_1 * ... * A_t with atoms A_i }. The empty sequence has
// L = {0}. Branches on the atoms containing the smallest-indexed element
// present in B, memoized on the remaining multiplicity vector.
//
// `atoms` must be complete for B's universe, or at least complete up to a
// length cap >= |B| (atoms longer than B cannot divide it).
LengthSet factorization_lengths(const Sequence& b, const AtomSet& atoms);

// Lattice basis of { v integer : M v = 0 }, by unimodular column reduction.
// The result satisfies M*v = 0 for every basis vector and
// rank(M) + basis size = column count; both are re-verified before returning.
std::vector<std::vector<long long>> integer_kernel_basis(
    const std::vector<std::vector<long long>>& m);

// min Delta(G0) via the integer kernel lattice of the exponent matrix, or
// absent when G0 is half-factorial.
//
// Soundness: a factorization of B is a nonnegative integer column x with
// M x = v(B), and its length is 1'x. For two factorizations x, y of the same
// B the length difference is 1'(x-y) with x-y in ker M; conversely any
// kernel vector v splits as v+ - v- with M v+ = M v-, i.e. two factorizations
// of the same product, so 1'v is a difference of lengths. Hence the set of
// length differences over all B is exactly 1'(ker M) = dZ where
// d = gcd of the coordinate sums of any lattice basis, and since
// min Delta(G0) = gcd Delta(G0) divides d and d divides every distance,
// d = min Delta(G0). d = 0 means no two factorizations of any B differ in
// length, i.e. half-factorial.
std::optional<int> min_delta(const Group& group, const std::vector<int>& support,
                             const Budget& budget = {});

struct SubsetReport {
  std::vector<int> subset;  // element indices, sorted
  long long atom_count = 0;
  int davenport = 0;
  bool half_factorial = true;
  bool lcn = true;  // every atom has cross number >= 1
  std::optional<int> min_delta;
  int kernel_rank = 0;  // rank of the kernel lattice
  bool contains_zero = false;
};

// Classifies a support: half-factoriality by the cross-number criterion
// (k(A) = 1 for every atom), min Delta by the kernel method. The two verdicts
// must agree or classification aborts with an internal error.
SubsetReport classify_subset(const Group& group, const std::vector<int>& support,
                             const Budget& budget = {});

// Same classification from an already-enumerated complete atom set.
SubsetReport classify_atoms(const AtomSet& atoms);

}  // namespace zslab
