#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zslab/budget.hpp"
#include "zslab/factorization.hpp"
#include "zslab/rational.hpp"

namespace zslab {

struct DeltaStarResult {
  std::set<int> values;
  bool complete = false;  // true iff every subset within scope was processed
};

// Delta*(G): min Delta(G0) over the non-half-factorial subsets G0 of the
// nonzero elements, enumerated in increasing size. No pruning beyond the
// budget; partial results are still certified members of Delta*(G).
DeltaStarResult delta_star(const Group& group, const Budget& budget = {});

struct MConstResult {
  int value = 0;
  bool complete = false;
};

// m(G): max of min Delta(G0) over non-half-factorial LCN subsets; 0 with
// complete = true when no such subset exists.
MConstResult m_const(const Group& group, const Budget& budget = {});

// Exact evaluation of min{n/2 + r - 2, max{r - 1, 5n/6 - 4, (n + r - 3)/2}},
// an upper bound for m(G). Requires |G| >= 3.
Rational m_upper_bound(const Group& group);
Rational m_upper_bound_value(long long n, long long r);

// max Delta*(G) = max{exp(G) - 2, r(G) - 1}; requires |G| >= 3.
long long max_delta_star_formula(const Group& group);

struct Delta1Bounds {
  std::set<int> inner;  // certified subset of Delta_1(G)
  std::set<int> outer;  // certified superset of Delta_1(G)
};

// Sandwich bounds for Delta_1(G). inner = [1, r-1] u [max{1, n-k-1}, n-2]
// plus any certified Delta* values supplied by the caller; outer =
// [1, max{m, floor(n/2) - 1}] u [max{1, n-k-1}, n-2]. m_value must be m(G)
// or a verified upper bound for it.
Delta1Bounds delta1_bounds(const Group& group, long long m_value,
                           const std::set<int>* known_delta_star = nullptr);

struct GroupInvariants {
  Group group;
  std::optional<int> davenport;  // verified value only
  DeltaStarResult delta_star;
  MConstResult m_const;
  long long max_delta_star_formula = 0;
  Delta1Bounds delta1;
};

GroupInvariants compute_group_invariants(const Group& group, const Budget& budget = {});

enum class DistinguishOutcome { isomorphic, distinguished, undistinguished };

struct DistinguishVerdict {
  DistinguishOutcome outcome = DistinguishOutcome::undistinguished;
  std::string invariant;  // set when distinguished
  std::string value_g;
  std::string value_g2;
  bool partial = false;  // some comparison was skipped for budget reasons
};

// Compares two groups through invariants that are determined by the system
// of sets of lengths: verified Davenport constants (only meaningful for
// orders >= 3; D(C1) != D(C2) although their length systems coincide), then
// max Delta* (= max Delta_1), then disjointness of the Delta_1 sandwich
// bounds. "undistinguished" is a statement about this battery only.
DistinguishVerdict distinguish(const Group& g, const Group& g2, const Budget& budget = {});

struct Theorem11Replay {
  int n_max = 0;
  long long pairs_checked = 0;
  std::vector<std::string> failures;
};

// Exact integer/rational replay of the inequality chain used to separate
// C_n^r from smaller-rank competitors, over all (n, r) with 2 <= n <= n_max
// and 3 <= r <= (n+2)/6.
Theorem11Replay theorem11_replay(int n_max);

struct PropertyFailure {
  std::string property;
  std::string instance;
  std::string detail;
};

struct PropertySuiteReport {
  std::string group;
  long long passed = 0;
  long long failed = 0;
  long long skipped = 0;
  bool complete = true;  // all subsets within budget scope were instantiated
  std::vector<PropertyFailure> failures;
};

// Instantiates, for every subset of nonzero elements within budget, each
// verifiable structural property of supports and their atom sets whose
// hypotheses hold, and asserts its conclusion. Hypothesis failures are
// skips, not errors.
PropertySuiteReport paper_property_suite(const Group& group, const Budget& budget = {});

struct WitnessResult {
  bool found = false;
  long long attempts = 0;
  std::string u;  // sequence literals over the group, set when found
  std::string v;
  std::set<int> lengths;
};

// Searches for a pair of atoms U, V with L(U*V) equal to the target set,
// trying single-generator candidates first, then structured candidates with
// order-2-heavy supports, all verified exactly. Absence within budget is
// reported as not-found, never as nonexistence.
WitnessResult witness_search(const Group& group, const std::set<int>& target,
                             const Budget& budget = {});

}  // namespace zslab
