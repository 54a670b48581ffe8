#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace zslab {

// Explicit search budgets. Every aggregate computed under a budget carries a
// completeness flag; nothing is truncated silently. Zero means "library
// default" for caps and "no limit" for sizes.
//
// Node and size budgets are deterministic. time_limit_seconds is the one
// machine-dependent budget dimension; leave it at 0 when byte-identical
// output matters.
struct Budget {
  int max_subset_size = 0;            // subset enumeration; 0 = all sizes
  int max_atom_length = 0;            // atom length cap; 0 = order of the group
  long long max_atoms = 2'000'000;    // emitted atoms per enumeration
  long long max_nodes = 200'000'000;  // visited search nodes per enumeration
  double time_limit_seconds = 0.0;    // wall clock per search; 0 = none
  long long witness_attempts = 20'000;
  bool include_zero_subsets = false;  // also enumerate subsets containing 0
};

class budget_exhausted : public std::runtime_error {
 public:
  explicit budget_exhausted(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

class SearchGuard {
 public:
  explicit SearchGuard(const Budget& budget)
      : node_limit_(budget.max_nodes > 0 ? budget.max_nodes : -1),
        atom_limit_(budget.max_atoms > 0 ? budget.max_atoms : -1) {
    if (budget.time_limit_seconds > 0) {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.time_limit_seconds));
      has_deadline_ = true;
    }
  }

  void count_node() {
    ++nodes_;
    if (node_limit_ >= 0 && nodes_ > node_limit_)
      throw budget_exhausted("search node budget exhausted");
    if (has_deadline_ && (nodes_ & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() > deadline_)
      throw budget_exhausted("search time budget exhausted");
  }

  void count_atom() {
    ++atoms_;
    if (atom_limit_ >= 0 && atoms_ > atom_limit_)
      throw budget_exhausted("atom count budget exhausted");
  }

  long long nodes() const { return nodes_; }

 private:
  long long node_limit_;
  long long atom_limit_;
  long long nodes_ = 0;
  long long atoms_ = 0;
  std::chrono::steady_clock::time_point deadline_{};
  bool has_deadline_ = false;
};

}  // namespace detail
}  // namespace zslab
