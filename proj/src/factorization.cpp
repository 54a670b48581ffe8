#include "zslab/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "zslab/detail/arith.hpp"

namespace zslab {

std::set<int> delta(const LengthSet& lengths) {
  std::set<int> out;
  auto it = lengths.begin();
  if (it == lengths.end()) return out;
  int prev = *it;
  for (++it; it != lengths.end(); ++it) {
    out.insert(*it - prev);
    prev = *it;
  }
  return out;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct LengthsSearch {
  const AtomSet& atoms;
  // atoms containing each universe position, precomputed
  std::vector<std::vector<int>> by_pos;
  std::unordered_map<std::vector<int>, LengthSet, VecHash> memo;

  const LengthSet& run(std::vector<int>& rest) {
    auto hit = memo.find(rest);
    if (hit != memo.end()) return hit->second;

    int pos = -1;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (rest[i] > 0) {
        pos = static_cast<int>(i);
        break;
      }
    LengthSet out;
    if (pos < 0) {
      out.insert(0);
    } else {
      for (int j : by_pos[pos]) {
        const std::vector<int>& a = atoms.atoms[j];
        bool fits = true;
        for (std::size_t i = 0; i < rest.size(); ++i)
          if (a[i] > rest[i]) {
            fits = false;
            break;
          }
        if (!fits) continue;
        std::vector<int> next = rest;
        for (std::size_t i = 0; i < rest.size(); ++i) next[i] -= a[i];
        for (int l : run(next)) out.insert(l + 1);
      }
      if (out.empty())
        throw std::logic_error("zero-sum sequence with no factorization over a complete atom set");
    }
    return memo.emplace(rest, std::move(out)).first->second;
  }
};

}  // namespace

LengthSet factorization_lengths(const Sequence& b, const AtomSet& atoms) {
  if (!(*b.universe() == *atoms.universe))
    throw std::invalid_argument("factorization_lengths: universe mismatch");
  bool usable = atoms.complete ||
                (!atoms.budget_hit && atoms.length_cap >= b.length());
  if (!usable)
    throw std::invalid_argument("factorization_lengths: atom set not complete for this input");
  if (b.sum() != 0)
    throw std::invalid_argument("factorization_lengths: sequence is not zero-sum");

  LengthsSearch search{atoms, {}, {}};
  search.by_pos.resize(b.universe()->size());
  for (std::size_t j = 0; j < atoms.atoms.size(); ++j)
    for (int i = 0; i < b.universe()->size(); ++i)
      if (atoms.atoms[j][i] > 0) search.by_pos[i].push_back(static_cast<int>(j));
  std::vector<int> rest = b.mults();
  return search.run(rest);
}

namespace {

void column_axpy(std::vector<std::vector<long long>>& m, std::vector<std::vector<long long>>& u,
                 std::size_t target, std::size_t source, long long q) {
  // column[target] -= q * column[source] in both matrices
  using detail::checked_mul;
  using detail::checked_sub;
  for (auto& row : m) row[target] = checked_sub(row[target], checked_mul(q, row[source]));
  for (auto& row : u) row[target] = checked_sub(row[target], checked_mul(q, row[source]));
}

void column_swap(std::vector<std::vector<long long>>& m, std::vector<std::vector<long long>>& u,
                 std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
  for (auto& row : u) std::swap(row[a], row[b]);
}

void column_negate(std::vector<std::vector<long long>>& m, std::vector<std::vector<long long>>& u,
                   std::size_t c) {
  for (auto& row : m) row[c] = -row[c];
  for (auto& row : u) row[c] = -row[c];
}

}  // namespace

std::vector<std::vector<long long>> integer_kernel_basis(
    const std::vector<std::vector<long long>>& input) {
  std::size_t rows = input.size();
  std::size_t cols = rows ? input[0].size() : 0;
  for (const auto& row : input)
    if (row.size() != cols) throw std::invalid_argument("kernel: ragged matrix");
  if (cols == 0) return {};

  std::vector<std::vector<long long>> m = input;
  std::vector<std::vector<long long>> u(cols, std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < rows && pivot < cols; ++r) {
    // Euclidean column reduction until row r has at most one nonzero entry
    // among the free columns.
    for (;;) {
      std::size_t best = cols;
      int nonzero = 0;
      for (std::size_t j = pivot; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        ++nonzero;
        if (best == cols || std::llabs(m[r][j]) < std::llabs(m[r][best])) best = j;
      }
      if (nonzero <= 1) {
        if (nonzero == 1) {
          column_swap(m, u, pivot, best);
          if (m[r][pivot] < 0) column_negate(m, u, pivot);
          ++pivot;
        }
        break;
      }
      for (std::size_t j = pivot; j < cols; ++j) {
        if (j == best || m[r][j] == 0) continue;
        column_axpy(m, u, j, best, m[r][j] / m[r][best]);
      }
    }
  }

  std::vector<std::vector<long long>> basis;
  for (std::size_t j = pivot; j < cols; ++j) {
    std::vector<long long> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = u[i][j];
    // canonical sign: first nonzero entry positive
    for (long long x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
    basis.push_back(std::move(v));
  }

  // Re-verify against the original matrix.
  for (const auto& v : basis)
    for (std::size_t i = 0; i < rows; ++i) {
      long long acc = 0;
      for (std::size_t j = 0; j < cols; ++j)
        acc = detail::checked_add(acc, detail::checked_mul(input[i][j], v[j]));
      if (acc != 0) throw std::logic_error("kernel basis vector fails M v = 0");
    }
  if (pivot + basis.size() != cols)
    throw std::logic_error("kernel: rank plus nullity does not match column count");
  return basis;
}

namespace {

std::optional<int> min_delta_from_kernel(const AtomSet& atoms) {
  auto basis = integer_kernel_basis(atoms.exponent_matrix());
  long long d = 0;
  for (const auto& v : basis) {
    long long s = 0;
    for (long long x : v) s = detail::checked_add(s, x);
    d = std::gcd(d, s);
  }
  if (d == 0) return std::nullopt;
  return static_cast<int>(d);
}

}  // namespace

std::optional<int> min_delta(const Group& group, const std::vector<int>& support,
                             const Budget& budget) {
  AtomSet atoms = enumerate_atoms(group, support, 0, budget);
  if (!atoms.complete) throw budget_exhausted("min_delta: atom enumeration incomplete");
  return min_delta_from_kernel(atoms);
}

SubsetReport classify_subset(const Group& group, const std::vector<int>& support,
                             const Budget& budget) {
  AtomSet atoms = enumerate_atoms(group, support, 0, budget);
  if (!atoms.complete) throw budget_exhausted("classify_subset: atom enumeration incomplete");
  return classify_atoms(atoms);
}

SubsetReport classify_atoms(const AtomSet& atoms) {
  if (!atoms.complete) throw std::invalid_argument("classify_atoms: atom set incomplete");

  SubsetReport report;
  report.subset = atoms.universe->elements();
  report.atom_count = static_cast<long long>(atoms.atoms.size());
  report.davenport = atoms.max_length;
  report.contains_zero = atoms.universe->contains_zero();

  for (std::size_t j = 0; j < atoms.atoms.size(); ++j) {
    Rational k = atoms.atom(j).cross();
    if (!(k == Rational(1))) report.half_factorial = false;
    if (k < Rational(1)) report.lcn = false;
  }

  auto basis = integer_kernel_basis(atoms.exponent_matrix());
  report.kernel_rank = static_cast<int>(basis.size());
  long long d = 0;
  for (const auto& v : basis) {
    long long s = 0;
    for (long long x : v) s = detail::checked_add(s, x);
    d = std::gcd(d, s);
  }
  if (d != 0) report.min_delta = static_cast<int>(d);

  if (report.min_delta.has_value() == report.half_factorial)
    throw std::logic_error("cross-number and kernel half-factoriality verdicts disagree");
  return report;
}

}  // namespace zslab
