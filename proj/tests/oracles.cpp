#include "oracles.hpp"

#include <algorithm>
#include <functional>

#include "zslab/detail/arith.hpp"

namespace zslab::test {

namespace {

// Does any proper nonempty sub-choice of `mults` sum to zero? Depth-first
// over per-element counts with a running sum.
bool proper_zero_subchoice(const Group& g, const std::vector<int>& support,
                           const std::vector<int>& mults) {
  int m = static_cast<int>(support.size());
  long long total = 0;
  for (int c : mults) total += c;
  std::function<bool(int, int, long long)> walk = [&](int pos, int sum, long long picked) -> bool {
    if (pos == m) return picked > 0 && picked < total && sum == 0;
    int acc = sum;
    for (int c = 0; c <= mults[pos]; ++c) {
      if (walk(pos + 1, acc, picked + c)) return true;
      acc = g.add(acc, support[pos]);
    }
    return false;
  };
  return walk(0, 0, 0);
}

}  // namespace

bool oracle_has_proper_zero_subsum(const Group& g, const std::vector<int>& support,
                                   const std::vector<int>& mults) {
  return proper_zero_subchoice(g, support, mults);
}

std::vector<std::vector<int>> oracle_atoms(const Group& g, const std::vector<int>& support,
                                           int max_len) {
  std::vector<int> sup = support;
  std::sort(sup.begin(), sup.end());
  sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
  int m = static_cast<int>(sup.size());
  std::vector<std::vector<int>> out;
  std::vector<int> mults(m, 0);
  std::function<void(int, int, int, int)> walk = [&](int pos, int remaining, int sum, int length) {
    if (pos == m) {
      if (length > 0 && sum == 0 && !proper_zero_subchoice(g, sup, mults)) out.push_back(mults);
      return;
    }
    int acc = sum;
    for (int c = 0; c <= remaining; ++c) {
      mults[pos] = c;
      walk(pos + 1, remaining - c, acc, length + c);
      acc = g.add(acc, sup[pos]);
    }
    mults[pos] = 0;
  };
  walk(0, max_len, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> oracle_factorization_lengths(const std::vector<int>& b,
                                           const std::vector<std::vector<int>>& atoms) {
  std::set<int> out;
  bool empty = true;
  for (int x : b)
    if (x > 0) empty = false;
  if (empty) {
    out.insert(0);
    return out;
  }
  for (const auto& a : atoms) {
    bool fits = true;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (a[i] > b[i]) {
        fits = false;
        break;
      }
    if (!fits) continue;
    std::vector<int> rest = b;
    for (std::size_t i = 0; i < b.size(); ++i) rest[i] -= a[i];
    for (int l : oracle_factorization_lengths(rest, atoms)) out.insert(l + 1);
  }
  return out;
}

namespace {

void partitions_of(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
}

}  // namespace

std::vector<Group> all_abelian_groups_up_to(long long max_order) {
  std::vector<Group> out;
  for (long long n = 1; n <= max_order; ++n) {
    auto primes = detail::factorize(n);
    // one partition choice per prime exponent
    std::vector<std::vector<std::vector<int>>> options;
    for (auto [p, e] : primes) {
      std::vector<std::vector<int>> parts;
      partitions_of(e, parts);
      options.push_back(std::move(parts));
    }
    std::vector<std::size_t> pick(options.size(), 0);
    for (;;) {
      std::vector<long long> raw;
      for (std::size_t i = 0; i < options.size(); ++i)
        for (int part : options[i][pick[i]])
          raw.push_back(detail::ipow(primes[i].first, part));
      out.push_back(Group(raw));
      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == options[j].size()) pick[j++] = 0;
      if (j == pick.size()) break;
    }
  }
  return out;
}

}  // namespace zslab::test
