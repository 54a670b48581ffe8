#include "zslab/atoms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "zslab/detail/dense_set.hpp"

namespace zslab {

std::vector<std::vector<long long>> AtomSet::exponent_matrix() const {
  std::size_t rows = universe->size();
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(atoms.size(), 0));
  for (std::size_t j = 0; j < atoms.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = atoms[j][i];
  return m;
}

namespace {

struct AtomSearch {
  const Universe& u;
  const Group& g;
  int cap;
  detail::SearchGuard& guard;
  std::vector<int> mults;
  std::vector<std::vector<int>>& out;
  bool cap_hit = false;

  // `reach` holds the sums of all nonempty subsequences of the current
  // prefix; the prefix is zero-sum-free, i.e. 0 is not in reach.
  void run(int from_pos, int length, int sum, const detail::DenseSet& reach) {
    guard.count_node();
    for (int pos = from_pos; pos < u.size(); ++pos) {
      int e = u.element(pos);
      int closed = g.add(sum, e);
      if (closed == 0) {
        guard.count_atom();
        mults[pos] += 1;
        out.push_back(mults);
        mults[pos] -= 1;
      } else if (e != 0 && !reach.test(u.negate_element(pos))) {
        if (length + 1 <= cap - 1) {
          detail::DenseSet next = reach;
          next.or_shifted(reach, u.add_table(pos));
          next.set(e);
          mults[pos] += 1;
          run(pos, length + 1, closed, next);
          mults[pos] -= 1;
        } else {
          // A live zero-sum-free branch at the cap: atoms longer than the
          // cap may exist through it.
          cap_hit = true;
        }
      }
    }
  }
};

}  // namespace

AtomSet enumerate_atoms(const Group& group, const std::vector<int>& support, int length_cap,
                        const Budget& budget) {
  if (length_cap < 0) throw std::invalid_argument("length cap must be >= 0");
  UniversePtr uni = make_universe(group, support);
  int cap = length_cap;
  if (cap == 0) {
    int from_budget = budget.max_atom_length;
    cap = from_budget > 0 ? from_budget : group.size();
  }

  AtomSet result;
  result.universe = uni;
  result.length_cap = cap;
  if (uni->size() == 0) return result;

  detail::SearchGuard guard(budget);
  AtomSearch search{*uni, group, cap, guard, std::vector<int>(uni->size(), 0), result.atoms};
  try {
    search.run(0, 0, 0, detail::DenseSet(group.size()));
  } catch (const budget_exhausted&) {
    result.budget_hit = true;
  }
  result.cap_hit = search.cap_hit;
  result.complete = !result.cap_hit && !result.budget_hit;

  std::sort(result.atoms.begin(), result.atoms.end());
  for (const auto& a : result.atoms) {
    Sequence seq(uni, a);
    if (seq.sum() != 0 || has_proper_zero_subsum(seq))
      throw std::logic_error("atom search emitted a non-minimal candidate");
    result.max_length = std::max<int>(result.max_length, static_cast<int>(seq.length()));
  }
  return result;
}

namespace {

struct ZeroSumFreeSearch {
  const Universe& u;
  const Group& g;
  detail::SearchGuard& guard;
  int best = 0;

  void run(int from_pos, int length, const detail::DenseSet& reach) {
    guard.count_node();
    best = std::max(best, length);
    for (int pos = from_pos; pos < u.size(); ++pos) {
      int e = u.element(pos);
      if (e == 0 || reach.test(u.negate_element(pos))) continue;
      detail::DenseSet next = reach;
      next.or_shifted(reach, u.add_table(pos));
      next.set(e);
      run(pos, length + 1, next);
    }
  }
};

}  // namespace

int longest_zero_sum_free(const Group& group, const std::vector<int>& support,
                          const Budget& budget) {
  UniversePtr uni = make_universe(group, support);
  detail::SearchGuard guard(budget);
  ZeroSumFreeSearch search{*uni, group, guard};
  search.run(0, 0, detail::DenseSet(group.size()));
  return search.best;
}

namespace {

// Verified Davenport constants are budget-independent facts; remember them
// per (group, support) so repeated invariant comparisons do not re-search.
std::mutex davenport_memo_mutex;
std::map<std::pair<std::vector<long long>, std::vector<int>>, DavenportResult> davenport_memo;

}  // namespace

DavenportResult davenport(const Group& group, const std::vector<int>& support,
                          const Budget& budget) {
  if (support.empty()) throw std::invalid_argument("davenport: empty support");
  std::vector<int> key_support = support;
  std::sort(key_support.begin(), key_support.end());
  key_support.erase(std::unique(key_support.begin(), key_support.end()), key_support.end());
  auto key = std::make_pair(group.factors(), key_support);
  {
    std::lock_guard<std::mutex> lock(davenport_memo_mutex);
    auto it = davenport_memo.find(key);
    if (it != davenport_memo.end()) return it->second;
  }

  AtomSet atoms = enumerate_atoms(group, key_support, 0, budget);
  DavenportResult res;
  res.value = atoms.max_length;
  bool zsf_ok = false;
  try {
    res.max_zero_sum_free = longest_zero_sum_free(group, key_support, budget);
    zsf_ok = true;
  } catch (const budget_exhausted&) {
    res.max_zero_sum_free = -1;
  }

  if (atoms.complete && zsf_ok) {
    if (res.value > res.max_zero_sum_free + 1)
      throw std::logic_error("davenport: an atom exceeds 1 + max zero-sum-free length");
    std::vector<int> covered = group.span(key_support);
    bool span_covered = true;
    for (int e : covered)
      if (e != 0 && !std::binary_search(key_support.begin(), key_support.end(), e))
        span_covered = false;
    if (span_covered && res.value != res.max_zero_sum_free + 1)
      throw std::logic_error("davenport: methods disagree on a span-covering support");
    res.verified = true;
    std::lock_guard<std::mutex> lock(davenport_memo_mutex);
    davenport_memo.emplace(key, res);
  }
  return res;
}

std::string serialize_atom_set(const AtomSet& set) {
  std::ostringstream out;
  out << "zslab-atoms-1\n";
  out << "group=" << set.universe->group().literal() << " subset=";
  for (int i = 0; i < set.universe->size(); ++i) {
    if (i) out << ";";
    out << "[" << Group::format_element(set.universe->group().coords(set.universe->element(i)))
        << "]";
  }
  out << " complete=" << (set.complete ? "true" : "false") << " cap=" << set.length_cap << "\n";
  for (const auto& a : set.atoms) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) out << " ";
      out << a[i];
    }
    out << "\n";
  }
  return out.str();
}

AtomSet parse_atom_set(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "zslab-atoms-1")
    throw std::invalid_argument("atom set: unknown format version");
  if (!std::getline(in, line)) throw std::invalid_argument("atom set: missing header");

  std::map<std::string, std::string> kv;
  std::istringstream header(line);
  std::string tok;
  while (header >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("atom set: bad header token " + tok);
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  for (const char* req : {"group", "subset", "complete", "cap"})
    if (!kv.count(req)) throw std::invalid_argument(std::string("atom set: header misses ") + req);

  Group group = Group::parse(kv["group"]);
  std::vector<int> support;
  const std::string& subset = kv["subset"];
  std::size_t pos = 0;
  while (pos < subset.size()) {
    std::size_t semi = subset.find(';', pos);
    std::string elem = subset.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    if (!elem.empty()) support.push_back(group.index(group.parse_element(elem)));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }

  AtomSet set;
  set.universe = make_universe(group, support);
  set.complete = kv["complete"] == "true";
  set.length_cap = std::stoi(kv["cap"]);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<int> mults;
    int v;
    while (row >> v) mults.push_back(v);
    if (static_cast<int>(mults.size()) != set.universe->size())
      throw std::invalid_argument("atom set: row width does not match subset");
    Sequence seq(set.universe, mults);
    set.max_length = std::max<int>(set.max_length, static_cast<int>(seq.length()));
    set.atoms.push_back(std::move(mults));
  }
  return set;
}

}  // namespace zslab
