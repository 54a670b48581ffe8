#include "zslab/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "zslab/detail/arith.hpp"
#include "zslab/detail/parallel.hpp"

namespace zslab {

namespace {

long long rational_floor(const Rational& r) {
  long long q = r.num() / r.den();
  if (r.num() < 0 && r.num() % r.den() != 0) --q;
  return q;
}

void add_interval(std::set<int>& out, long long lo, long long hi) {
  for (long long d = lo; d <= hi; ++d) out.insert(static_cast<int>(d));
}

std::string element_literal(const Group& g, int index) {
  return "[" + Group::format_element(g.coords(index)) + "]";
}

std::string subset_literal(const Group& g, const std::vector<int>& elems) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += element_literal(g, elems[i]);
  }
  return out + "}";
}

// All nonempty subsets of the pool in increasing size, sizes capped by the
// budget. Returns whether every size was in scope.
std::pair<std::vector<std::vector<int>>, bool> list_subsets(const std::vector<int>& pool,
                                                            const Budget& budget) {
  int p = static_cast<int>(pool.size());
  int cap = budget.max_subset_size > 0 ? std::min(p, budget.max_subset_size) : p;
  std::vector<std::vector<int>> subsets;
  std::vector<int> picked;
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      std::vector<int> subset;
      subset.reserve(picked.size());
      for (int i : picked) subset.push_back(pool[i]);
      subsets.push_back(std::move(subset));
      return;
    }
    for (int i = start; i <= p - remaining; ++i) {
      picked.push_back(i);
      rec(i + 1, remaining - 1);
      picked.pop_back();
    }
  };
  for (int s = 1; s <= cap; ++s) rec(0, s);
  return {std::move(subsets), cap == p};
}

struct ClassifiedSubsets {
  std::vector<std::vector<int>> subsets;
  std::vector<std::optional<SubsetReport>> reports;
  bool complete = false;
};

ClassifiedSubsets classify_all(const Group& group, const Budget& budget) {
  std::vector<int> pool =
      budget.include_zero_subsets ? [&] {
        std::vector<int> all{0};
        auto nz = group.nonzero_elements();
        all.insert(all.end(), nz.begin(), nz.end());
        return all;
      }()
                                  : group.nonzero_elements();
  ClassifiedSubsets out;
  auto [subsets, all_sizes] = list_subsets(pool, budget);
  out.subsets = std::move(subsets);
  out.reports.resize(out.subsets.size());
  detail::parallel_for(out.subsets.size(), [&](std::size_t i) {
    try {
      out.reports[i] = classify_subset(group, out.subsets[i], budget);
    } catch (const budget_exhausted&) {
      out.reports[i] = std::nullopt;
    }
  });
  out.complete = all_sizes;
  for (const auto& r : out.reports)
    if (!r) out.complete = false;
  return out;
}

}  // namespace

DeltaStarResult delta_star(const Group& group, const Budget& budget) {
  ClassifiedSubsets cls = classify_all(group, budget);
  DeltaStarResult res;
  res.complete = cls.complete;
  for (const auto& r : cls.reports)
    if (r && r->min_delta) res.values.insert(*r->min_delta);
  return res;
}

MConstResult m_const(const Group& group, const Budget& budget) {
  ClassifiedSubsets cls = classify_all(group, budget);
  MConstResult res;
  res.complete = cls.complete;
  for (const auto& r : cls.reports)
    if (r && r->lcn && r->min_delta) res.value = std::max(res.value, *r->min_delta);
  return res;
}

Rational m_upper_bound_value(long long n, long long r) {
  Rational a = Rational(n, 2) + Rational(r - 2);
  Rational b = std::max({Rational(r - 1), Rational(5 * n - 24, 6), Rational(n + r - 3, 2)});
  return std::min(a, b);
}

Rational m_upper_bound(const Group& group) {
  if (group.order() < 3) throw std::invalid_argument("m_upper_bound requires |G| >= 3");
  return m_upper_bound_value(group.exponent(), group.rank());
}

long long max_delta_star_formula(const Group& group) {
  if (group.order() < 3) throw std::invalid_argument("max_delta_star_formula requires |G| >= 3");
  return std::max(group.exponent() - 2, static_cast<long long>(group.rank()) - 1);
}

Delta1Bounds delta1_bounds(const Group& group, long long m_value,
                           const std::set<int>* known_delta_star) {
  if (group.order() < 3) throw std::invalid_argument("delta1_bounds requires |G| >= 3");
  long long n = group.exponent();
  long long r = group.rank();
  long long k = group.cn_multiplicity();

  Delta1Bounds b;
  add_interval(b.inner, 1, r - 1);
  add_interval(b.inner, std::max<long long>(1, n - k - 1), n - 2);
  if (known_delta_star)
    for (int d : *known_delta_star) b.inner.insert(d);
  add_interval(b.outer, 1, std::max<long long>(m_value, n / 2 - 1));
  add_interval(b.outer, std::max<long long>(1, n - k - 1), n - 2);
  for (int d : b.inner)
    if (!b.outer.count(d))
      throw std::logic_error("delta1 inner bound escapes the outer bound; m_value is not a "
                             "valid upper bound for m(G)");
  return b;
}

GroupInvariants compute_group_invariants(const Group& group, const Budget& budget) {
  GroupInvariants inv;
  inv.group = group;
  if (group.order() >= 2 && group.order() <= Group::kMaxDenseOrder) {
    try {
      DavenportResult d = davenport(group, group.nonzero_elements(), budget);
      if (d.verified) inv.davenport = d.value;
    } catch (const budget_exhausted&) {
    }
  }
  inv.delta_star = delta_star(group, budget);
  inv.m_const = m_const(group, budget);
  if (group.order() >= 3) {
    inv.max_delta_star_formula = max_delta_star_formula(group);
    long long m_for_outer =
        inv.m_const.complete ? inv.m_const.value : rational_floor(m_upper_bound(group));
    inv.delta1 = delta1_bounds(group, m_for_outer, &inv.delta_star.values);
    if (inv.delta_star.complete) {
      long long mx = inv.delta_star.values.empty() ? 0 : *inv.delta_star.values.rbegin();
      if (mx != inv.max_delta_star_formula)
        throw std::logic_error("complete Delta* enumeration contradicts the max formula");
    }
  }
  return inv;
}

DistinguishVerdict distinguish(const Group& g, const Group& g2, const Budget& budget) {
  DistinguishVerdict v;
  if (g == g2) {
    v.outcome = DistinguishOutcome::isomorphic;
    return v;
  }

  bool partial = false;
  bool both_large = g.order() >= 3 && g2.order() >= 3;

  if (both_large) {
    auto verified_davenport = [&](const Group& grp) -> std::optional<int> {
      if (grp.order() > Group::kMaxDenseOrder) {
        partial = true;
        return std::nullopt;
      }
      try {
        DavenportResult d = davenport(grp, grp.nonzero_elements(), budget);
        if (d.verified) return d.value;
      } catch (const budget_exhausted&) {
      }
      partial = true;
      return std::nullopt;
    };
    std::optional<int> d1 = verified_davenport(g);
    std::optional<int> d2 = verified_davenport(g2);
    if (d1 && d2 && *d1 != *d2) {
      v.outcome = DistinguishOutcome::distinguished;
      v.invariant = "davenport";
      v.value_g = std::to_string(*d1);
      v.value_g2 = std::to_string(*d2);
      return v;
    }
  }

  auto max_ds = [](const Group& grp) -> std::optional<long long> {
    if (grp.order() < 3) return std::nullopt;  // Delta* is empty for these
    return max_delta_star_formula(grp);
  };
  std::optional<long long> m1 = max_ds(g);
  std::optional<long long> m2 = max_ds(g2);
  if (m1 != m2) {
    v.outcome = DistinguishOutcome::distinguished;
    v.invariant = "max_delta_star";
    v.value_g = m1 ? std::to_string(*m1) : "none";
    v.value_g2 = m2 ? std::to_string(*m2) : "none";
    return v;
  }

  if (both_large) {
    Delta1Bounds b1 = delta1_bounds(g, rational_floor(m_upper_bound(g)));
    Delta1Bounds b2 = delta1_bounds(g2, rational_floor(m_upper_bound(g2)));
    for (int d : b1.inner)
      if (!b2.outer.count(d)) {
        v.outcome = DistinguishOutcome::distinguished;
        v.invariant = "delta1_bounds";
        v.value_g = std::to_string(d) + " certified inside Delta1";
        v.value_g2 = std::to_string(d) + " excluded by the outer bound";
        return v;
      }
    for (int d : b2.inner)
      if (!b1.outer.count(d)) {
        v.outcome = DistinguishOutcome::distinguished;
        v.invariant = "delta1_bounds";
        v.value_g = std::to_string(d) + " excluded by the outer bound";
        v.value_g2 = std::to_string(d) + " certified inside Delta1";
        return v;
      }
  }

  v.outcome = DistinguishOutcome::undistinguished;
  v.partial = partial;
  return v;
}

Theorem11Replay theorem11_replay(int n_max) {
  if (n_max < 4) throw std::invalid_argument("theorem11_replay requires n_max >= 4");
  Theorem11Replay rep;
  rep.n_max = n_max;
  for (long long n = 2; n <= n_max; ++n) {
    for (long long r = 3; 6 * r <= n + 2; ++r) {
      ++rep.pairs_checked;
      auto fail = [&](const std::string& what) {
        rep.failures.push_back("(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ") " + what);
      };

      // n - r - 1 > 5n/6 - 4 must hold in range, and its negation must be
      // exactly r >= n/6 + 3.
      bool strict = 6 * (n - r - 1) > 5 * n - 24;
      bool negation = 6 * r >= n + 18;
      if (strict == negation) fail("bound n-r-1 > 5n/6-4 and its negation r >= n/6+3 disagree");
      if (!strict) fail("n-r-1 > 5n/6-4 fails");

      // n - 2r - 1 >= n/2 + r - 2 >= floor(n/2) - 1
      if (2 * (n - 2 * r - 1) < n + 2 * r - 4) fail("n-2r-1 >= n/2+r-2 fails");
      if (2 * (n / 2 - 1) > n + 2 * r - 4) fail("n/2+r-2 >= floor(n/2)-1 fails");

      // m-bound(C_n^r) <= n - 2r - 1
      Rational m_ub = m_upper_bound_value(n, r);
      if (m_ub > Rational(n - 2 * r - 1)) fail("m upper bound exceeds n-2r-1");

      // n - 2r lies strictly between the two outer intervals of C_n^r (k = r)
      long long gap = n - 2 * r;
      long long low_hi = std::max(rational_floor(m_ub), n / 2 - 1);
      if (gap < 1) fail("n-2r < 1");
      if (gap <= low_hi) fail("n-2r not above the low outer interval");
      if (gap >= std::max<long long>(1, n - r - 1)) fail("n-2r reaches the high outer interval");
    }
  }
  return rep;
}

// --------------------------------------------------------------------------
// paper_property_suite

namespace {

struct SuiteEntry {
  std::vector<int> elems;
  AtomSet atoms;
  SubsetReport report;
};

struct SuiteContext {
  const Group& group;
  std::vector<int> pool;                       // nonzero elements
  std::unordered_map<std::uint64_t, SuiteEntry> entries;
  std::unordered_map<std::uint64_t, std::vector<char>> span_memo;  // mask over pool
  PropertySuiteReport* report;

  const std::vector<char>& span_of(std::uint64_t mask) {
    auto it = span_memo.find(mask);
    if (it != span_memo.end()) return it->second;
    std::vector<int> gens;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) gens.push_back(pool[i]);
    std::vector<char> in(group.size(), 0);
    for (int e : group.span(gens)) in[e] = 1;
    return span_memo.emplace(mask, std::move(in)).first->second;
  }

  bool half_factorial(std::uint64_t mask) {
    if (mask == 0) return true;
    return entries.at(mask).report.half_factorial;
  }

  bool minimal_non_half_factorial(std::uint64_t mask) {
    if (half_factorial(mask)) return false;
    for (std::uint64_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
      if (!half_factorial(sub)) return false;
    return true;
  }

  void pass() { ++report->passed; }
  void skip() { ++report->skipped; }
  void check(bool ok, const std::string& property, const std::string& instance,
             const std::string& detail) {
    if (ok) {
      ++report->passed;
    } else {
      ++report->failed;
      if (report->failures.size() < 200) report->failures.push_back({property, instance, detail});
    }
  }
};

// smallest s in [1, ord(g)] with s*g inside the subgroup, plus the gcd of all
// such s; the multiples form a subgroup of Z, so the two agree when the
// arithmetic is right.
std::pair<int, long long> multiples_in_span(const Group& g, const std::vector<char>& in_span,
                                            int elem) {
  long long og = g.element_order(elem);
  int acc = 0;
  int min_s = static_cast<int>(og);
  long long gcd_s = 0;
  for (long long s = 1; s <= og; ++s) {
    acc = g.add(acc, elem);
    if (in_span[acc]) {
      min_s = std::min<int>(min_s, static_cast<int>(s));
      gcd_s = std::gcd(gcd_s, s);
    }
  }
  return {min_s, gcd_s};
}

}  // namespace

PropertySuiteReport paper_property_suite(const Group& group, const Budget& budget) {
  if (group.order() < 3) throw std::invalid_argument("property suite requires |G| >= 3");
  PropertySuiteReport rep;
  rep.group = group.literal();
  const long long n = group.exponent();
  const long long r = group.rank();

  std::vector<int> pool = group.nonzero_elements();
  if (pool.size() > 63)
    throw std::invalid_argument("property suite supports at most 63 nonzero elements; "
                                "use a subset-size budget on a smaller group");
  int p = static_cast<int>(pool.size());
  int cap = budget.max_subset_size > 0 ? std::min(p, budget.max_subset_size) : p;
  rep.complete = (cap == p);

  SuiteContext ctx{group, pool, {}, {}, &rep};

  // Classify every subset within scope (and remember the atom sets).
  std::vector<std::uint64_t> masks;
  {
    std::vector<int> picked;
    std::function<void(int, int, std::uint64_t)> rec = [&](int start, int remaining,
                                                           std::uint64_t mask) {
      if (remaining == 0) {
        masks.push_back(mask);
        return;
      }
      for (int i = start; i <= p - remaining; ++i) rec(i + 1, remaining - 1, mask | (1ull << i));
    };
    for (int s = 1; s <= cap; ++s) rec(0, s, 0);
  }
  std::vector<std::optional<SuiteEntry>> slots(masks.size());
  detail::parallel_for(masks.size(), [&](std::size_t i) {
    std::vector<int> elems;
    for (int b = 0; b < p; ++b)
      if (masks[i] >> b & 1) elems.push_back(pool[b]);
    try {
      SuiteEntry e;
      e.elems = elems;
      e.atoms = enumerate_atoms(group, elems, 0, budget);
      if (!e.atoms.complete) throw budget_exhausted("suite: incomplete atoms");
      e.report = classify_atoms(e.atoms);
      slots[i] = std::move(e);
    } catch (const budget_exhausted&) {
      slots[i] = std::nullopt;
    }
  });
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (slots[i])
      ctx.entries.emplace(masks[i], std::move(*slots[i]));
    else
      rep.complete = false;
  }

  auto pos_of = [&](int elem) {
    auto it = std::lower_bound(pool.begin(), pool.end(), elem);
    return static_cast<int>(it - pool.begin());
  };

  // ---- group-level checks -------------------------------------------------

  // ord(g) - 2 is a minimal distance, realized by the subset {g, -g}.
  for (int e : pool) {
    long long og = group.element_order(e);
    int ne = group.negate(e);
    if (og < 3 || e > ne) {
      ctx.skip();
      continue;
    }
    std::uint64_t mask = (1ull << pos_of(e)) | (1ull << pos_of(ne));
    auto it = ctx.entries.find(mask);
    if (it == ctx.entries.end()) {
      ctx.skip();
      continue;
    }
    const auto& md = it->second.report.min_delta;
    ctx.check(md && *md == og - 2, "lemma-3.2.1",
              "g=" + element_literal(group, e),
              "min delta of {g,-g} is " + (md ? std::to_string(*md) : std::string("absent")) +
                  ", expected " + std::to_string(og - 2));
  }

  // [1, r-1] inside Delta*(G) (needs the complete enumeration).
  if (r >= 2) {
    if (rep.complete) {
      std::set<int> ds;
      for (const auto& [mask, entry] : ctx.entries)
        if (entry.report.min_delta) ds.insert(*entry.report.min_delta);
      for (long long d = 1; d <= r - 1; ++d)
        ctx.check(ds.count(static_cast<int>(d)) > 0, "lemma-3.2.2", "d=" + std::to_string(d),
                  "no subset realizes min delta " + std::to_string(d));
    } else {
      ctx.skip();
    }
  } else {
    ctx.skip();
  }

  // ---- per-subset checks --------------------------------------------------

  for (const auto& [mask, entry] : ctx.entries) {
    const std::vector<int>& elems = entry.elems;
    const SubsetReport& sr = entry.report;
    const AtomSet& atoms = entry.atoms;
    const std::string g0 = subset_literal(group, elems);
    int g0_size = static_cast<int>(elems.size());

    std::vector<Rational> crosses;
    crosses.reserve(atoms.atoms.size());
    for (std::size_t j = 0; j < atoms.atoms.size(); ++j) crosses.push_back(atoms.atom(j).cross());

    // gcd/min chains and the derived atom existence statements, per element.
    for (int gi = 0; gi < g0_size; ++gi) {
      int e = elems[gi];
      long long og = group.element_order(e);
      int upos = atoms.universe->position(e);

      long long a_gcd = 0;
      int a_min = 0;
      for (const auto& a : atoms.atoms) {
        a_gcd = std::gcd(a_gcd, static_cast<long long>(a[upos]));
        if (a[upos] > 0 && (a_min == 0 || a[upos] < a_min)) a_min = a[upos];
      }
      auto [s_min, s_gcd] = multiples_in_span(group, ctx.span_of(mask & ~(1ull << pos_of(e))), e);
      bool chain_ok = a_gcd == a_min && a_min == s_min && s_min == s_gcd && og % s_min == 0;
      ctx.check(chain_ok, "lemma-3.1.1", g0 + " g=" + element_literal(group, e),
                "gcd/min chain: atoms gcd " + std::to_string(a_gcd) + ", atoms min " +
                    std::to_string(a_min) + ", span min " + std::to_string(s_min) +
                    ", span gcd " + std::to_string(s_gcd));

      // smallest s with s*g in <G0 - g>, below ord(g): a structured atom
      // with bounded support must exist for every prime of ord(s*g).
      int s = s_min;
      if (s < og) {
        int sg = 0;
        for (int t = 0; t < s; ++t) sg = group.add(sg, e);
        long long osg = group.element_order(sg);
        ctx.check(osg > 1, "lemma-3.3", g0 + " g=" + element_literal(group, e),
                  "ord(s*g) = 1 although s < ord(g)");
        for (auto [prime, exp] : detail::factorize(osg)) {
          bool found = false;
          for (std::size_t j = 0; j < atoms.atoms.size() && !found; ++j) {
            int v = atoms.atoms[j][upos];
            if (v < s || 2 * v > og || v % s != 0 || (v / s) % prime == 0) continue;
            int supp = 0;
            for (int x : atoms.atoms[j])
              if (x > 0) ++supp;
            if (supp >= 2 && supp <= r + 1) found = true;
          }
          ctx.check(found, "lemma-3.3",
                    g0 + " g=" + element_literal(group, e) + " p=" + std::to_string(prime),
                    "no atom with 2 <= |supp| <= r+1, s <= v_g <= ord(g)/2, p not dividing v_g/s");
        }

        if (g0_size >= r + 2) {
          bool found = false;
          std::uint64_t rest = mask & ~(1ull << pos_of(e));
          for (std::uint64_t sub = (rest - 1) & rest; sub && !found; sub = (sub - 1) & rest) {
            const auto& in_span = ctx.span_of(sub);
            int acc = 0;
            for (long long t = 1; t < og && !found; ++t) {
              acc = group.add(acc, e);
              if (in_span[acc]) found = true;
            }
          }
          ctx.check(found, "lemma-3.3.1", g0 + " g=" + element_literal(group, e),
                    "no proper E < G0-g with s0*g in <E> for some s0 < ord(g)");
        } else {
          ctx.skip();
        }

        if (s == 1 && detail::is_prime_power(og)) {
          bool found = false;
          std::uint64_t rest = mask & ~(1ull << pos_of(e));
          for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
            if (sub && __builtin_popcountll(sub) <= r && ctx.span_of(sub)[e]) {
              found = true;
              break;
            }
            if (sub == 0) break;
          }
          ctx.check(found, "lemma-3.3.2", g0 + " g=" + element_literal(group, e),
                    "no E inside G0-g with |E| <= r and g in <E>");
        } else {
          ctx.skip();
        }
      } else {
        ctx.skip();
      }
    }

    // an atom of small cross number forces a small minimal distance
    bool has_small_cross = false;
    for (const auto& k : crosses)
      if (k < Rational(1)) has_small_cross = true;
    if (has_small_cross) {
      ctx.check(sr.min_delta && *sr.min_delta <= n - 2, "lemma-3.2.3a", g0,
                "min delta exceeds exp(G)-2 despite an atom of cross number < 1");
    } else {
      ctx.skip();
    }

    if (sr.lcn && !sr.half_factorial) {
      ctx.check(sr.min_delta && *sr.min_delta <= g0_size - 2, "lemma-3.2.3b", g0,
                "LCN set with min delta > |G0|-2");
    } else {
      ctx.skip();
    }

    // hypotheses shared by the two structural lemmas on minimal
    // non-half-factorial LCN sets
    bool min_non_hf = ctx.minimal_non_half_factorial(mask);
    bool all_in_span_rest = true;
    bool none_in_span_rest2 = true;
    if (min_non_hf && g0_size >= r + 2) {
      for (int gi = 0; gi < g0_size && all_in_span_rest; ++gi)
        if (!ctx.span_of(mask & ~(1ull << pos_of(elems[gi])))[elems[gi]]) all_in_span_rest = false;
      for (int gi = 0; gi < g0_size && none_in_span_rest2; ++gi)
        for (int gj = 0; gj < g0_size && none_in_span_rest2; ++gj) {
          if (gi == gj) continue;
          std::uint64_t sub = mask & ~(1ull << pos_of(elems[gi])) & ~(1ull << pos_of(elems[gj]));
          if (ctx.span_of(sub)[elems[gi]]) none_in_span_rest2 = false;
        }
    }

    if (min_non_hf && sr.lcn && g0_size >= r + 2 && all_in_span_rest && none_in_span_rest2) {
      ctx.check(2 * g0_size <= 2 * r + n, "lemma-3.4", g0, "|G0| > r + n/2");
      bool full_support_all_big = true;
      for (std::size_t j = 0; j < atoms.atoms.size(); ++j) {
        int supp = 0;
        for (int x : atoms.atoms[j])
          if (x > 0) ++supp;
        if (supp == g0_size && !(crosses[j] > Rational(1))) full_support_all_big = false;
      }
      if (full_support_all_big) {
        ctx.check(sr.min_delta && 6 * *sr.min_delta <= 5 * n - 24, "lemma-3.4", g0,
                  "min delta exceeds 5n/6-4");
      } else {
        ctx.skip();
      }
    } else {
      ctx.skip();
    }

    // integrality of cross numbers and divisibility of min delta
    if (!sr.half_factorial) {
      bool hyp = false;
      for (int gi = 0; gi < g0_size && !hyp; ++gi) {
        std::uint64_t rest = mask & ~(1ull << pos_of(elems[gi]));
        if (!ctx.half_factorial(rest)) continue;
        long long og = group.element_order(elems[gi]);
        int upos = atoms.universe->position(elems[gi]);
        for (std::size_t j = 0; j < atoms.atoms.size(); ++j)
          if (crosses[j] == Rational(1) &&
              std::gcd(static_cast<long long>(atoms.atoms[j][upos]), og) == 1)
            hyp = true;
      }
      if (hyp) {
        bool all_integer = true;
        long long gcd_k = 0;
        for (const auto& k : crosses) {
          if (!k.is_integer()) all_integer = false;
          else gcd_k = std::gcd(gcd_k, k.num() - 1);
        }
        ctx.check(all_integer, "lemma-3.5", g0, "an atom has non-integer cross number");
        if (all_integer)
          ctx.check(sr.min_delta && gcd_k % *sr.min_delta == 0, "lemma-3.5", g0,
                    "min delta does not divide gcd{k(A)-1}");
      } else {
        ctx.skip();
      }
    } else {
      ctx.skip();
    }

    // the (n+r-3)/2 bound
    if (!detail::is_prime_power(n) && min_non_hf && sr.lcn && g0_size >= r + 2 &&
        all_in_span_rest) {
      bool prop_a = none_in_span_rest2 && [&] {
        for (std::size_t j = 0; j < atoms.atoms.size(); ++j) {
          int supp = 0;
          for (int x : atoms.atoms[j])
            if (x > 0) ++supp;
          if (supp == g0_size && crosses[j] == Rational(1)) return true;
        }
        return false;
      }();
      bool prop_b = false;
      const auto& full_span = ctx.span_of(mask);
      for (std::uint64_t sub = (mask - 1) & mask; sub && !prop_b; sub = (sub - 1) & mask) {
        if (__builtin_popcountll(sub) > g0_size - 2) continue;
        if (ctx.span_of(sub) == full_span) prop_b = true;
      }
      if (prop_a || prop_b) {
        ctx.check(sr.min_delta && 2 * *sr.min_delta <= n + r - 3, "lemma-3.6", g0,
                  "min delta exceeds (n+r-3)/2");
      } else {
        ctx.skip();
      }
    } else {
      ctx.skip();
    }
  }

  // enumerated m(G) against the closed-form upper bound
  if (rep.complete) {
    int m_enum = 0;
    for (const auto& [mask, entry] : ctx.entries)
      if (entry.report.lcn && entry.report.min_delta)
        m_enum = std::max(m_enum, *entry.report.min_delta);
    ctx.check(Rational(m_enum) <= m_upper_bound(group), "proposition-3.7", "m(G)",
              "enumerated m(G) = " + std::to_string(m_enum) + " exceeds the bound " +
                  m_upper_bound(group).str());
  } else {
    ctx.skip();
  }

  // arithmetic consequences when the rank is small against the exponent
  if (r >= 2 && 4 * r <= n - 2) {
    long long k = group.cn_multiplicity();
    Rational m_ub = m_upper_bound(group);
    ctx.check(m_ub <= Rational(n + 2 * r - 4, 2), "proposition-3.8", "m-bound",
              "m upper bound exceeds n/2+r-2");
    long long low_hi = std::max(rational_floor(m_ub), n / 2 - 1);
    ctx.check(low_hi <= n - k - 3, "proposition-3.8", "gap",
              "n-k-2 is not excluded by the outer bound");
    ctx.check(n - 2 >= r - 1, "proposition-3.8", "max",
              "max Delta1 is not exp(G)-2 under the hypothesis");
  } else {
    ctx.skip();
  }

  return rep;
}

// --------------------------------------------------------------------------
// witness_search

namespace {

struct PairCheck {
  bool confirmed = false;
  std::set<int> lengths;
};

// Exact evaluation of L(U*V) over the combined support. Capped atom
// enumeration (cap = |UV|) is sound here because longer atoms cannot divide
// UV. Unconfirmed results (budget) are treated as misses.
PairCheck check_pair(const Group& group, const std::map<int, int>& u_mults,
                     const std::map<int, int>& v_mults, const Budget& budget) {
  std::vector<int> elems;
  for (const auto& [e, m] : u_mults) elems.push_back(e);
  for (const auto& [e, m] : v_mults) elems.push_back(e);
  UniversePtr uni = make_universe(group, elems);
  std::vector<int> mults(uni->size(), 0);
  long long total = 0;
  for (const auto& [e, m] : u_mults) {
    mults[uni->position(e)] += m;
    total += m;
  }
  for (const auto& [e, m] : v_mults) {
    mults[uni->position(e)] += m;
    total += m;
  }

  Budget vb = budget;
  vb.max_nodes = std::min<long long>(budget.max_nodes, 3'000'000);
  vb.max_atoms = std::min<long long>(budget.max_atoms, 300'000);
  PairCheck out;
  AtomSet atoms = enumerate_atoms(group, uni->elements(), static_cast<int>(total), vb);
  if (atoms.budget_hit) return out;
  try {
    out.lengths = factorization_lengths(Sequence(uni, mults), atoms);
    out.confirmed = true;
  } catch (const budget_exhausted&) {
  }
  return out;
}

bool is_atom(const Group& group, const std::map<int, int>& mults) {
  std::vector<int> elems;
  for (const auto& [e, m] : mults) elems.push_back(e);
  UniversePtr uni = make_universe(group, elems);
  std::vector<int> v(uni->size(), 0);
  for (const auto& [e, m] : mults) v[uni->position(e)] = m;
  Sequence s(uni, v);
  return s.length() > 0 && s.sum() == 0 && !has_proper_zero_subsum(s);
}

std::string literal_of(const Group& group, const std::map<int, int>& mults) {
  std::string out;
  for (const auto& [e, m] : mults) {
    if (!out.empty()) out += " ";
    out += element_literal(group, e) + "^" + std::to_string(m);
  }
  return out;
}

std::map<int, int> negate_multiset(const Group& group, const std::map<int, int>& mults) {
  std::map<int, int> out;
  for (const auto& [e, m] : mults) out[group.negate(e)] += m;
  return out;
}

}  // namespace

WitnessResult witness_search(const Group& group, const std::set<int>& target,
                             const Budget& budget) {
  if (target.empty() || *target.begin() != 2)
    throw std::invalid_argument("witness_search: target must be finite with minimum 2");
  WitnessResult res;
  const long long limit = budget.witness_attempts > 0 ? budget.witness_attempts : 20'000;
  const int k = *target.rbegin();
  const int order = group.size();

  auto try_pair = [&](const std::map<int, int>& u, const std::map<int, int>& v) {
    ++res.attempts;
    PairCheck pc = check_pair(group, u, v, budget);
    if (pc.confirmed && pc.lengths == target) {
      res.found = true;
      res.u = literal_of(group, u);
      res.v = literal_of(group, v);
      res.lengths = pc.lengths;
    }
    return res.found;
  };

  // Single-generator witnesses: L(g^m (-g)^m) = {2, m} with m = ord(g).
  if (target.size() == 2) {
    for (int e = 1; e < order && res.attempts < limit; ++e) {
      if (group.element_order(e) != k || e > group.negate(e)) continue;
      std::map<int, int> u{{e, k}};
      if (try_pair(u, negate_multiset(group, u))) return res;
    }
  }

  // Structured candidates with order-2-heavy supports: U = x_1..x_j y_1..y_m,
  // x_i = w_i + h with ord(h) = q an odd prime, w_i distinct 2-torsion
  // values, y_t distinct nonzero 2-torsion, sum(U) = 0, j = 0 mod q, and
  // V = -U. The all-pairs factorization of UV has length j + m = k; the
  // exact check decides whether every in-between length vanishes.
  if (target.size() == 2 && k >= 3) {
    std::vector<int> torsion2;
    for (int e = 1; e < order; ++e)
      if (group.element_order(e) == 2) torsion2.push_back(e);
    std::vector<long long> odd_primes;
    for (auto [p, exp] : detail::factorize(group.exponent()))
      if (p % 2 == 1) odd_primes.push_back(p);

    if (!torsion2.empty() && !odd_primes.empty()) {
      std::mt19937_64 rng(0x51ab5eed);
      std::vector<std::pair<long long, int>> shapes;  // (q, j)
      for (long long q : odd_primes)
        for (int j = static_cast<int>(q); j <= k; j += static_cast<int>(q)) {
          int m = k - j;
          if (m <= static_cast<int>(std::min<std::size_t>(torsion2.size(), 8)) &&
              j <= static_cast<int>(torsion2.size()) + 1)
            shapes.emplace_back(q, j);
        }
      for (long long attempt = 0; !shapes.empty() && res.attempts < limit; ++attempt) {
        auto [q, j] = shapes[attempt % shapes.size()];
        int m = k - j;
        int h = -1;
        for (int e = 1; e < order; ++e)
          if (group.element_order(e) == q) {
            h = e;
            break;
          }
        if (h < 0) break;

        // sample j distinct w's from the 2-torsion including 0
        std::vector<int> w_pool = torsion2;
        w_pool.push_back(0);
        for (int i = 0; i < j; ++i)
          std::swap(w_pool[i], w_pool[i + rng() % (w_pool.size() - i)]);
        std::vector<int> w(w_pool.begin(), w_pool.begin() + j);

        // y's: m-1 sampled, the last forced by the zero-sum condition
        std::vector<int> y;
        std::vector<int> y_pool = torsion2;
        bool ok = true;
        int forced = 0;
        for (int x : w) forced = group.add(forced, x);
        for (int i = 0; i < m - 1; ++i) {
          std::swap(y_pool[i], y_pool[i + rng() % (y_pool.size() - i)]);
          y.push_back(y_pool[i]);
          forced = group.add(forced, y_pool[i]);
        }
        if (m > 0) {
          if (forced == 0 || std::find(y.begin(), y.end(), forced) != y.end()) ok = false;
          y.push_back(forced);
        } else if (forced != 0) {
          ok = false;
        }
        ++res.attempts;
        if (!ok) continue;

        std::map<int, int> u;
        for (int x : w) u[group.add(x, h)] += 1;
        for (int x : y) u[x] += 1;
        if (static_cast<int>(u.size()) != k) continue;  // collision: not all distinct
        if (!is_atom(group, u)) continue;
        if (try_pair(u, negate_multiset(group, u))) return res;
      }
    }
  }

  // Generic fallback: long atoms over sampled small supports (closed under
  // negation), paired exhaustively.
  {
    std::mt19937_64 rng(0xfa11bacc);
    std::vector<int> by_order = group.nonzero_elements();
    std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
      return group.element_order(a) > group.element_order(b);
    });
    while (res.attempts < limit && !by_order.empty()) {
      std::vector<int> support;
      support.push_back(by_order[rng() % std::max<std::size_t>(1, by_order.size() / 4)]);
      int extra = 2 + static_cast<int>(rng() % 3);
      for (int i = 0; i < extra; ++i) support.push_back(by_order[rng() % by_order.size()]);
      std::vector<int> closed;
      for (int e : support) {
        closed.push_back(e);
        closed.push_back(group.negate(e));
      }
      Budget eb = budget;
      eb.max_nodes = std::min<long long>(budget.max_nodes, 2'000'000);
      eb.max_atoms = std::min<long long>(budget.max_atoms, 50'000);
      AtomSet atoms = enumerate_atoms(group, closed, std::min(2 * k, 24), eb);
      ++res.attempts;
      std::vector<std::size_t> longs;
      for (std::size_t jdx = 0; jdx < atoms.atoms.size(); ++jdx)
        if (atoms.atom(jdx).length() * 2 >= k) longs.push_back(jdx);
      std::stable_sort(longs.begin(), longs.end(), [&](std::size_t a, std::size_t b) {
        return atoms.atom(a).length() > atoms.atom(b).length();
      });
      if (longs.size() > 12) longs.resize(12);
      for (std::size_t a = 0; a < longs.size() && res.attempts < limit; ++a)
        for (std::size_t b = a; b < longs.size() && res.attempts < limit; ++b) {
          std::map<int, int> u, v;
          for (int i = 0; i < atoms.universe->size(); ++i) {
            if (atoms.atoms[longs[a]][i] > 0)
              u[atoms.universe->element(i)] = atoms.atoms[longs[a]][i];
            if (atoms.atoms[longs[b]][i] > 0)
              v[atoms.universe->element(i)] = atoms.atoms[longs[b]][i];
          }
          if (try_pair(u, v)) return res;
        }
    }
  }

  return res;
}

}  // namespace zslab
