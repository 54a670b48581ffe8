#pragma once

#include <json.hpp>

#include "zslab/factorization.hpp"
#include "zslab/invariants.hpp"

namespace zslab {

using Json = nlohmann::ordered_json;

inline Json subset_json(const Group& group, const std::vector<int>& elems) {
  Json arr = Json::array();
  for (int e : elems) arr.push_back(Group::format_element(group.coords(e)));
  return arr;
}

// Flat object with the frozen field set.
inline Json to_json(const Group& group, const SubsetReport& r) {
  Json j;
  j["subset"] = subset_json(group, r.subset);
  j["atom_count"] = r.atom_count;
  j["davenport"] = r.davenport;
  j["half_factorial"] = r.half_factorial;
  j["lcn"] = r.lcn;
  if (r.min_delta)
    j["min_delta"] = *r.min_delta;
  else
    j["min_delta"] = nullptr;
  j["kernel_rank"] = r.kernel_rank;
  return j;
}

inline Json to_json(const PropertySuiteReport& r) {
  Json j;
  j["group"] = r.group;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["skipped"] = r.skipped;
  j["complete"] = r.complete;
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    Json e;
    e["property"] = f.property;
    e["instance"] = f.instance;
    e["detail"] = f.detail;
    fails.push_back(e);
  }
  j["failures"] = fails;
  return j;
}

inline Json to_json(const DistinguishVerdict& v) {
  Json j;
  switch (v.outcome) {
    case DistinguishOutcome::isomorphic:
      j["outcome"] = "isomorphic";
      break;
    case DistinguishOutcome::distinguished:
      j["outcome"] = "distinguished";
      break;
    case DistinguishOutcome::undistinguished:
      j["outcome"] = "undistinguished";
      break;
  }
  if (v.outcome == DistinguishOutcome::distinguished) {
    Json w;
    w["invariant"] = v.invariant;
    w["g"] = v.value_g;
    w["g2"] = v.value_g2;
    j["witness"] = w;
  }
  if (v.partial) j["partial"] = true;
  return j;
}

inline Json to_json(const Theorem11Replay& r) {
  Json j;
  j["n_max"] = r.n_max;
  j["pairs_checked"] = r.pairs_checked;
  j["failures"] = r.failures;
  return j;
}

}  // namespace zslab
