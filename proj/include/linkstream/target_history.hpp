#pragma once

#include <optional>
#include <span>
#include <vector>

#include "linkstream/reach.hpp"

namespace linkstream {

// Everything one source knows about one target node, as functions of time.
//
// `reach` changes only when the maximal start key changes or the length under
// the current key strictly decreases, so the stored points are exactly the
// compressed reachability-triple list of the node. The triple of any event
// node (t, v) is the point in force at t with its arrival replaced by t.
struct TargetHistory {
  StepSeries<KeyLength> reach;
  StepSeries<Time> latency;
  StepSeries<SfEntry> sf;

  bool reached_by(Time t) const { return reach.at(t).has_value(); }

  std::optional<ReachTriple> reach_triple(Time t) const {
    auto kl = reach.at(t);
    if (!kl) return std::nullopt;
    return ReachTriple{kl->start, t, kl->length};
  }

  // Arrival of the first triple stored under the key in force at t.
  std::optional<Time> first_arrival_under_key(Time t) const {
    std::size_t i = reach.index_at(t);
    if (i == reach.size()) return std::nullopt;
    const auto points = reach.points();
    const Time key = points[i].value.start;
    while (i > 0 && points[i - 1].value.start == key) --i;
    return points[i].t;
  }

  // (start, arrival) pairs of stored triples whose duration equals the latency.
  std::vector<StartArrival> fastest_start_arrival(Time t) const {
    std::vector<StartArrival> out;
    auto f = latency.at(t);
    if (!f) return out;
    for (const auto& p : reach.points()) {
      if (p.t > t) break;
      if (p.t - p.value.start == *f) out.push_back({p.value.start, p.t});
    }
    return out;
  }

  ReachMap reach_map() const {
    ReachMap map;
    for (const auto& p : reach.points()) {
      map[p.value.start].push_back({p.t, p.value.length});
    }
    return map;
  }
};

}  // namespace linkstream
