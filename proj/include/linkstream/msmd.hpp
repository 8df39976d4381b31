#pragma once

#include <optional>
#include <vector>

#include "linkstream/link_stream.hpp"
#include "linkstream/target_history.hpp"

namespace linkstream {

// Metrics between every ordered pair (u, v), with sources (min Omega, u).
//
// Table views by pair and event time t:
//   SA_uv[t]  start_arrival_pairs: (start, arrival) pairs under the current
//             maximal start, arrivals up to t
//   D0_uv[t]  reach_triple: the reachability triple of (t, v)
//   F_uv[t]   latency
//   D_uv[t]   sf_metric: sf-metric keyed by the start realizing it
class PairTables {
 public:
  std::size_t node_count() const { return n_; }
  Time origin() const { return omega_.front(); }

  std::optional<Time> latency(NodeId u, NodeId v, Time t) const {
    return history(u, v).latency.at(t);
  }
  std::optional<SfEntry> sf_metric(NodeId u, NodeId v, Time t) const {
    return history(u, v).sf.at(t);
  }
  std::optional<ReachTriple> reach_triple(NodeId u, NodeId v, Time t) const {
    return history(u, v).reach_triple(t);
  }
  std::vector<StartArrival> start_arrival_pairs(NodeId u, NodeId v, Time t) const;

  const TargetHistory& history(NodeId u, NodeId v) const { return pairs_.at(u * n_ + v); }

 private:
  friend PairTables msmd(const LinkStream&);

  std::size_t n_ = 0;
  std::vector<Time> omega_;
  std::vector<TargetHistory> pairs_;
};

// One chronological pass computing the tables for all ordered pairs.
// Throws PreconditionError when the stream has no event times.
PairTables msmd(const LinkStream& stream);

}  // namespace linkstream
