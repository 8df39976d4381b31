#pragma once

#include <optional>
#include <vector>

#include "linkstream/link_stream.hpp"
#include "linkstream/target_history.hpp"

namespace linkstream {

struct SsmdOptions {
  // Also maintain the start-agnostic distance from the source. Costs one
  // extra pass over each component.
  bool track_distance = true;
};

// Latencies, sf-metrics and reachability triples from one source event node.
class MetricsResult {
 public:
  EventNode source() const { return source_; }
  std::size_t node_count() const { return targets_.size(); }

  // All queries return nullopt for event nodes not reachable from the source.
  std::optional<Time> latency(EventNode target) const {
    return targets_.at(target.v).latency.at(target.t);
  }
  std::optional<Length> sf_metric(EventNode target) const {
    auto e = targets_.at(target.v).sf.at(target.t);
    if (!e) return std::nullopt;
    return e->length;
  }
  // Largest start among the shortest fastest paths.
  std::optional<Time> sf_start(EventNode target) const {
    auto e = targets_.at(target.v).sf.at(target.t);
    if (!e) return std::nullopt;
    return e->start;
  }
  // Minimum length over all paths, whatever their start.
  std::optional<Length> distance(EventNode target) const {
    return distance_.at(target.v).at(target.t);
  }
  std::optional<ReachTriple> reach_triple(EventNode target) const {
    return targets_.at(target.v).reach_triple(target.t);
  }
  std::vector<StartArrival> fastest_start_arrival(EventNode target) const {
    return targets_.at(target.v).fastest_start_arrival(target.t);
  }

  ReachMap reach_map(NodeId v) const { return targets_.at(v).reach_map(); }
  const TargetHistory& history(NodeId v) const { return targets_.at(v); }
  const StepSeries<Length>& distance_history(NodeId v) const { return distance_.at(v); }

 private:
  friend MetricsResult ssmd(const LinkStream&, EventNode, const SsmdOptions&);

  EventNode source_;
  std::vector<TargetHistory> targets_;
  std::vector<StepSeries<Length>> distance_;
};

// Single pass over the event times at or after the source time. Throws
// PreconditionError for an unknown node, an empty stream, or a source time
// that is not finite or lies after the last event time.
MetricsResult ssmd(const LinkStream& stream, EventNode source, const SsmdOptions& options = {});

// Checks the source against the stream; shared by every single-source entry point.
void validate_source(const LinkStream& stream, EventNode source);

}  // namespace linkstream
