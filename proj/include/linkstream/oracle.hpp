#pragma once

#include <optional>
#include <span>
#include <vector>

#include "linkstream/link_stream.hpp"
#include "linkstream/reach.hpp"

namespace linkstream::oracle {

// Exhaustive reference built on a time-expanded graph. Shares nothing with
// the streaming algorithms beyond the link stream itself, and is meant for
// small instances only.

// Largest |V| * (number of instants) accepted by the sweep.
inline constexpr std::size_t kStateCap = 10000;

struct OracleRecord {
  bool reachable = false;
  // Minimum length over all paths from the source event node.
  Length distance = kInfiniteLength;
  Time latency = kInfiniteTime;
  Length sf_metric = kInfiniteLength;
  // Largest start among the fastest paths of minimum length.
  Time sf_start = -kInfiniteTime;
  // (largest start, t, shortest length from that start); zero delay only.
  std::optional<ReachTriple> triple;
  // (start, arrival) of every fastest path. With a delay the arrival is the
  // departure time of the last hop.
  std::vector<StartArrival> fastest;
};

class OracleResult {
 public:
  EventNode source() const { return source_; }
  Time gamma() const { return gamma_; }
  std::size_t node_count() const { return n_; }
  // Instants of the expanded graph: event times, or contact times when gamma > 0.
  std::span<const Time> times() const { return times_; }

  const OracleRecord& record(std::size_t k, NodeId v) const { return records_.at(k * n_ + v); }
  // nullptr when t is not one of times().
  const OracleRecord* at(EventNode target) const;

  // Zero delay: the reach triples of v at the instants where the
  // (start, length) pair changes. With a delay: every (start, arrival,
  // length) a path leaving under the largest usable start can record,
  // arrival = hop time + gamma, minus the entries beaten by an earlier or
  // equal arrival with a shorter length.
  std::span<const ReachTriple> reach_list(NodeId v) const { return reach_.at(v); }

 private:
  friend OracleResult enumerate_metrics(const LinkStream&, EventNode, Time);

  EventNode source_;
  Time gamma_ = 0;
  std::size_t n_ = 0;
  std::vector<Time> times_;
  std::vector<OracleRecord> records_;
  std::vector<std::vector<ReachTriple>> reach_;
};

// One hop-count BFS per candidate start. Throws PreconditionError for a bad
// source, a negative gamma, or an instance over kStateCap.
OracleResult enumerate_metrics(const LinkStream& stream, EventNode source, Time gamma = 0);

// Every prefix of a reconstructed shortest path is itself shortest.
bool check_lemma1(const LinkStream& stream, EventNode source);

// Every distance splits as outer distance into a component of some G_t,
// a distance inside it, and a remaining temporal distance.
bool check_lemma2(const LinkStream& stream, EventNode source);

struct Decomposition {
  Time t = 0;
  std::vector<NodeId> component;
  NodeId entry = 0;
  NodeId exit = 0;
  Length outer = 0;
  Length inner = 0;
  Length rest = 0;
  Length total() const { return outer + inner + rest; }
};

// Best split of the distance from source to target through a component of
// the graph at event time t, preferring the smallest remaining part on ties.
// nullopt when no component yields a finite value.
std::optional<Decomposition> decomposition_at(const LinkStream& stream, EventNode source,
                                              EventNode target, Time t);

}  // namespace linkstream::oracle
