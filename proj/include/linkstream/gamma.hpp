#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "linkstream/link_stream.hpp"
#include "linkstream/reach.hpp"

namespace linkstream {

// Minimum delay between consecutive hops of a path. Must be > 0; a zero
// delay is the plain path model handled by ssmd().
struct GammaConfig {
  Time gamma = 1;
};

// Directed contact (t, from, to).
struct Contact {
  Time t = 0;
  NodeId from = 0;
  NodeId to = 0;

  friend bool operator==(const Contact&, const Contact&) = default;
};

// Both directions of every link, taken at the link's begin time, sorted by
// (t, from, to).
std::vector<Contact> directed_contacts(const LinkStream& stream);

// Instrumentation for complexity checks.
struct GammaStats {
  std::uint64_t contacts = 0;
  std::uint64_t key_comparisons = 0;
  std::uint64_t list_operations = 0;

  std::uint64_t operations() const { return contacts + key_comparisons + list_operations; }
};

class GammaResult {
 public:
  EventNode source() const { return source_; }
  Time gamma() const { return gamma_; }
  std::size_t node_count() const { return reach_.size(); }

  // Values in force at time t (stamped at the hop time that produced them).
  std::optional<Time> latency(EventNode target) const {
    return latency_.at(target.v).at(target.t);
  }
  std::optional<Length> sf_metric(EventNode target) const {
    return sf_.at(target.v).at(target.t);
  }

  const StepSeries<Time>& latency_list(NodeId v) const { return latency_.at(v); }
  const StepSeries<Length>& sf_list(NodeId v) const { return sf_.at(v); }
  // Arrivals are recorded at hop time + gamma.
  const ReachMap& reach(NodeId v) const { return reach_.at(v); }

 private:
  friend GammaResult ssmd_gamma(const LinkStream&, EventNode, GammaConfig, GammaStats*);

  EventNode source_;
  Time gamma_ = 0;
  std::vector<ReachMap> reach_;
  std::vector<StepSeries<Time>> latency_;
  std::vector<StepSeries<Length>> sf_;
};

// Single-source latencies and sf-metrics over gamma-paths, streaming once over
// the time-sorted contacts. Throws PreconditionError when gamma <= 0 or the
// source is invalid.
GammaResult ssmd_gamma(const LinkStream& stream, EventNode source, GammaConfig config,
                       GammaStats* stats = nullptr);

}  // namespace linkstream
