#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linkstream/types.hpp"

namespace linkstream {

// External labels for the dense node ids [0, size()).
class NodeLabels {
 public:
  NodeLabels() = default;
  explicit NodeLabels(std::vector<std::string> names);

  // Default labels "0", "1", ... for n nodes.
  static NodeLabels numbered(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(NodeId id) const { return names_.at(id); }
  std::optional<NodeId> find(std::string_view name) const;

  // Returns the id for name, appending a new one when unseen.
  NodeId intern(std::string_view name);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
};

// Static graph at one instant, stored as symmetric CSR adjacency.
class StaticGraph {
 public:
  StaticGraph() = default;
  StaticGraph(std::size_t node_count,
              std::span<const std::pair<NodeId, NodeId>> pairs);

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
};

// Normalized link stream: maximal links plus the derived event times.
//
// Immutable once built. For every event time the set of pairs covering it is
// precomputed, so the induced graph at an event time costs O(n + m_t).
class LinkStream {
 public:
  LinkStream() = default;

  std::size_t node_count() const { return labels_.size(); }
  const NodeLabels& labels() const { return labels_; }

  // Maximal links sorted by (begin, end, u, v), with u < v.
  std::span<const IntervalLink> links() const { return links_; }

  // Event times, strictly ascending.
  std::span<const Time> event_times() const { return omega_; }
  bool empty() const { return omega_.empty(); }

  std::optional<std::size_t> event_index(Time t) const;
  // Index of the first event time >= t; event_times().size() when none.
  std::size_t first_event_at_or_after(Time t) const;

  // Unordered pairs (u < v) covered at event time index k.
  std::span<const std::pair<NodeId, NodeId>> pairs_at(std::size_t k) const {
    return {coverage_.data() + coverage_offsets_[k],
            coverage_.data() + coverage_offsets_[k + 1]};
  }

  StaticGraph graph_at(std::size_t k) const;

 private:
  friend LinkStream build_link_stream(std::span<const IntervalLink>, std::size_t,
                                      NodeLabels);

  NodeLabels labels_;
  std::vector<IntervalLink> links_;
  std::vector<Time> omega_;
  std::vector<std::size_t> coverage_offsets_{0};
  std::vector<std::pair<NodeId, NodeId>> coverage_;
};

// Merges overlapping or touching raw links on the same pair into maximal
// links and derives the event times. Throws ParseError on self-loops,
// end < begin, non-finite times or out-of-range node ids.
LinkStream build_link_stream(std::span<const IntervalLink> raw, std::size_t node_count,
                             NodeLabels labels = {});

// Graph of the pairs covered at time t (closed intervals). Any t is allowed.
StaticGraph induced_graph(const LinkStream& stream, Time t);

// |E_Omega| as the number of (event time, covered unordered pair) incidences.
std::size_t event_edge_count(const LinkStream& stream);

// Same count with each unordered pair counted as its two directed edges.
inline std::size_t directed_event_edge_count(const LinkStream& stream) {
  return 2 * event_edge_count(stream);
}

}  // namespace linkstream
