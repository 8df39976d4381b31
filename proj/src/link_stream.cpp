#include "linkstream/link_stream.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace linkstream {

NodeLabels::NodeLabels(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<NodeId>(i)).second) {
      throw ParseError("duplicate node label '" + names_[i] + "'");
    }
  }
}

NodeLabels NodeLabels::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return NodeLabels(std::move(names));
}

std::optional<NodeId> NodeLabels::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId NodeLabels::intern(std::string_view name) {
  auto [it, inserted] =
      index_.try_emplace(std::string(name), static_cast<NodeId>(names_.size()));
  if (inserted) names_.emplace_back(name);
  return it->second;
}

StaticGraph::StaticGraph(std::size_t node_count,
                         std::span<const std::pair<NodeId, NodeId>> pairs)
    : offsets_(node_count + 1, 0), adjacency_(2 * pairs.size()) {
  for (const auto& [u, v] : pairs) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 1; i <= node_count; ++i) offsets_[i] += offsets_[i - 1];
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : pairs) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
}

bool StaticGraph::has_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::optional<std::size_t> LinkStream::event_index(Time t) const {
  auto it = std::lower_bound(omega_.begin(), omega_.end(), t);
  if (it == omega_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - omega_.begin());
}

std::size_t LinkStream::first_event_at_or_after(Time t) const {
  return static_cast<std::size_t>(std::lower_bound(omega_.begin(), omega_.end(), t) -
                                  omega_.begin());
}

StaticGraph LinkStream::graph_at(std::size_t k) const {
  return StaticGraph(node_count(), pairs_at(k));
}

LinkStream build_link_stream(std::span<const IntervalLink> raw, std::size_t node_count,
                             NodeLabels labels) {
  if (labels.size() == 0) {
    labels = NodeLabels::numbered(node_count);
  } else if (labels.size() != node_count) {
    throw PreconditionError("label table size does not match node count");
  }

  std::vector<IntervalLink> links;
  links.reserve(raw.size());
  for (const auto& link : raw) {
    if (link.u >= node_count || link.v >= node_count) {
      throw ParseError("node id out of range");
    }
    if (link.u == link.v) {
      throw ParseError("self-loop on node '" + labels.name(link.u) + "'");
    }
    if (!std::isfinite(link.begin) || !std::isfinite(link.end)) {
      throw ParseError("non-finite link time");
    }
    if (link.end < link.begin) {
      throw ParseError("link ends before it begins");
    }
    links.push_back({std::min(link.u, link.v), std::max(link.u, link.v), link.begin,
                     link.end});
  }

  // Merge per pair: overlapping or touching intervals become one maximal link.
  std::sort(links.begin(), links.end(), [](const IntervalLink& a, const IntervalLink& b) {
    return std::tie(a.u, a.v, a.begin, a.end) < std::tie(b.u, b.v, b.begin, b.end);
  });
  std::vector<IntervalLink> merged;
  for (const auto& link : links) {
    if (!merged.empty() && merged.back().u == link.u && merged.back().v == link.v &&
        link.begin <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, link.end);
    } else {
      merged.push_back(link);
    }
  }
  std::sort(merged.begin(), merged.end(), [](const IntervalLink& a, const IntervalLink& b) {
    return std::tie(a.begin, a.end, a.u, a.v) < std::tie(b.begin, b.end, b.u, b.v);
  });

  LinkStream stream;
  stream.labels_ = std::move(labels);
  stream.omega_.reserve(2 * merged.size());
  for (const auto& link : merged) {
    stream.omega_.push_back(link.begin);
    stream.omega_.push_back(link.end);
  }
  std::sort(stream.omega_.begin(), stream.omega_.end());
  stream.omega_.erase(std::unique(stream.omega_.begin(), stream.omega_.end()),
                      stream.omega_.end());

  // Coverage CSR: link [b, e] covers every event time in [b, e].
  const auto& omega = stream.omega_;
  std::vector<std::size_t> counts(omega.size() + 1, 0);
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  ranges.reserve(merged.size());
  for (const auto& link : merged) {
    auto lo = static_cast<std::size_t>(
        std::lower_bound(omega.begin(), omega.end(), link.begin) - omega.begin());
    auto hi = static_cast<std::size_t>(
        std::upper_bound(omega.begin(), omega.end(), link.end) - omega.begin());
    ranges.emplace_back(lo, hi);
    for (std::size_t k = lo; k < hi; ++k) ++counts[k + 1];
  }
  for (std::size_t k = 1; k < counts.size(); ++k) counts[k] += counts[k - 1];
  stream.coverage_offsets_ = counts;
  stream.coverage_.resize(counts.back());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    for (std::size_t k = ranges[i].first; k < ranges[i].second; ++k) {
      stream.coverage_[counts[k]++] = {merged[i].u, merged[i].v};
    }
  }
  stream.links_ = std::move(merged);
  return stream;
}

StaticGraph induced_graph(const LinkStream& stream, Time t) {
  if (auto k = stream.event_index(t)) return stream.graph_at(*k);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (const auto& link : stream.links()) {
    if (link.begin <= t && t <= link.end) pairs.emplace_back(link.u, link.v);
  }
  return StaticGraph(stream.node_count(), pairs);
}

std::size_t event_edge_count(const LinkStream& stream) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < stream.event_times().size(); ++k) {
    total += stream.pairs_at(k).size();
  }
  return total;
}

}  // namespace linkstream
