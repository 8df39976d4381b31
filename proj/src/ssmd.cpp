#include "linkstream/ssmd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "linkstream/graph_kernels.hpp"

namespace linkstream {

void validate_source(const LinkStream& stream, EventNode source) {
  if (source.v >= stream.node_count()) {
    throw PreconditionError("unknown source node id " + std::to_string(source.v));
  }
  if (stream.empty()) throw PreconditionError("link stream has no event times");
  if (!std::isfinite(source.t)) throw PreconditionError("source time is not finite");
  const auto omega = stream.event_times();
  if (source.t > omega.back()) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "source time " << source.t << " is after the last event time; nearest event time is "
        << omega.back();
    throw PreconditionError(msg.str());
  }
}

MetricsResult ssmd(const LinkStream& stream, EventNode source, const SsmdOptions& options) {
  validate_source(stream, source);
  const std::size_t n = stream.node_count();
  const auto omega = stream.event_times();

  MetricsResult result;
  result.source_ = source;
  result.targets_.resize(n);
  result.distance_.resize(n);

  // Largest start key and the distance under it, per node; -inf = unreached.
  std::vector<Time> key(n, -kInfiniteTime);
  std::vector<Length> outer(n, kInfiniteLength);
  std::vector<Time> latency(n, kInfiniteTime);
  std::vector<SfEntry> shortest_fastest(n);
  std::vector<Length> distance(n, kInfiniteLength);

  // Work list D: (-start, outer distance, node) sorted lexicographically. The
  // start is the same for the whole component, so only (outer, node) vary.
  std::vector<std::pair<Length, std::uint32_t>> work;
  std::vector<Length> candidate;
  std::vector<Length> next_distance;

  for (std::size_t k = stream.first_event_at_or_after(source.t); k < omega.size(); ++k) {
    const Time t = omega[k];
    const StaticGraph graph = stream.graph_at(k);
    const ComponentPartition parts = connected_components(graph);

    for (std::size_t c = 0; c < parts.size(); ++c) {
      const auto& members = parts.members[c];
      const bool has_source = parts.component_of[source.v] == c;
      if (members.size() == 1 && !has_source) continue;

      Time start = t;
      if (!has_source) {
        start = -kInfiniteTime;
        for (NodeId x : members) start = std::max(start, key[x]);
        if (start == -kInfiniteTime) continue;
      }

      const ComponentDistances apsp = members.size() > 1
                                          ? all_pairs_distances(graph, parts, c)
                                          : ComponentDistances({members[0]});
      const std::size_t size = members.size();
      candidate.assign(size, kInfiniteLength);

      if (has_source) {
        const std::size_t s = parts.local_index[source.v];
        for (std::size_t w = 0; w < size; ++w) candidate[w] = apsp(s, w);
      } else {
        work.clear();
        for (std::size_t x = 0; x < size; ++x) {
          if (key[members[x]] == start) {
            work.emplace_back(outer[members[x]], static_cast<std::uint32_t>(x));
          }
        }
        std::sort(work.begin(), work.end());
        // U: the nodes sharing one outer distance; each w takes the nearest.
        for (std::size_t i = 0; i < work.size();) {
          std::size_t j = i;
          while (j < work.size() && work[j].first == work[i].first) ++j;
          const Length d_u = work[i].first;
          for (std::size_t w = 0; w < size; ++w) {
            if (candidate[w] <= d_u) continue;
            Length nearest = kInfiniteLength;
            for (std::size_t x = i; x < j; ++x) {
              nearest = std::min(nearest, apsp(work[x].second, w));
            }
            if (nearest != kInfiniteLength) candidate[w] = std::min(candidate[w], d_u + nearest);
          }
          i = j;
        }
      }

      if (options.track_distance) {
        if (has_source) distance[source.v] = 0;
        next_distance.assign(size, kInfiniteLength);
        for (std::size_t x = 0; x < size; ++x) {
          const Length dx = distance[members[x]];
          if (dx == kInfiniteLength) continue;
          for (std::size_t w = 0; w < size; ++w) {
            next_distance[w] = std::min(next_distance[w], dx + apsp(x, w));
          }
        }
      }

      for (std::size_t w = 0; w < size; ++w) {
        const NodeId v = members[w];
        const Length len = candidate[w];
        auto& history = result.targets_[v];
        key[v] = start;
        outer[v] = len;
        history.reach.set(t, {start, len});

        // A duration that improves or ties the latency always comes from a
        // key first reached at t, so its length is the only new candidate.
        const Time duration = t - start;
        if (duration < latency[v]) {
          latency[v] = duration;
          shortest_fastest[v] = {start, len};
        } else if (duration == latency[v] && len <= shortest_fastest[v].length) {
          shortest_fastest[v] = {start, len};
        }
        history.latency.set(t, latency[v]);
        history.sf.set(t, shortest_fastest[v]);

        if (options.track_distance) {
          distance[v] = next_distance[w];
          result.distance_[v].set(t, distance[v]);
        }
      }
    }
  }
  return result;
}

}  // namespace linkstream
