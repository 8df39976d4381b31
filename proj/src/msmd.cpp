#include "linkstream/msmd.hpp"

#include <algorithm>

#include "linkstream/graph_kernels.hpp"

namespace linkstream {

std::vector<StartArrival> PairTables::start_arrival_pairs(NodeId u, NodeId v, Time t) const {
  std::vector<StartArrival> out;
  const auto& h = history(u, v);
  auto kl = h.reach.at(t);
  if (!kl) return out;
  const Time first = *h.first_arrival_under_key(t);
  auto it = std::lower_bound(omega_.begin(), omega_.end(), first);
  for (; it != omega_.end() && *it <= t; ++it) out.push_back({kl->start, *it});
  return out;
}

namespace {

// Dense per-pair state for the pass; row u holds everything seen from u.
struct PassState {
  std::size_t n;
  std::vector<Time> key;
  std::vector<Length> outer;
  std::vector<Time> latency;
  std::vector<SfEntry> sf;

  explicit PassState(std::size_t nodes)
      : n(nodes),
        key(nodes * nodes, -kInfiniteTime),
        outer(nodes * nodes, kInfiniteLength),
        latency(nodes * nodes, kInfiniteTime),
        sf(nodes * nodes) {}
};

void commit(PassState& state, TargetHistory& history, std::size_t pair, Time t, Time start,
            Length len) {
  state.key[pair] = start;
  state.outer[pair] = len;
  history.reach.set(t, {start, len});
  const Time duration = t - start;
  if (duration < state.latency[pair]) {
    state.latency[pair] = duration;
    state.sf[pair] = {start, len};
  } else if (duration == state.latency[pair] && len <= state.sf[pair].length) {
    state.sf[pair] = {start, len};
  }
  history.latency.set(t, state.latency[pair]);
  history.sf.set(t, state.sf[pair]);
}

}  // namespace

PairTables msmd(const LinkStream& stream) {
  if (stream.empty()) throw PreconditionError("link stream has no event times");
  const std::size_t n = stream.node_count();
  const auto omega = stream.event_times();

  PairTables tables;
  tables.n_ = n;
  tables.omega_.assign(omega.begin(), omega.end());
  tables.pairs_.resize(n * n);
  PassState state(n);

  std::vector<ComponentDistances> apsp;
  std::vector<std::size_t> nontrivial;
  std::vector<Length> next;

  for (std::size_t k = 0; k < omega.size(); ++k) {
    const Time t = omega[k];
    const StaticGraph graph = stream.graph_at(k);
    const ComponentPartition parts = connected_components(graph);

    apsp.assign(parts.size(), ComponentDistances());
    nontrivial.clear();
    for (std::size_t c = 0; c < parts.size(); ++c) {
      if (parts.members[c].size() > 1) {
        apsp[c] = all_pairs_distances(graph, parts, c);
        nontrivial.push_back(c);
      } else {
        apsp[c] = ComponentDistances(parts.members[c]);
      }
    }

    for (NodeId u = 0; u < n; ++u) {
      const std::size_t row = u * n;
      const std::size_t cu = parts.component_of[u];

      // Same component as u: SA gains (t, t), D0 gains (t, t, d_C[u, v]), F gains 0.
      {
        const auto& members = parts.members[cu];
        const std::size_t lu = parts.local_index[u];
        for (std::size_t j = 0; j < members.size(); ++j) {
          const std::size_t pair = row + members[j];
          commit(state, tables.pairs_[pair], pair, t, t, apsp[cu](lu, j));
        }
      }

      for (std::size_t c : nontrivial) {
        if (c == cu) continue;
        const auto& members = parts.members[c];
        const auto& dist = apsp[c];

        // s_v: the largest start over SA_uw[t-], w in C_v.
        Time start = -kInfiniteTime;
        for (NodeId w : members) start = std::max(start, state.key[row + w]);
        if (start == -kInfiniteTime) continue;

        next.assign(members.size(), kInfiniteLength);
        for (std::size_t j = 0; j < members.size(); ++j) {
          Length best = kInfiniteLength;
          for (std::size_t i = 0; i < members.size(); ++i) {
            const std::size_t pw = row + members[i];
            if (state.key[pw] != start) continue;
            best = std::min(best, state.outer[pw] + dist(i, j));
          }
          next[j] = best;
        }
        for (std::size_t j = 0; j < members.size(); ++j) {
          const std::size_t pair = row + members[j];
          commit(state, tables.pairs_[pair], pair, t, start, next[j]);
        }
      }
    }
  }
  return tables;
}

}  // namespace linkstream
