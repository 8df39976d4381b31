#include "linkstream/graph_kernels.hpp"

#include <algorithm>
#include <unordered_map>

namespace linkstream {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

template <class LocalOf>
ComponentDistances bfs_all_pairs(const StaticGraph& g, std::vector<NodeId> members,
                                 LocalOf&& local_of) {
  ComponentDistances dist(std::move(members));
  const std::size_t n = dist.size();
  std::vector<Length> row(n);
  std::vector<std::uint32_t> queue(n);
  for (std::size_t src = 0; src < n; ++src) {
    std::fill(row.begin(), row.end(), kInfiniteLength);
    row[src] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = static_cast<std::uint32_t>(src);
    while (head < tail) {
      const std::uint32_t x = queue[head++];
      for (NodeId y : g.neighbors(dist.members()[x])) {
        const std::uint32_t ly = local_of(y);
        if (row[ly] == kInfiniteLength) {
          row[ly] = row[x] + 1;
          queue[tail++] = ly;
        }
      }
    }
    for (std::size_t j = src + 1; j < n; ++j) dist.set(src, j, row[j]);
  }
  return dist;
}

}  // namespace

ComponentPartition connected_components(const StaticGraph& g) {
  const std::size_t n = g.node_count();
  ComponentPartition parts;
  parts.component_of.assign(n, kUnassigned);
  parts.local_index.assign(n, 0);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId start = 0; start < n; ++start) {
    if (parts.component_of[start] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(parts.members.size());
    auto& members = parts.members.emplace_back();
    queue.clear();
    queue.push_back(start);
    parts.component_of[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId x = queue[head];
      parts.local_index[x] = static_cast<std::uint32_t>(members.size());
      members.push_back(x);
      for (NodeId y : g.neighbors(x)) {
        if (parts.component_of[y] == kUnassigned) {
          parts.component_of[y] = id;
          queue.push_back(y);
        }
      }
    }
  }
  return parts;
}

ComponentDistances::ComponentDistances(std::vector<NodeId> members)
    : members_(std::move(members)) {
  const std::size_t n = members_.size();
  upper_.assign(n < 2 ? 0 : n * (n - 1) / 2, kInfiniteLength);
}

Length ComponentDistances::between(NodeId a, NodeId b) const {
  auto ia = std::find(members_.begin(), members_.end(), a);
  auto ib = std::find(members_.begin(), members_.end(), b);
  if (ia == members_.end() || ib == members_.end()) return kInfiniteLength;
  return (*this)(static_cast<std::size_t>(ia - members_.begin()),
                 static_cast<std::size_t>(ib - members_.begin()));
}

ComponentDistances all_pairs_distances(const StaticGraph& g, const ComponentPartition& parts,
                                       std::size_t component) {
  return bfs_all_pairs(g, parts.members[component],
                       [&](NodeId y) { return parts.local_index[y]; });
}

ComponentDistances all_pairs_distances(const StaticGraph& g,
                                       std::span<const NodeId> component) {
  std::unordered_map<NodeId, std::uint32_t> local;
  local.reserve(component.size());
  for (std::size_t i = 0; i < component.size(); ++i) {
    local.emplace(component[i], static_cast<std::uint32_t>(i));
  }
  return bfs_all_pairs(g, std::vector<NodeId>(component.begin(), component.end()),
                       [&](NodeId y) { return local.at(y); });
}

}  // namespace linkstream
