#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "linkstream/link_stream.hpp"

namespace linkstream {

// Connected components of a static graph. Every node belongs to exactly one
// component; isolated nodes form singletons.
struct ComponentPartition {
  std::vector<std::uint32_t> component_of;
  // Position of each node inside members[component_of[v]].
  std::vector<std::uint32_t> local_index;
  std::vector<std::vector<NodeId>> members;

  std::size_t size() const { return members.size(); }
};

ComponentPartition connected_components(const StaticGraph& g);

// Hop distances between the members of one component, indexed by local
// position. Stored as the strict upper triangle; the diagonal is zero.
class ComponentDistances {
 public:
  ComponentDistances() = default;
  explicit ComponentDistances(std::vector<NodeId> members);

  std::size_t size() const { return members_.size(); }
  std::span<const NodeId> members() const { return members_; }

  Length operator()(std::size_t i, std::size_t j) const {
    if (i == j) return 0;
    return upper_[slot(i, j)];
  }
  void set(std::size_t i, std::size_t j, Length d) { upper_[slot(i, j)] = d; }

  // Lookup by global node id; linear in the component size.
  Length between(NodeId a, NodeId b) const;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    const std::size_t n = members_.size();
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }

  std::vector<NodeId> members_;
  std::vector<Length> upper_;
};

// Breadth-first search from every member of one component.
ComponentDistances all_pairs_distances(const StaticGraph& g, const ComponentPartition& parts,
                                       std::size_t component);

// Same, for a member list that forms one connected component of g.
ComponentDistances all_pairs_distances(const StaticGraph& g, std::span<const NodeId> component);

}  // namespace linkstream
