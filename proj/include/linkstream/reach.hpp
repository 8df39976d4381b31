#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "linkstream/types.hpp"

namespace linkstream {

// (start, arrival, length): a shortest path of the given length from the
// source, leaving at the largest possible start, reaches the node by arrival.
struct ReachTriple {
  Time start = 0;
  Time arrival = 0;
  Length length = 0;

  friend bool operator==(const ReachTriple&, const ReachTriple&) = default;
  friend auto operator<=>(const ReachTriple&, const ReachTriple&) = default;
};

struct ArrivalLength {
  Time arrival = 0;
  Length length = 0;

  friend bool operator==(const ArrivalLength&, const ArrivalLength&) = default;
};

struct StartArrival {
  Time start = 0;
  Time arrival = 0;

  friend bool operator==(const StartArrival&, const StartArrival&) = default;
  friend auto operator<=>(const StartArrival&, const StartArrival&) = default;
};

// Start key and length in force for a node from some arrival time on.
struct KeyLength {
  Time start = 0;
  Length length = 0;

  friend bool operator==(const KeyLength&, const KeyLength&) = default;
};

// sf-metric value together with the start of a path realizing it.
struct SfEntry {
  Time start = 0;
  Length length = 0;

  friend bool operator==(const SfEntry&, const SfEntry&) = default;
};

// Piecewise-constant function of time, stored as its change points.
// Values must be set in nondecreasing time order.
template <class Value>
class StepSeries {
 public:
  struct Point {
    Time t;
    Value value;
  };

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  std::span<const Point> points() const { return points_; }
  const Point& back() const { return points_.back(); }

  // A second set at the same time overwrites; unchanged values are dropped.
  void set(Time t, const Value& value) {
    if (!points_.empty() && points_.back().t == t) {
      points_.pop_back();
    }
    if (!points_.empty() && points_.back().value == value) return;
    points_.push_back({t, value});
  }

  // Value in force at t, i.e. the last change at or before t.
  std::optional<Value> at(Time t) const {
    auto it = std::upper_bound(points_.begin(), points_.end(), t,
                               [](Time x, const Point& p) { return x < p.t; });
    if (it == points_.begin()) return std::nullopt;
    return std::prev(it)->value;
  }

  // Index of the change in force at t, or size() when none.
  std::size_t index_at(Time t) const {
    auto it = std::upper_bound(points_.begin(), points_.end(), t,
                               [](Time x, const Point& p) { return x < p.t; });
    if (it == points_.begin()) return points_.size();
    return static_cast<std::size_t>(std::prev(it) - points_.begin());
  }

 private:
  std::vector<Point> points_;
};

// Comparator that counts its invocations into an optional counter.
struct CountingLess {
  std::uint64_t* counter = nullptr;

  bool operator()(Time a, Time b) const {
    if (counter != nullptr) ++*counter;
    return a < b;
  }
};

// Per-node dictionary start -> list of (arrival, length), arrivals ascending.
class ReachMap {
 public:
  using Entries = std::vector<ArrivalLength>;
  using Map = std::map<Time, Entries, CountingLess>;

  ReachMap() = default;
  explicit ReachMap(std::uint64_t* comparison_counter)
      : map_(CountingLess{comparison_counter}) {}

  bool empty() const { return map_.empty(); }
  std::size_t key_count() const { return map_.size(); }
  const Map& keys() const { return map_; }

  std::optional<Time> last_key() const {
    if (map_.empty()) return std::nullopt;
    return map_.rbegin()->first;
  }
  const Entries* find(Time start) const {
    auto it = map_.find(start);
    return it == map_.end() ? nullptr : &it->second;
  }
  Entries& operator[](Time start) { return map_[start]; }

  // All triples, ordered by (start, arrival).
  std::vector<ReachTriple> triples() const {
    std::vector<ReachTriple> out;
    for (const auto& [start, entries] : map_) {
      for (const auto& e : entries) out.push_back({start, e.arrival, e.length});
    }
    return out;
  }

 private:
  Map map_;
};

}  // namespace linkstream
