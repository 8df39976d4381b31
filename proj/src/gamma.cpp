#include "linkstream/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <tuple>

#include "linkstream/ssmd.hpp"

namespace linkstream {

std::vector<Contact> directed_contacts(const LinkStream& stream) {
  std::vector<Contact> contacts;
  contacts.reserve(2 * stream.links().size());
  for (const auto& link : stream.links()) {
    contacts.push_back({link.begin, link.u, link.v});
    contacts.push_back({link.begin, link.v, link.u});
  }
  std::sort(contacts.begin(), contacts.end(), [](const Contact& a, const Contact& b) {
    return std::tie(a.t, a.from, a.to) < std::tie(b.t, b.from, b.to);
  });
  return contacts;
}

namespace {

struct Pending {
  Time start;
  Time arrival;
  Length length;
};

// Largest start whose recorded arrival has passed, with the shortest length
// among its arrived entries. Entries arrive in FIFO order since arrivals are
// hop times plus a constant.
struct Usable {
  Time start = -kInfiniteTime;
  Length length = kInfiniteLength;
  std::deque<Pending> pending;

  void advance(Time t, std::uint64_t& ops) {
    while (!pending.empty() && pending.front().arrival <= t) {
      const Pending p = pending.front();
      pending.pop_front();
      ++ops;
      if (p.start > start) {
        start = p.start;
        length = p.length;
      } else if (p.start == start) {
        length = std::min(length, p.length);
      }
    }
  }
};

}  // namespace

GammaResult ssmd_gamma(const LinkStream& stream, EventNode source, GammaConfig config,
                       GammaStats* stats) {
  if (!(config.gamma > 0) || !std::isfinite(config.gamma)) {
    throw PreconditionError("gamma must be a finite value > 0; use ssmd for gamma = 0");
  }
  validate_source(stream, source);

  GammaStats local;
  GammaStats& counters = stats != nullptr ? *stats : local;
  std::uint64_t* comparisons = stats != nullptr ? &stats->key_comparisons : nullptr;

  const std::size_t n = stream.node_count();
  const Time gamma = config.gamma;
  GammaResult result;
  result.source_ = source;
  result.gamma_ = gamma;
  result.reach_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) result.reach_.emplace_back(comparisons);
  result.latency_.resize(n);
  result.sf_.resize(n);

  std::vector<Usable> usable(n);
  std::vector<Time> latency(n, kInfiniteTime);
  std::vector<Length> sf(n, kInfiniteLength);
  result.latency_[source.v].set(source.t, 0);
  result.sf_[source.v].set(source.t, 0);

  const auto contacts = directed_contacts(stream);
  auto first = std::lower_bound(contacts.begin(), contacts.end(), source.t,
                                [](const Contact& c, Time t) { return c.t < t; });
  for (auto it = first; it != contacts.end(); ++it) {
    const auto [t, u, v] = *it;
    ++counters.contacts;

    if (u == source.v) {
      auto& own = result.reach_[u][t];
      if (own.empty()) own.push_back({t, 0});
      ++counters.list_operations;
      usable[u].start = t;
      usable[u].length = 0;
    }
    usable[u].advance(t, counters.list_operations);
    if (usable[u].start == -kInfiniteTime) continue;

    const Time start = usable[u].start;
    const Length len = usable[u].length + 1;
    const Time arrival = t + gamma;

    // Guarded insert: skip when an entry with arrival <= t + gamma is
    // strictly shorter. Lengths never increase along a list, so the back
    // entry is the only one to test.
    auto& entries = result.reach_[v][start];
    ++counters.list_operations;
    if (entries.empty() || entries.back().length >= len) {
      if (!entries.empty() && entries.back().arrival == arrival) {
        if (entries.back().length > len) {
          entries.back().length = len;
          usable[v].pending.push_back({start, arrival, len});
        }
      } else {
        entries.push_back({arrival, len});
        usable[v].pending.push_back({start, arrival, len});
      }
    }

    if (v == source.v) continue;
    const Time duration = t - start;
    if (duration <= latency[v]) {
      // The entry at this arrival exists: a blocking entry with an earlier
      // arrival would already have given a smaller latency.
      const Length fastest = entries.back().length;
      if (duration < latency[v]) {
        latency[v] = duration;
        sf[v] = fastest;
      } else {
        sf[v] = std::min(sf[v], fastest);
      }
    }
    if (latency[v] != kInfiniteTime) {
      result.latency_[v].set(t, latency[v]);
      result.sf_[v].set(t, sf[v]);
    }
  }
  return result;
}

}  // namespace linkstream
