#include "linkstream/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace linkstream::oracle {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
// Lemma 2 keeps one search per state; keep that quadratic table small.
constexpr std::size_t kLemmaCap = 2000;

// Traversal arc to (k, to); k == instant count means past the last instant.
struct Arc {
  NodeId to;
  std::size_t k;
};

struct Expanded {
  std::size_t n = 0;
  std::vector<Time> times;
  std::vector<std::vector<std::vector<Arc>>> out;  // [k][u]

  std::size_t instants() const { return times.size(); }
  std::size_t states() const { return times.size() * n; }
  std::size_t state(std::size_t k, NodeId v) const { return k * n + v; }
};

Expanded expand(const LinkStream& stream, Time gamma) {
  Expanded g;
  g.n = stream.node_count();
  if (gamma == 0) {
    const auto omega = stream.event_times();
    g.times.assign(omega.begin(), omega.end());
  } else {
    for (const auto& link : stream.links()) g.times.push_back(link.begin);
    std::sort(g.times.begin(), g.times.end());
    g.times.erase(std::unique(g.times.begin(), g.times.end()), g.times.end());
  }
  if (g.states() > kStateCap) {
    throw PreconditionError("instance too large for exhaustive enumeration");
  }
  g.out.assign(g.instants(), std::vector<std::vector<Arc>>(g.n));
  for (std::size_t k = 0; k < g.instants(); ++k) {
    const Time t = g.times[k];
    for (const auto& link : stream.links()) {
      const bool active = gamma == 0 ? (link.begin <= t && t <= link.end) : link.begin == t;
      if (!active) continue;
      std::size_t to_k = k;
      if (gamma > 0) {
        to_k = static_cast<std::size_t>(
            std::lower_bound(g.times.begin(), g.times.end(), t + gamma) - g.times.begin());
      }
      g.out[k][link.u].push_back({link.v, to_k});
      g.out[k][link.v].push_back({link.u, to_k});
    }
  }
  return g;
}

struct Search {
  std::vector<Length> dist;
  std::vector<std::size_t> parent;
};

// 0-1 BFS: waiting at a node is free, every traversal costs one hop.
Search search(const Expanded& g, std::size_t k0, NodeId v0) {
  Search s;
  s.dist.assign(g.states(), kInfiniteLength);
  s.parent.assign(g.states(), kNone);
  std::deque<std::size_t> queue;
  const std::size_t root = g.state(k0, v0);
  s.dist[root] = 0;
  queue.push_back(root);
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    const std::size_t k = x / g.n;
    const NodeId u = static_cast<NodeId>(x % g.n);
    auto relax = [&](std::size_t y, Length w) {
      if (s.dist[x] + w < s.dist[y]) {
        s.dist[y] = s.dist[x] + w;
        s.parent[y] = x;
        if (w == 0) {
          queue.push_front(y);
        } else {
          queue.push_back(y);
        }
      }
    };
    if (k + 1 < g.instants()) relax(g.state(k + 1, u), 0);
    for (const Arc& arc : g.out[k][u]) {
      if (arc.k < g.instants()) relax(g.state(arc.k, arc.to), 1);
    }
  }
  return s;
}

// Hop distances from u inside the graph of instant k.
std::vector<Length> layer_distances(const Expanded& g, std::size_t k, NodeId u) {
  std::vector<Length> dist(g.n, kInfiniteLength);
  std::vector<NodeId> queue{u};
  dist[u] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId x = queue[head];
    for (const Arc& arc : g.out[k][x]) {
      if (dist[arc.to] == kInfiniteLength) {
        dist[arc.to] = dist[x] + 1;
        queue.push_back(arc.to);
      }
    }
  }
  return dist;
}

void check_source(const LinkStream& stream, EventNode source) {
  if (source.v >= stream.node_count()) throw PreconditionError("unknown source node");
  if (stream.empty()) throw PreconditionError("link stream has no event times");
  if (!std::isfinite(source.t) || source.t > stream.event_times().back()) {
    throw PreconditionError("source time outside the stream");
  }
}

std::size_t first_instant(const Expanded& g, Time t) {
  return static_cast<std::size_t>(std::lower_bound(g.times.begin(), g.times.end(), t) -
                                  g.times.begin());
}

std::optional<std::size_t> instant_of(const Expanded& g, Time t) {
  const std::size_t k = first_instant(g, t);
  if (k == g.instants() || g.times[k] != t) return std::nullopt;
  return k;
}

// A path reaching a node: from hop/arrival instant k on, with this duration,
// this length and this start.
struct Candidate {
  std::size_t k;
  Time duration;
  Length length;
  Time start;
};

void aggregate(const Expanded& g, NodeId v, std::vector<Candidate> cands,
               std::vector<OracleRecord>& records, bool set_distance) {
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) { return a.k < b.k; });
  Time latency = kInfiniteTime;
  Length sf = kInfiniteLength;
  Time sf_start = -kInfiniteTime;
  Length distance = kInfiniteLength;
  std::vector<StartArrival> fastest;
  std::size_t next = 0;
  for (std::size_t k = 0; k < g.instants(); ++k) {
    for (; next < cands.size() && cands[next].k <= k; ++next) {
      const Candidate& c = cands[next];
      const StartArrival pair{c.start, g.times[std::min(c.k, g.instants() - 1)]};
      distance = std::min(distance, c.length);
      if (c.duration < latency) {
        latency = c.duration;
        sf = c.length;
        sf_start = c.start;
        fastest = {pair};
      } else if (c.duration == latency) {
        if (c.length < sf || (c.length == sf && c.start > sf_start)) {
          sf = c.length;
          sf_start = c.start;
        }
        fastest.push_back(pair);
      }
    }
    if (latency == kInfiniteTime) continue;
    OracleRecord& rec = records[g.state(k, v)];
    rec.reachable = true;
    rec.latency = latency;
    rec.sf_metric = sf;
    rec.sf_start = sf_start;
    rec.fastest = fastest;
    std::sort(rec.fastest.begin(), rec.fastest.end());
    rec.fastest.erase(std::unique(rec.fastest.begin(), rec.fastest.end()), rec.fastest.end());
    if (set_distance) rec.distance = distance;
  }
}

// Drops entries beaten by an entry of the same start with an earlier or
// equal arrival and a strictly shorter length.
std::vector<ReachTriple> undominated(std::vector<ReachTriple> all) {
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<ReachTriple> kept;
  for (const auto& c : all) {
    bool beaten = false;
    for (const auto& o : all) {
      if (o.start == c.start && o.arrival <= c.arrival && o.length < c.length) {
        beaten = true;
        break;
      }
    }
    if (!beaten) kept.push_back(c);
  }
  return kept;
}

}  // namespace

const OracleRecord* OracleResult::at(EventNode target) const {
  auto it = std::lower_bound(times_.begin(), times_.end(), target.t);
  if (it == times_.end() || *it != target.t || target.v >= n_) return nullptr;
  return &records_[static_cast<std::size_t>(it - times_.begin()) * n_ + target.v];
}

OracleResult enumerate_metrics(const LinkStream& stream, EventNode source, Time gamma) {
  if (!(gamma >= 0) || !std::isfinite(gamma)) throw PreconditionError("gamma must be >= 0");
  check_source(stream, source);
  const Expanded g = expand(stream, gamma);
  const std::size_t n = g.n;
  const std::size_t instants = g.instants();

  OracleResult result;
  result.source_ = source;
  result.gamma_ = gamma;
  result.n_ = n;
  result.times_ = g.times;
  result.records_.assign(g.states(), {});
  result.reach_.assign(n, {});

  std::vector<std::vector<Candidate>> cands(n);
  const std::size_t first = first_instant(g, source.t);

  if (gamma == 0) {
    for (std::size_t j = first; j < instants; ++j) {
      const Search s = search(g, j, source.v);
      for (NodeId v = 0; v < n; ++v) {
        bool arrived = false;
        for (std::size_t k = j; k < instants; ++k) {
          const Length d = s.dist[g.state(k, v)];
          if (d == kInfiniteLength) continue;
          OracleRecord& rec = result.records_[g.state(k, v)];
          rec.reachable = true;
          rec.distance = std::min(rec.distance, d);
          rec.triple = ReachTriple{g.times[j], g.times[k], d};
          if (!arrived) {
            arrived = true;
            cands[v].push_back({k, g.times[k] - g.times[j], d, g.times[j]});
          }
        }
      }
    }
    for (NodeId v = 0; v < n; ++v) {
      aggregate(g, v, std::move(cands[v]), result.records_, false);
      auto& list = result.reach_[v];
      for (std::size_t k = 0; k < instants; ++k) {
        const auto& triple = result.records_[g.state(k, v)].triple;
        if (!triple) continue;
        if (list.empty() || list.back().start != triple->start ||
            list.back().length != triple->length) {
          list.push_back(*triple);
        }
      }
    }
    return result;
  }

  // Largest start from which each state is reached, and the length from it.
  std::vector<Time> key(g.states(), -kInfiniteTime);
  std::vector<Length> key_length(g.states(), kInfiniteLength);
  for (std::size_t j = first; j < instants; ++j) {
    const Search s = search(g, j, source.v);
    for (std::size_t k = j; k < instants; ++k) {
      for (NodeId u = 0; u < n; ++u) {
        const Length d = s.dist[g.state(k, u)];
        if (d == kInfiniteLength) continue;
        key[g.state(k, u)] = g.times[j];
        key_length[g.state(k, u)] = d;
        for (const Arc& arc : g.out[k][u]) {
          if (arc.to == source.v) continue;
          cands[arc.to].push_back({k, g.times[k] - g.times[j], d + 1, g.times[j]});
        }
      }
    }
  }
  if (first < instants) cands[source.v].push_back({first, 0, 0, source.t});

  std::vector<std::vector<ReachTriple>> recorded(n);
  for (std::size_t k = first; k < instants; ++k) {
    for (NodeId u = 0; u < n; ++u) {
      const std::size_t x = g.state(k, u);
      if (key[x] == -kInfiniteTime || g.out[k][u].empty()) continue;
      if (u == source.v) recorded[u].push_back({g.times[k], g.times[k], 0});
      for (const Arc& arc : g.out[k][u]) {
        recorded[arc.to].push_back({key[x], g.times[k] + gamma, key_length[x] + 1});
      }
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    aggregate(g, v, std::move(cands[v]), result.records_, true);
    result.reach_[v] = undominated(std::move(recorded[v]));
  }
  return result;
}

bool check_lemma1(const LinkStream& stream, EventNode source) {
  check_source(stream, source);
  const Expanded g = expand(stream, 0);
  const std::size_t first = first_instant(g, source.t);
  if (first == g.instants()) return true;

  std::vector<Length> best(g.states(), kInfiniteLength);
  for (std::size_t j = first; j < g.instants(); ++j) {
    const Search s = search(g, j, source.v);
    for (std::size_t x = 0; x < g.states(); ++x) best[x] = std::min(best[x], s.dist[x]);
  }

  const Search s = search(g, first, source.v);
  const std::size_t root = g.state(first, source.v);
  for (std::size_t x = 0; x < g.states(); ++x) {
    if (s.dist[x] == kInfiniteLength) continue;
    if (s.dist[x] != best[x]) return false;
    std::vector<std::size_t> path;
    for (std::size_t y = x; y != kNone; y = s.parent[y]) path.push_back(y);
    std::reverse(path.begin(), path.end());
    if (path.front() != root) return false;

    Length hops = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
      const std::size_t ka = path[i - 1] / g.n;
      const std::size_t kb = path[i] / g.n;
      const NodeId a = static_cast<NodeId>(path[i - 1] % g.n);
      const NodeId b = static_cast<NodeId>(path[i] % g.n);
      if (a == b && kb == ka + 1) {
        // waiting
      } else if (ka == kb &&
                 std::any_of(g.out[ka][a].begin(), g.out[ka][a].end(),
                             [&](const Arc& arc) { return arc.to == b; })) {
        ++hops;
      } else {
        return false;
      }
      if (hops != best[path[i]]) return false;
    }
    if (hops != s.dist[x]) return false;
  }
  return true;
}

namespace {

// Distance from the source to (t_k^-, u): just before instant k.
Length outer_distance(const Expanded& g, const Search& from_source, std::size_t first,
                      EventNode source, std::size_t k, NodeId u) {
  if (k == first) return u == source.v ? 0 : kInfiniteLength;
  return from_source.dist[g.state(k - 1, u)];
}

}  // namespace

bool check_lemma2(const LinkStream& stream, EventNode source) {
  check_source(stream, source);
  const Expanded g = expand(stream, 0);
  if (g.states() > kLemmaCap) throw PreconditionError("instance too large for the lemma check");
  const std::size_t first = first_instant(g, source.t);
  if (first == g.instants()) return true;

  const Search from_source = search(g, first, source.v);
  std::vector<std::vector<Length>> rest(g.states());
  for (std::size_t k = first; k < g.instants(); ++k) {
    for (NodeId v = 0; v < g.n; ++v) rest[g.state(k, v)] = search(g, k, v).dist;
  }
  std::vector<std::vector<std::vector<Length>>> inside(g.instants());
  for (std::size_t k = first; k < g.instants(); ++k) {
    for (NodeId u = 0; u < g.n; ++u) inside[k].push_back(layer_distances(g, k, u));
  }

  for (std::size_t ky = first; ky < g.instants(); ++ky) {
    for (NodeId y = 0; y < g.n; ++y) {
      const std::size_t target = g.state(ky, y);
      const Length d = from_source.dist[target];
      if (d == kInfiniteLength || d == 0) continue;
      Length best = kInfiniteLength;
      for (std::size_t k = first; k <= ky; ++k) {
        for (NodeId u = 0; u < g.n; ++u) {
          const Length outer = outer_distance(g, from_source, first, source, k, u);
          if (outer == kInfiniteLength) continue;
          for (NodeId v = 0; v < g.n; ++v) {
            const Length in = inside[k][u][v];
            const Length tail = rest[g.state(k, v)][target];
            if (in == kInfiniteLength || tail == kInfiniteLength) continue;
            best = std::min(best, outer + in + tail);
          }
        }
      }
      if (best != d) return false;
    }
  }
  return true;
}

std::optional<Decomposition> decomposition_at(const LinkStream& stream, EventNode source,
                                              EventNode target, Time t) {
  check_source(stream, source);
  const Expanded g = expand(stream, 0);
  const auto k = instant_of(g, t);
  const auto ky = instant_of(g, target.t);
  if (!k || !ky || target.v >= g.n) throw PreconditionError("times must be event times");
  const std::size_t first = first_instant(g, source.t);
  if (*k < first || *k > *ky) return std::nullopt;

  const Search from_source = search(g, first, source.v);
  const std::size_t goal = g.state(*ky, target.v);
  std::vector<std::optional<std::vector<Length>>> rest(g.n);

  std::optional<Decomposition> best;
  for (NodeId u = 0; u < g.n; ++u) {
    const Length outer = outer_distance(g, from_source, first, source, *k, u);
    if (outer == kInfiniteLength) continue;
    const auto in = layer_distances(g, *k, u);
    for (NodeId v = 0; v < g.n; ++v) {
      if (in[v] == kInfiniteLength) continue;
      if (!rest[v]) rest[v] = search(g, *k, v).dist;
      const Length tail = (*rest[v])[goal];
      if (tail == kInfiniteLength) continue;
      const Length total = outer + in[v] + tail;
      // Ties go to the split that finishes inside the component.
      if (!best || total < best->total() || (total == best->total() && tail < best->rest)) {
        Decomposition d;
        d.t = t;
        d.entry = u;
        d.exit = v;
        d.outer = outer;
        d.inner = in[v];
        d.rest = tail;
        for (NodeId w = 0; w < g.n; ++w) {
          if (in[w] != kInfiniteLength) d.component.push_back(w);
        }
        best = d;
      }
    }
  }
  return best;
}

}  // namespace linkstream::oracle
