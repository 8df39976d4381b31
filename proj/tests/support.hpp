#pragma once

// Shared fixtures and comparison helpers for the unit tests and the
// acceptance runner. Comparisons return an empty string on agreement and a
// description of the first difference otherwise.

#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "linkstream/gamma.hpp"
#include "linkstream/link_stream.hpp"
#include "linkstream/msmd.hpp"
#include "linkstream/oracle.hpp"
#include "linkstream/ssmd.hpp"

namespace testing_support {

using namespace linkstream;

struct Row {
  std::string u;
  std::string v;
  Time begin;
  Time end;
};

inline LinkStream make_stream(const std::vector<Row>& rows) {
  NodeLabels labels;
  std::vector<IntervalLink> raw;
  for (const auto& r : rows) {
    const NodeId u = labels.intern(r.u);
    const NodeId v = labels.intern(r.v);
    raw.push_back({u, v, r.begin, r.end});
  }
  const std::size_t n = labels.size();
  return build_link_stream(raw, n, std::move(labels));
}

// Contacts g-f at 2, g-e at 4, e-c at 5, c-b at 6, c-a and b-a at 7, f-a at 9.
inline LinkStream contact_example() {
  return make_stream({{"g", "f", 2, 2},
                      {"g", "e", 4, 4},
                      {"e", "c", 5, 5},
                      {"c", "b", 6, 6},
                      {"c", "a", 7, 7},
                      {"b", "a", 7, 7},
                      {"f", "a", 9, 9}});
}

// d-c at 0, c-b over [1, 2] given in two pieces, b-a at 3, d-c at 3.
inline LinkStream interval_example() {
  return make_stream({{"c", "b", 1, 1.5},
                      {"c", "b", 1.5, 2},
                      {"d", "c", 0, 0},
                      {"b", "a", 3, 3},
                      {"d", "c", 3, 3}});
}

inline NodeId id(const LinkStream& s, std::string_view label) {
  return *s.labels().find(label);
}

struct Shape {
  std::size_t min_nodes = 2;
  std::size_t max_nodes = 8;
  int max_time = 5;
  double p = 0.5;
  bool intervals = false;
};

// Small random stream: each pair is kept with probability p and receives one
// or two links at integer times in [0, max_time]; with intervals the links
// get integer or half-integer durations.
inline LinkStream random_stream(std::mt19937_64& rng, const Shape& shape) {
  std::uniform_int_distribution<std::size_t> nodes(shape.min_nodes, shape.max_nodes);
  std::uniform_int_distribution<int> time(0, shape.max_time);
  std::uniform_real_distribution<double> coin(0, 1);
  const std::size_t n = nodes(rng);
  std::vector<IntervalLink> raw;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng) >= shape.p) continue;
      const int copies = coin(rng) < 0.3 ? 2 : 1;
      for (int c = 0; c < copies; ++c) {
        const Time b = time(rng);
        Time e = b;
        if (shape.intervals && coin(rng) < 0.6) {
          e = std::min<Time>(shape.max_time, b + 0.5 * std::uniform_int_distribution<int>(0, 4)(rng));
        }
        if (coin(rng) < 0.5) {
          raw.push_back({u, v, b, e});
        } else {
          raw.push_back({v, u, b, e});
        }
      }
    }
  }
  return build_link_stream(raw, n);
}

template <class T>
std::string show(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

inline std::string where(EventNode e) {
  return "(t=" + show(e.t) + ", v=" + show(e.v) + ")";
}

// Zero-delay single-source result against the exhaustive oracle: latency,
// sf-metric and its start, distance, reach triple, fastest (start, arrival)
// pairs at every event node, and the stored reach list of every node.
inline std::string compare_ssmd(const LinkStream& stream, EventNode source) {
  const MetricsResult got = ssmd(stream, source);
  const oracle::OracleResult want = oracle::enumerate_metrics(stream, source, 0);
  for (std::size_t k = 0; k < want.times().size(); ++k) {
    for (NodeId v = 0; v < stream.node_count(); ++v) {
      const EventNode target{want.times()[k], v};
      const auto& rec = want.record(k, v);
      const std::string at = " at " + where(target) + " from " + where(source);
      if (!rec.reachable) {
        if (got.latency(target) || got.reach_triple(target) || got.distance(target)) {
          return "reachable only in ssmd" + at;
        }
        continue;
      }
      if (got.latency(target) != rec.latency) return "latency" + at;
      if (got.sf_metric(target) != rec.sf_metric) return "sf-metric" + at;
      if (got.sf_start(target) != rec.sf_start) return "sf start" + at;
      if (got.distance(target) != rec.distance) return "distance" + at;
      if (got.reach_triple(target) != rec.triple) return "reach triple" + at;
      auto pairs = got.fastest_start_arrival(target);
      std::sort(pairs.begin(), pairs.end());
      if (pairs != rec.fastest) return "fastest pairs" + at;
    }
  }
  for (NodeId v = 0; v < stream.node_count(); ++v) {
    const auto list = want.reach_list(v);
    const auto points = got.history(v).reach.points();
    if (list.size() != points.size()) return "reach list size of node " + show(v);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const ReachTriple tr{points[i].value.start, points[i].t, points[i].value.length};
      if (tr != list[i]) return "reach list entry " + show(i) + " of node " + show(v);
    }
  }
  return {};
}

// Pair tables against single-source runs from (min Omega, u).
inline std::string compare_msmd(const LinkStream& stream, const PairTables& tables) {
  const Time t0 = stream.event_times().front();
  for (NodeId u = 0; u < stream.node_count(); ++u) {
    const MetricsResult single = ssmd(stream, {t0, u});
    for (NodeId v = 0; v < stream.node_count(); ++v) {
      const auto& a = tables.history(u, v);
      const auto& b = single.history(v);
      const std::string pair = " for pair (" + show(u) + ", " + show(v) + ")";
      for (Time t : stream.event_times()) {
        if (tables.latency(u, v, t) != single.latency({t, v})) return "latency" + pair;
        if (tables.reach_triple(u, v, t) != single.reach_triple({t, v})) return "triple" + pair;
        const auto sf = tables.sf_metric(u, v, t);
        if (sf.has_value() != single.sf_metric({t, v}).has_value()) return "sf presence" + pair;
        if (sf && (sf->length != *single.sf_metric({t, v}) || sf->start != *single.sf_start({t, v}))) {
          return "sf-metric" + pair;
        }
      }
      if (a.reach.size() != b.reach.size()) return "reach list" + pair;
      for (std::size_t i = 0; i < a.reach.size(); ++i) {
        const auto& x = a.reach.points()[i];
        const auto& y = b.reach.points()[i];
        if (x.t != y.t || !(x.value == y.value)) return "reach list" + pair;
      }
    }
  }
  return {};
}

// Positive-delay result against the delay-aware oracle at every contact time
// from the source time on, plus the recorded reach triples.
inline std::string compare_gamma(const LinkStream& stream, EventNode source, Time gamma) {
  const GammaResult got = ssmd_gamma(stream, source, GammaConfig{gamma});
  const oracle::OracleResult want = oracle::enumerate_metrics(stream, source, gamma);
  for (std::size_t k = 0; k < want.times().size(); ++k) {
    const Time t = want.times()[k];
    if (t < source.t) continue;
    for (NodeId v = 0; v < stream.node_count(); ++v) {
      const auto& rec = want.record(k, v);
      const std::string at = " at " + where({t, v}) + " from " + where(source) +
                             " gamma " + show(gamma);
      const auto latency = got.latency({t, v});
      if (!rec.reachable) {
        if (latency) return "reachable only in ssmd_gamma" + at;
        continue;
      }
      if (latency != rec.latency) return "latency" + at;
      if (got.sf_metric({t, v}) != rec.sf_metric) return "sf-metric" + at;
    }
  }
  for (NodeId v = 0; v < stream.node_count(); ++v) {
    const auto triples = got.reach(v).triples();
    const auto list = want.reach_list(v);
    if (!std::equal(triples.begin(), triples.end(), list.begin(), list.end())) {
      return "reach map of node " + show(v) + " from " + where(source) + " gamma " + show(gamma);
    }
  }
  return {};
}

// Every event node with a time in Omega, plus one source between event times.
inline std::vector<EventNode> sources_of(const LinkStream& stream) {
  std::vector<EventNode> out;
  const auto omega = stream.event_times();
  for (Time t : omega) {
    for (NodeId v = 0; v < stream.node_count(); ++v) out.push_back({t, v});
  }
  if (omega.size() > 1) out.push_back({(omega[0] + omega[1]) / 2, 0});
  return out;
}

}  // namespace testing_support
