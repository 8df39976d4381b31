// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Time limits are wall-clock on the whole criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "linkstream/bench.hpp"
#include "linkstream/gamma.hpp"
#include "linkstream/msmd.hpp"
#include "linkstream/oracle.hpp"
#include "linkstream/ssmd.hpp"
#include "linkstream/synth.hpp"
#include "support.hpp"

using namespace linkstream;
using testing_support::id;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_s,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = elapsed < limit_s;
  const bool pass = out.pass && in_time;
  if (!pass) ++failures;
  std::ostringstream line;
  line << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << title << ": " << out.detail
       << " (" << elapsed << " s, limit " << limit_s << " s" << (in_time ? "" : ", EXCEEDED")
       << ")";
  std::cout << line.str() << std::endl;
}

std::string show_opt(const std::optional<Length>& x) {
  return x ? std::to_string(*x) : "none";
}

Outcome sweep(const std::function<std::string()>& body, const std::string& what) {
  const std::string diff = body();
  if (!diff.empty()) return {false, diff};
  return {true, what};
}

}  // namespace

int main() {
  std::cout.precision(6);

  criterion(1, "contact example, source (1,g)", 1e-3, [] {
    const auto s = testing_support::contact_example();
    const auto start = Clock::now();
    const auto r = ssmd(s, {1, id(s, "g")});
    const auto from_f = ssmd(s, {9, id(s, "f")});
    const double spent = std::chrono::duration<double>(Clock::now() - start).count();
    const EventNode a9{9, id(s, "a")};
    const auto d = r.distance(a9);
    const auto f = r.latency(a9);
    const auto sf = r.sf_metric(a9);
    const auto sf_gf = r.sf_metric({9, id(s, "f")});
    const auto sf_fa = from_f.sf_metric(a9);
    const bool ok = d == 2u && f == 3.0 && sf == 3u && sf_gf == 1u && sf_fa == 1u &&
                    *sf_gf + *sf_fa < *sf;
    std::ostringstream msg;
    msg << "distance " << show_opt(d) << ", latency " << (f ? *f : -1) << ", sf " << show_opt(sf)
        << ", detour " << show_opt(sf_gf) << "+" << show_opt(sf_fa) << " (computed in " << spent
        << " s)";
    return Outcome{ok, msg.str()};
  });

  criterion(2, "contact example, reach triples at t=7", 1, [] {
    const auto s = testing_support::contact_example();
    const auto r = ssmd(s, {1, id(s, "g")});
    const auto c = r.reach_triple({7, id(s, "c")});
    const auto b = r.reach_triple({7, id(s, "b")});
    const auto a = r.reach_triple({7, id(s, "a")});
    const bool ok = c == ReachTriple{4, 7, 2} && b == ReachTriple{4, 7, 3} &&
                    a == ReachTriple{4, 7, 3} && r.latency({7, id(s, "a")}) == 3.0;
    auto fmt = [](const std::optional<ReachTriple>& t) {
      if (!t) return std::string("none");
      std::ostringstream o;
      o << "(" << t->start << "," << t->arrival << "," << t->length << ")";
      return o.str();
    };
    return Outcome{ok, "c " + fmt(c) + ", b " + fmt(b) + ", a " + fmt(a) + ", latency a " +
                           std::to_string(static_cast<int>(*r.latency({7, id(s, "a")})))};
  });

  criterion(3, "interval example, source (0,d)", 1, [] {
    const auto s = testing_support::interval_example();
    const auto r = ssmd(s, {0, id(s, "d")});
    const EventNode a3{3, id(s, "a")};
    const auto pairs = r.fastest_start_arrival(a3);
    const bool has_pair = std::find(pairs.begin(), pairs.end(), StartArrival{0, 3}) != pairs.end();
    const bool ok = r.latency(a3) == 3.0 && r.sf_metric(a3) == 3u && has_pair;
    return Outcome{ok, "latency " + std::to_string(static_cast<int>(r.latency(a3).value_or(-1))) +
                           ", sf " + show_opt(r.sf_metric(a3)) +
                           (has_pair ? ", pair (0,3) present" : ", pair (0,3) missing")};
  });

  criterion(4, "ssmd equals the exhaustive oracle on 200 random streams", 60, [] {
    return sweep(
        [] {
          std::mt19937_64 rng(4);
          std::size_t sources = 0;
          for (int round = 0; round < 200; ++round) {
            const double p = round % 2 == 0 ? 0.3 : 0.7;
            const auto s = testing_support::random_stream(rng, {2, 8, 5, p, false});
            if (s.empty()) continue;
            for (const auto& src : testing_support::sources_of(s)) {
              ++sources;
              auto diff = testing_support::compare_ssmd(s, src);
              if (!diff.empty()) return "round " + std::to_string(round) + ": " + diff;
            }
          }
          return std::string();
        },
        "200 streams, every source event node, f/d/triples identical");
  });

  criterion(5, "msmd equals the projection of ssmd on 100 random streams", 60, [] {
    return sweep(
        [] {
          std::mt19937_64 rng(5);
          for (int round = 0; round < 100; ++round) {
            const auto s = testing_support::random_stream(rng, {2, 8, 5, 0.5, round % 4 == 3});
            if (s.empty()) continue;
            auto diff = testing_support::compare_msmd(s, msmd(s));
            if (!diff.empty()) return "round " + std::to_string(round) + ": " + diff;
          }
          return std::string();
        },
        "100 streams, all ordered pairs identical");
  });

  criterion(6, "ssmd_gamma equals the delay oracle on 200 random streams", 60, [] {
    return sweep(
        [] {
          std::mt19937_64 rng(6);
          for (int round = 0; round < 200; ++round) {
            const auto s = testing_support::random_stream(rng, {2, 8, 6, round % 2 ? 0.3 : 0.7, false});
            if (s.empty()) continue;
            const Time gamma = round % 4 < 2 ? 1 : 2;
            for (const auto& src : testing_support::sources_of(s)) {
              auto diff = testing_support::compare_gamma(s, src, gamma);
              if (!diff.empty()) return "round " + std::to_string(round) + ": " + diff;
            }
          }
          return std::string();
        },
        "200 streams, gamma in {1,2}, latency/sf/reach maps identical");
  });

  criterion(7, "prefix and decomposition properties on 50 random streams each", 30, [] {
    std::mt19937_64 rng(7);
    int prefix = 0;
    int split = 0;
    for (int round = 0; round < 50; ++round) {
      const auto s = testing_support::random_stream(rng, {2, 8, 5, 0.5, round % 2 == 1});
      if (s.empty() || oracle::check_lemma1(s, {s.event_times().front(), 0})) ++prefix;
    }
    for (int round = 0; round < 50; ++round) {
      const auto s = testing_support::random_stream(rng, {2, 8, 5, 0.5, round % 2 == 1});
      if (s.empty() || oracle::check_lemma2(s, {s.event_times().front(), 0})) ++split;
    }
    return Outcome{prefix == 50 && split == 50, "prefix " + std::to_string(prefix) +
                                                    "/50, decomposition " + std::to_string(split) +
                                                    "/50"};
  });

  criterion(8, "generator statistics", 60, [] {
    double total = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      GenSpec spec;
      spec.n = 100;
      spec.p = 0.7;
      spec.seed = seed;
      total += static_cast<double>(directed_event_edge_count(gen_discrete(spec)));
    }
    const double mean = total / 5;
    const double rel = (mean - 6942.4) / 6942.4;
    const bool discrete_ok = std::abs(rel) <= 0.03;

    int checked = 0;
    int held = 0;
    std::ostringstream rows;
    for (std::size_t n = 10; n <= 70; n += 10) {
      GenSpec spec;
      spec.n = n;
      spec.p = 0.7;
      spec.mode = GenMode::interval;
      const auto s = gen_interval(spec);
      const std::size_t omega = s.event_times().size();
      if (omega != 2 * s.links().size()) continue;  // coinciding endpoints
      ++checked;
      const std::size_t e = directed_event_edge_count(s);
      if (e == 2 * omega) ++held;
      rows << " n=" << n << ":" << omega << "/" << e;
    }
    const bool interval_ok = checked > 0 && held == checked;
    std::ostringstream msg;
    msg.precision(6);
    msg << "discrete mean directed |E_Omega| " << mean << " (" << rel * 100 << "% from 6942.4, "
        << (discrete_ok ? "ok" : "out of tolerance") << "); interval |E_Omega| = 2|Omega| on "
        << held << "/" << checked << " streams [|Omega|/|E_Omega|:" << rows.str() << "]";
    return Outcome{discrete_ok && interval_ok, msg.str()};
  });

  criterion(9, "msmd beats all-sources ssmd with a nondecreasing ratio", 1800, [] {
    BenchSpec spec;
    spec.sizes = {100, 130, 160};
    spec.reps = 5;
    const auto rows = bench_compare(spec);
    bool ok = true;
    std::ostringstream msg;
    msg.precision(4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ok = ok && rows[i].msmd_s < rows[i].ssmd_s;
      if (i > 0) ok = ok && rows[i].ratio() >= rows[i - 1].ratio();
      msg << (i ? "; " : "") << "n=" << rows[i].nodes << " ssmd " << rows[i].ssmd_s << " s, msmd "
          << rows[i].msmd_s << " s, ratio " << rows[i].ratio();
    }
    return Outcome{ok, msg.str()};
  });

  criterion(10, "gamma operation count is linear in |E_Omega| log|Omega| + |V|", 120, [] {
    std::vector<double> x;
    std::vector<double> ops;
    for (std::size_t n : {60, 120, 180, 240}) {
      GenSpec spec;
      spec.n = n;
      spec.seed = 10;
      const auto s = gen_discrete(spec);
      GammaStats stats;
      ssmd_gamma(s, {s.event_times().front(), 0}, GammaConfig{1}, &stats);
      const double omega = static_cast<double>(s.event_times().size());
      x.push_back(static_cast<double>(directed_event_edge_count(s)) * std::log2(omega) +
                  static_cast<double>(n));
      ops.push_back(static_cast<double>(stats.operations()));
    }
    double sxy = 0;
    double sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sxy += x[i] * ops[i];
      sxx += x[i] * x[i];
    }
    const double c = sxy / sxx;
    bool ok = true;
    std::ostringstream msg;
    msg.precision(4);
    msg << "c=" << c;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double ratio = ops[i] / (c * x[i]);
      ok = ok && std::abs(ratio - 1) <= 0.25;
      msg << "; ops " << ops[i] << " vs c*x " << c * x[i] << " (" << ratio << ")";
    }
    return Outcome{ok, msg.str()};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
