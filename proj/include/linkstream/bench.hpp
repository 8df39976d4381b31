#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "linkstream/ssmd.hpp"
#include "linkstream/synth.hpp"

namespace linkstream {

// Runs ssmd from every source over the shared stream. threads == 0 picks the
// hardware concurrency. Results keep the order of `sources`.
std::vector<MetricsResult> ssmd_all_sources(const LinkStream& stream,
                                            std::span<const EventNode> sources,
                                            unsigned threads = 0,
                                            const SsmdOptions& options = {});

// Sources (min Omega, u) for every node u.
std::vector<EventNode> all_node_sources(const LinkStream& stream);

struct BenchSpec {
  std::vector<std::size_t> sizes;
  double p = 0.7;
  GenMode mode = GenMode::discrete;
  std::size_t reps = 5;
  std::uint64_t seed = 42;
};

// Means over the repetitions of one size.
struct BenchRow {
  std::size_t nodes = 0;
  double event_edges_directed = 0;
  double event_times = 0;
  double ssmd_s = 0;
  double msmd_s = 0;

  double ratio() const { return msmd_s > 0 ? ssmd_s / msmd_s : 0; }
};

// Seed of repetition r at size n; every stream of a sweep is reproducible
// from the sweep seed alone.
std::uint64_t bench_seed(std::uint64_t seed, std::size_t n, std::size_t rep);

// For each size: generate the streams, time ssmd from all |V| sources
// (single thread, no distance tracking) and msmd once.
std::vector<BenchRow> bench_compare(const BenchSpec& spec);

// Columns V,E_omega,SSMD_s,MSMD_s,ratio.
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace linkstream
