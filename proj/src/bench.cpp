#include "linkstream/bench.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "linkstream/msmd.hpp"

namespace linkstream {

std::vector<MetricsResult> ssmd_all_sources(const LinkStream& stream,
                                            std::span<const EventNode> sources,
                                            unsigned threads, const SsmdOptions& options) {
  std::vector<MetricsResult> results(sources.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, sources.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < sources.size(); i = next++) {
      try {
        results[i] = ssmd(stream, sources[i], options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::vector<EventNode> all_node_sources(const LinkStream& stream) {
  std::vector<EventNode> sources;
  if (stream.empty()) return sources;
  const Time t0 = stream.event_times().front();
  for (NodeId u = 0; u < stream.node_count(); ++u) sources.push_back({t0, u});
  return sources;
}

std::uint64_t bench_seed(std::uint64_t seed, std::size_t n, std::size_t rep) {
  return seed + 1000003ULL * n + rep;
}

std::vector<BenchRow> bench_compare(const BenchSpec& spec) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  for (std::size_t n : spec.sizes) {
    BenchRow row;
    row.nodes = n;
    for (std::size_t r = 0; r < spec.reps; ++r) {
      GenSpec gen;
      gen.n = n;
      gen.p = spec.p;
      gen.mode = spec.mode;
      gen.seed = bench_seed(spec.seed, n, r);
      const LinkStream stream = generate(gen);
      row.event_edges_directed += static_cast<double>(directed_event_edge_count(stream));
      row.event_times += static_cast<double>(stream.event_times().size());
      if (stream.empty()) continue;

      const auto sources = all_node_sources(stream);
      SsmdOptions options;
      options.track_distance = false;
      auto start = Clock::now();
      const auto all = ssmd_all_sources(stream, sources, 1, options);
      row.ssmd_s += std::chrono::duration<double>(Clock::now() - start).count();

      start = Clock::now();
      const PairTables tables = msmd(stream);
      row.msmd_s += std::chrono::duration<double>(Clock::now() - start).count();
    }
    const double reps = static_cast<double>(std::max<std::size_t>(1, spec.reps));
    row.event_edges_directed /= reps;
    row.event_times /= reps;
    row.ssmd_s /= reps;
    row.msmd_s /= reps;
    rows.push_back(row);
  }
  return rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "V,E_omega,SSMD_s,MSMD_s,ratio\n";
  for (const auto& r : rows) {
    out << r.nodes << ',' << r.event_edges_directed << ',' << r.ssmd_s << ',' << r.msmd_s << ','
        << r.ratio() << '\n';
  }
}

}  // namespace linkstream
