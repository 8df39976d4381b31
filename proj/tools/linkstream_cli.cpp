// Command-line front end: stream statistics, the metric computations, the
// SSMD/MSMD benchmark and the synthetic generator.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 precondition error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "linkstream/bench.hpp"
#include "linkstream/gamma.hpp"
#include "linkstream/io.hpp"
#include "linkstream/msmd.hpp"
#include "linkstream/ssmd.hpp"
#include "linkstream/synth.hpp"

namespace fs = std::filesystem;
using namespace linkstream;

namespace {

struct Common {
  std::string input;
  std::string format = "contacts";
  std::string out_dir = ".";
  std::uint64_t seed = 42;
  bool json = false;
};

struct SourceOptions {
  std::vector<std::string> specs;
  std::string file;
  std::size_t random = 0;
  unsigned threads = 0;
};

struct UsageError : Error {
  using Error::Error;
};

LinkStream load(const Common& c) {
  auto format = parse_format(c.format);
  if (!format) throw UsageError("unknown format '" + c.format + "'");
  return parse_stream(fs::path(c.input), ContactFileSpec{*format});
}

EventNode parse_source(const LinkStream& stream, const std::string& spec) {
  if (stream.empty()) throw PreconditionError("link stream has no event times");
  const auto at = spec.rfind('@');
  const std::string label = spec.substr(0, at);
  auto id = stream.labels().find(label);
  if (!id) throw PreconditionError("unknown node label '" + label + "'");
  Time t = stream.event_times().front();
  if (at != std::string::npos) t = parse_time(std::string_view(spec).substr(at + 1));
  return {t, *id};
}

std::vector<EventNode> collect_sources(const LinkStream& stream, const SourceOptions& o,
                                       std::uint64_t seed) {
  std::vector<EventNode> sources;
  for (const auto& s : o.specs) sources.push_back(parse_source(stream, s));
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw Error("cannot open " + o.file);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string spec;
      if (!(fields >> spec) || spec.front() == '#') continue;
      sources.push_back(parse_source(stream, spec));
    }
  }
  if (o.random > 0) {
    if (stream.empty()) throw PreconditionError("link stream has no event times");
    std::vector<NodeId> nodes(stream.node_count());
    std::iota(nodes.begin(), nodes.end(), NodeId{0});
    Rng rng(seed);
    const std::size_t k = std::min(o.random, nodes.size());
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(nodes[i], nodes[i + rng.below(nodes.size() - i)]);
      sources.push_back({stream.event_times().front(), nodes[i]});
    }
  }
  if (sources.empty() && !stream.empty()) {
    sources.push_back({stream.event_times().front(), 0});
  }
  return sources;
}

std::string source_name(const LinkStream& stream, EventNode s) {
  std::string name = stream.labels().name(s.v) + "@" + format_time(s.t);
  for (char& ch : name) {
    if (ch == '/' || ch == '\\') ch = '_';
  }
  return name;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

RunReport base_report(const std::string& algorithm, const LinkStream& stream, std::uint64_t seed) {
  RunReport r;
  r.algorithm = algorithm;
  r.nodes = stream.node_count();
  r.event_times = stream.event_times().size();
  r.event_edges_directed = directed_event_edge_count(stream);
  r.seed = seed;
  return r;
}

void finish(const Common& c, RunReport report, double wall_s) {
  report.wall_s = wall_s;
  report.peak_rss_bytes = peak_rss_bytes();
  append_report(fs::path(c.out_dir) / "report.csv", report);
  std::cout << report.algorithm << ": |V|=" << report.nodes << " |Omega|=" << report.event_times
            << " |E_Omega|(directed)=" << report.event_edges_directed << " wall_s=" << wall_s
            << " seed=" << report.seed << '\n';
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string join_sources(const LinkStream& stream, const std::vector<EventNode>& sources) {
  std::string out;
  for (const auto& s : sources) {
    if (!out.empty()) out += ';';
    out += source_name(stream, s);
  }
  return out;
}

void run_stats(const Common& c) {
  const LinkStream stream = load(c);
  std::cout << "nodes " << stream.node_count() << '\n'
            << "links " << stream.links().size() << '\n'
            << "event_times " << stream.event_times().size() << '\n'
            << "event_edges " << event_edge_count(stream) << '\n'
            << "event_edges_directed " << directed_event_edge_count(stream) << '\n';
}

void run_ssmd(const Common& c, const SourceOptions& o) {
  const LinkStream stream = load(c);
  const auto sources = collect_sources(stream, o, c.seed);
  fs::create_directories(c.out_dir);
  const auto start = std::chrono::steady_clock::now();
  const auto results = ssmd_all_sources(stream, sources, o.threads);
  const double wall = seconds_since(start);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const std::string name = source_name(stream, sources[i]);
    auto csv = open_out(fs::path(c.out_dir) / ("ssmd_" + name + ".csv"));
    write_ssmd_csv(csv, stream, results[i]);
    if (c.json) {
      std::vector<ReachMap> maps;
      for (NodeId v = 0; v < stream.node_count(); ++v) maps.push_back(results[i].reach_map(v));
      auto js = open_out(fs::path(c.out_dir) / ("reach_" + name + ".json"));
      write_reach_json(js, stream, sources[i], 0, maps);
    }
  }
  auto report = base_report("ssmd", stream, c.seed);
  report.sources = join_sources(stream, sources);
  finish(c, report, wall);
}

void run_msmd(const Common& c) {
  const LinkStream stream = load(c);
  fs::create_directories(c.out_dir);
  const auto start = std::chrono::steady_clock::now();
  const PairTables tables = msmd(stream);
  const double wall = seconds_since(start);
  auto csv = open_out(fs::path(c.out_dir) / "msmd.csv");
  write_msmd_csv(csv, stream, tables);
  auto report = base_report("msmd", stream, c.seed);
  report.sources = "all";
  finish(c, report, wall);
}

void run_gamma(const Common& c, const SourceOptions& o, double gamma) {
  if (!(gamma > 0)) {
    throw PreconditionError("--gamma must be > 0; for gamma = 0 use the ssmd subcommand");
  }
  const LinkStream stream = load(c);
  const auto sources = collect_sources(stream, o, c.seed);
  fs::create_directories(c.out_dir);
  double wall = 0;
  for (const auto& s : sources) {
    const auto start = std::chrono::steady_clock::now();
    const GammaResult result = ssmd_gamma(stream, s, GammaConfig{gamma});
    wall += seconds_since(start);
    const std::string name = source_name(stream, s);
    auto csv = open_out(fs::path(c.out_dir) / ("gamma_" + name + ".csv"));
    write_gamma_csv(csv, stream, result);
    if (c.json) {
      std::vector<ReachMap> maps;
      for (NodeId v = 0; v < stream.node_count(); ++v) maps.push_back(result.reach(v));
      auto js = open_out(fs::path(c.out_dir) / ("reach_gamma_" + name + ".json"));
      write_reach_json(js, stream, s, gamma, maps);
    }
  }
  auto report = base_report("gamma", stream, c.seed);
  report.sources = join_sources(stream, sources);
  finish(c, report, wall);
}

GenMode parse_mode(const std::string& mode) {
  if (mode == "discrete") return GenMode::discrete;
  if (mode == "interval") return GenMode::interval;
  throw UsageError("unknown mode '" + mode + "'");
}

std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> values;
  std::size_t a = 0, b = 0, step = 1;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> a)) throw UsageError("bad --n-range '" + text + "'");
  b = a;
  if (in >> c1) {
    if (c1 != ':' || !(in >> b)) throw UsageError("bad --n-range '" + text + "'");
    if (in >> c2 && (c2 != ':' || !(in >> step) || step == 0)) {
      throw UsageError("bad --n-range '" + text + "'");
    }
  }
  for (std::size_t n = a; n <= b; n += step) values.push_back(n);
  if (values.empty()) throw UsageError("empty --n-range '" + text + "'");
  return values;
}

void run_bench(const Common& c, const std::string& range, double p, const std::string& mode,
               std::size_t reps) {
  BenchSpec spec;
  spec.sizes = parse_range(range);
  spec.p = p;
  spec.mode = parse_mode(mode);
  spec.reps = reps;
  spec.seed = c.seed;
  const auto start = std::chrono::steady_clock::now();
  const auto rows = bench_compare(spec);
  const double wall = seconds_since(start);
  fs::create_directories(c.out_dir);
  auto csv = open_out(fs::path(c.out_dir) / "bench.csv");
  write_bench_csv(csv, rows);
  write_bench_csv(std::cout, rows);
  RunReport report;
  report.algorithm = "bench";
  for (const auto& r : rows) {
    report.nodes = std::max(report.nodes, r.nodes);
  }
  report.seed = c.seed;
  report.sources = "all";
  report.wall_s = wall;
  report.peak_rss_bytes = peak_rss_bytes();
  append_report(fs::path(c.out_dir) / "report.csv", report);
  std::cout << "seed " << c.seed << '\n';
}

void run_gen(const Common& c, std::size_t n, double p, const std::string& mode,
             const std::string& output) {
  GenSpec spec;
  spec.n = n;
  spec.p = p;
  spec.mode = parse_mode(mode);
  spec.seed = c.seed;
  const LinkStream stream = generate(spec);
  const FileFormat format =
      spec.mode == GenMode::discrete ? FileFormat::contacts : FileFormat::intervals;
  if (output.empty() || output == "-") {
    write_stream(std::cout, stream, format);
  } else {
    auto out = open_out(output);
    write_stream(out, stream, format);
  }
  std::cerr << "generated " << stream.links().size() << " links, format "
            << format_name(format) << ", seed " << c.seed << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distances, latencies and sf-metrics in link streams"};
  app.require_subcommand(1);

  Common common;
  SourceOptions sources;
  double gamma = 0;
  std::string range = "100:165:5";
  double p = 0.7;
  std::string mode = "discrete";
  std::size_t reps = 5;
  std::size_t gen_n = 10;
  std::string output;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", common.input, "Link stream file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--format", common.format, "contacts | intervals | konect")
        ->capture_default_str();
  };
  auto add_outputs = [&](CLI::App* cmd) {
    cmd->add_option("--out-dir", common.out_dir, "Directory for result files and report.csv")
        ->capture_default_str();
    cmd->add_option("--seed", common.seed, "Seed for every random choice")->capture_default_str();
  };
  auto add_sources = [&](CLI::App* cmd) {
    cmd->add_option("--source", sources.specs, "NODE[@TIME], TIME defaults to the first event time");
    cmd->add_option("--sources-file", sources.file, "File with one NODE[@TIME] per line");
    cmd->add_option("--random-sources", sources.random, "Draw K distinct source nodes");
    cmd->add_flag("--json", common.json, "Also write the reach maps as JSON");
  };

  auto* stats = app.add_subcommand("stats", "Print |V|, |Omega| and |E_Omega|");
  add_input(stats);

  auto* ssmd_cmd = app.add_subcommand("ssmd", "Single-source metrics");
  add_input(ssmd_cmd);
  add_outputs(ssmd_cmd);
  add_sources(ssmd_cmd);
  ssmd_cmd->add_option("--threads", sources.threads, "Worker threads, 0 = all cores")
      ->capture_default_str();

  auto* msmd_cmd = app.add_subcommand("msmd", "Metrics between all pairs of nodes");
  add_input(msmd_cmd);
  add_outputs(msmd_cmd);

  auto* gamma_cmd = app.add_subcommand("gamma", "Single-source metrics with a hop delay");
  add_input(gamma_cmd);
  add_outputs(gamma_cmd);
  add_sources(gamma_cmd);
  gamma_cmd->add_option("--gamma", gamma, "Minimum delay between hops, > 0")->required();

  auto* bench = app.add_subcommand("bench", "Time all-sources ssmd against msmd");
  add_outputs(bench);
  bench->add_option("--n-range", range, "A:B:STEP node counts")->capture_default_str();
  bench->add_option("--p", p, "Edge probability")->capture_default_str();
  bench->add_option("--mode", mode, "discrete | interval")->capture_default_str();
  bench->add_option("--reps", reps, "Streams per node count")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Write a synthetic link stream");
  gen->add_option("--n", gen_n, "Node count")->capture_default_str();
  gen->add_option("--p", p, "Edge probability")->capture_default_str();
  gen->add_option("--mode", mode, "discrete | interval")->capture_default_str();
  gen->add_option("--seed", common.seed, "Generator seed")->capture_default_str();
  gen->add_option("--output", output, "Output file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*stats) run_stats(common);
    if (*ssmd_cmd) run_ssmd(common, sources);
    if (*msmd_cmd) run_msmd(common);
    if (*gamma_cmd) run_gamma(common, sources, gamma);
    if (*bench) run_bench(common, range, p, mode, reps);
    if (*gen) run_gen(common, gen_n, p, mode, output);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
