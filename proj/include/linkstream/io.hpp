#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkstream/gamma.hpp"
#include "linkstream/link_stream.hpp"
#include "linkstream/msmd.hpp"
#include "linkstream/ssmd.hpp"

namespace linkstream {

// Line grammars, fields separated by blanks; lines starting with '#' or '%'
// and blank lines are skipped:
//   contacts   u v t
//   intervals  u v t_begin t_end
//   konect     u v w t        (w ignored)
enum class FileFormat { contacts, intervals, konect };

struct ContactFileSpec {
  FileFormat format = FileFormat::contacts;
};

std::optional<FileFormat> parse_format(std::string_view name);
std::string_view format_name(FileFormat format);

// Node labels get dense ids in order of first appearance. Throws ParseError
// carrying the line number for a wrong field count, a non-numeric time, or an
// invalid link.
LinkStream parse_stream(std::istream& in, const ContactFileSpec& spec);
LinkStream parse_stream(const std::filesystem::path& path, const ContactFileSpec& spec);

// Writes the maximal links. Contacts format requires instantaneous links.
void write_stream(std::ostream& out, const LinkStream& stream, FileFormat format);

// Shortest text that reads back to the same double.
std::string format_time(Time t);
Time parse_time(std::string_view text);

// CSV rows, one per event node from the source time on (ssmd, gamma) or per
// reachable (u, v, t) (msmd). Missing values are empty fields.
void write_ssmd_csv(std::ostream& out, const LinkStream& stream, const MetricsResult& result);
void write_gamma_csv(std::ostream& out, const LinkStream& stream, const GammaResult& result);
void write_msmd_csv(std::ostream& out, const LinkStream& stream, const PairTables& tables);

struct MetricsRow {
  Time t = 0;
  std::string v;
  std::optional<Time> latency;
  std::optional<Length> sf_metric;

  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};
// Reads the ssmd and gamma CSV layout.
std::vector<MetricsRow> read_metrics_csv(std::istream& in);

struct PairRow {
  std::string u;
  std::string v;
  Time t = 0;
  Time latency = 0;
  Length sf_metric = 0;
  Time start = 0;

  friend bool operator==(const PairRow&, const PairRow&) = default;
};
std::vector<PairRow> read_msmd_csv(std::istream& in);

// Reach maps of every node keyed by label:
// {"source": {"node": .., "t": ..}, "gamma": .., "nodes": {label: [{start, arrival, length}]}}
using LabeledReach = std::map<std::string, std::vector<ReachTriple>>;
void write_reach_json(std::ostream& out, const LinkStream& stream, EventNode source, Time gamma,
                      const std::vector<ReachMap>& maps);
LabeledReach read_reach_json(std::istream& in);

struct RunReport {
  std::string algorithm;
  std::size_t nodes = 0;
  std::size_t event_times = 0;
  std::size_t event_edges_directed = 0;
  double wall_s = 0;
  long long peak_rss_bytes = 0;
  std::uint64_t seed = 0;
  std::string sources;
};

// Appends one CSV row, writing the header when the file is new or empty.
void append_report(const std::filesystem::path& path, const RunReport& report);

// Peak resident set size of this process, 0 when unavailable.
long long peak_rss_bytes();

}  // namespace linkstream
