#include "linkstream/io.hpp"

#include <sys/resource.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace linkstream {

std::optional<FileFormat> parse_format(std::string_view name) {
  if (name == "contacts") return FileFormat::contacts;
  if (name == "intervals") return FileFormat::intervals;
  if (name == "konect") return FileFormat::konect;
  return std::nullopt;
}

std::string_view format_name(FileFormat format) {
  switch (format) {
    case FileFormat::contacts:
      return "contacts";
    case FileFormat::intervals:
      return "intervals";
    case FileFormat::konect:
      return "konect";
  }
  return "?";
}

std::string format_time(Time t) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, t);
  return std::string(buf, end);
}

Time parse_time(std::string_view text) {
  Time t = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, t);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return t;
}

namespace {

std::vector<std::string_view> split_blanks(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r') {
    fields.back().pop_back();
  }
  return fields;
}

std::size_t field_count(FileFormat format) {
  return format == FileFormat::contacts ? 3 : 4;
}

Time time_field(std::string_view text, std::size_t line) {
  try {
    return parse_time(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

template <class Int>
Int int_field(const std::string& text) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("not an integer: '" + text + "'");
  }
  return value;
}

std::string optional_field(const std::optional<Time>& t) {
  return t ? format_time(*t) : std::string();
}

}  // namespace

LinkStream parse_stream(std::istream& in, const ContactFileSpec& spec) {
  NodeLabels labels;
  std::vector<IntervalLink> raw;
  const std::size_t expected = field_count(spec.format);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto fields = split_blanks(line);
    if (fields.empty() || fields[0].front() == '#' || fields[0].front() == '%') continue;
    if (fields.size() != expected) {
      throw ParseError("expected " + std::to_string(expected) + " fields for " +
                           std::string(format_name(spec.format)) + " format, got " +
                           std::to_string(fields.size()),
                       number);
    }
    IntervalLink link;
    switch (spec.format) {
      case FileFormat::contacts:
        link.begin = link.end = time_field(fields[2], number);
        break;
      case FileFormat::intervals:
        link.begin = time_field(fields[2], number);
        link.end = time_field(fields[3], number);
        break;
      case FileFormat::konect:
        link.begin = link.end = time_field(fields[3], number);
        break;
    }
    if (!std::isfinite(link.begin) || !std::isfinite(link.end)) {
      throw ParseError("time is not finite", number);
    }
    if (link.end < link.begin) throw ParseError("link ends before it begins", number);
    if (fields[0] == fields[1]) {
      throw ParseError("self-loop on node '" + std::string(fields[0]) + "'", number);
    }
    link.u = labels.intern(fields[0]);
    link.v = labels.intern(fields[1]);
    raw.push_back(link);
  }
  if (in.bad()) throw Error("read error");
  const std::size_t n = labels.size();
  return build_link_stream(raw, n, std::move(labels));
}

LinkStream parse_stream(const std::filesystem::path& path, const ContactFileSpec& spec) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_stream(in, spec);
}

void write_stream(std::ostream& out, const LinkStream& stream, FileFormat format) {
  const auto& labels = stream.labels();
  for (const auto& link : stream.links()) {
    out << labels.name(link.u) << ' ' << labels.name(link.v) << ' ';
    switch (format) {
      case FileFormat::contacts:
        if (link.begin != link.end) {
          throw PreconditionError("contacts format needs instantaneous links");
        }
        out << format_time(link.begin);
        break;
      case FileFormat::intervals:
        out << format_time(link.begin) << ' ' << format_time(link.end);
        break;
      case FileFormat::konect:
        if (link.begin != link.end) {
          throw PreconditionError("konect format needs instantaneous links");
        }
        out << "1 " << format_time(link.begin);
        break;
    }
    out << '\n';
  }
}

void write_ssmd_csv(std::ostream& out, const LinkStream& stream, const MetricsResult& result) {
  out << "t,v,latency,sf_metric\n";
  const auto omega = stream.event_times();
  for (std::size_t k = stream.first_event_at_or_after(result.source().t); k < omega.size(); ++k) {
    for (NodeId v = 0; v < stream.node_count(); ++v) {
      const EventNode target{omega[k], v};
      const auto sf = result.sf_metric(target);
      out << format_time(omega[k]) << ',' << stream.labels().name(v) << ','
          << optional_field(result.latency(target)) << ','
          << (sf ? std::to_string(*sf) : std::string()) << '\n';
    }
  }
}

void write_gamma_csv(std::ostream& out, const LinkStream& stream, const GammaResult& result) {
  out << "t,v,latency,sf_metric\n";
  const auto omega = stream.event_times();
  for (std::size_t k = stream.first_event_at_or_after(result.source().t); k < omega.size(); ++k) {
    for (NodeId v = 0; v < stream.node_count(); ++v) {
      const EventNode target{omega[k], v};
      const auto sf = result.sf_metric(target);
      out << format_time(omega[k]) << ',' << stream.labels().name(v) << ','
          << optional_field(result.latency(target)) << ','
          << (sf ? std::to_string(*sf) : std::string()) << '\n';
    }
  }
}

void write_msmd_csv(std::ostream& out, const LinkStream& stream, const PairTables& tables) {
  out << "u,v,t,latency,sf_metric,start\n";
  const auto omega = stream.event_times();
  const auto& labels = stream.labels();
  for (NodeId u = 0; u < stream.node_count(); ++u) {
    for (NodeId v = 0; v < stream.node_count(); ++v) {
      for (Time t : omega) {
        const auto latency = tables.latency(u, v, t);
        if (!latency) continue;
        const auto sf = *tables.sf_metric(u, v, t);
        out << labels.name(u) << ',' << labels.name(v) << ',' << format_time(t) << ','
            << format_time(*latency) << ',' << sf.length << ',' << format_time(sf.start) << '\n';
      }
    }
  }
}

std::vector<MetricsRow> read_metrics_csv(std::istream& in) {
  std::vector<MetricsRow> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    if (++number == 1 || line.empty()) continue;
    const auto f = split_commas(line);
    if (f.size() != 4) throw ParseError("expected 4 CSV fields", number);
    MetricsRow row;
    row.t = time_field(f[0], number);
    row.v = f[1];
    if (!f[2].empty()) row.latency = time_field(f[2], number);
    if (!f[3].empty()) row.sf_metric = int_field<Length>(f[3]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PairRow> read_msmd_csv(std::istream& in) {
  std::vector<PairRow> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    if (++number == 1 || line.empty()) continue;
    const auto f = split_commas(line);
    if (f.size() != 6) throw ParseError("expected 6 CSV fields", number);
    rows.push_back({f[0], f[1], time_field(f[2], number), time_field(f[3], number),
                    int_field<Length>(f[4]), time_field(f[5], number)});
  }
  return rows;
}

void write_reach_json(std::ostream& out, const LinkStream& stream, EventNode source, Time gamma,
                      const std::vector<ReachMap>& maps) {
  nlohmann::json doc;
  doc["source"] = {{"node", stream.labels().name(source.v)}, {"t", source.t}};
  doc["gamma"] = gamma;
  nlohmann::json nodes = nlohmann::json::object();
  for (NodeId v = 0; v < maps.size(); ++v) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& tr : maps[v].triples()) {
      list.push_back({{"start", tr.start}, {"arrival", tr.arrival}, {"length", tr.length}});
    }
    nodes[stream.labels().name(v)] = std::move(list);
  }
  doc["nodes"] = std::move(nodes);
  out << doc.dump(1) << '\n';
}

LabeledReach read_reach_json(std::istream& in) {
  LabeledReach out;
  try {
    const auto doc = nlohmann::json::parse(in);
    for (const auto& [label, list] : doc.at("nodes").items()) {
      auto& triples = out[label];
      for (const auto& e : list) {
        triples.push_back(
            {e.at("start").get<Time>(), e.at("arrival").get<Time>(), e.at("length").get<Length>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad reach JSON: ") + e.what());
  }
  return out;
}

void append_report(const std::filesystem::path& path, const RunReport& r) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot write " + path.string());
  if (fresh) {
    out << "algorithm,nodes,event_times,event_edges_directed,wall_s,peak_rss_bytes,seed,sources\n";
  }
  out << r.algorithm << ',' << r.nodes << ',' << r.event_times << ',' << r.event_edges_directed
      << ',' << r.wall_s << ',' << r.peak_rss_bytes << ',' << r.seed << ',' << r.sources << '\n';
}

long long peak_rss_bytes() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return 0;
  return static_cast<long long>(usage.ru_maxrss) * 1024;
}

}  // namespace linkstream
