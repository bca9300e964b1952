#include "asearch/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace asearch {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view name) {
  if (name == "table") return ReportFormat::table;
  if (name == "csv") return ReportFormat::csv;
  if (name == "structured") return ReportFormat::structured;
  throw std::invalid_argument("unknown report format '" + std::string(name) +
                              "' (expected table, csv or structured)");
}

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string right(const std::string& text, std::size_t width) {
  return text.size() >= width ? " " + text : std::string(width - text.size(), ' ') + text;
}

std::string left(const std::string& text, std::size_t width) {
  return text.size() >= width ? text + " " : text + std::string(width - text.size(), ' ');
}

std::string centered(const std::string& text, std::size_t width) {
  if (text.size() + 2 >= width) return "  " + text;
  const std::size_t pad = width - text.size();
  return std::string(pad - pad / 2, ' ') + text + std::string(pad / 2, ' ');
}

std::string mean_or_na(const CellReport* cell) {
  if (!cell) return "n/a";
  const auto mean = cell->mean_seconds();
  return mean ? fixed(*mean, 3) : "n/a";
}

constexpr std::size_t kInstanceWidth = 10;
constexpr std::size_t kTimeWidth = 10;
constexpr std::size_t kSpeedupWidth = 8;
constexpr std::size_t kLastWidth = 12;

}  // namespace

std::string format_table(const RunReport& report) {
  std::ostringstream out;
  const std::vector<std::size_t> parallel(
      report.workers.empty() ? report.workers.begin() : report.workers.begin() + 1,
      report.workers.end());
  const std::size_t baseline = report.workers.empty() ? 1 : report.workers.front();
  const std::size_t largest = report.workers.empty() ? 1 : report.workers.back();

  std::string head1 = left("Problem", kInstanceWidth) + right("time (s)", kTimeWidth);
  std::string head2 = left("instance", kInstanceWidth) +
                      right(baseline == 1 ? "seq." : std::to_string(baseline) + " workers",
                            kTimeWidth);
  if (!parallel.empty()) {
    head1 += centered("speed-up with k workers", kSpeedupWidth * parallel.size());
    for (std::size_t w : parallel) head2 += right(std::to_string(w), kSpeedupWidth);
  }
  head1 += right("time (s)", kLastWidth);
  head2 += right(std::to_string(largest) + (largest == 1 ? " worker" : " workers"), kLastWidth);

  out << report.problem << ": multi-walk (timings and speed-ups)\n";
  out << head1 << '\n' << head2 << '\n';
  out << std::string(std::max(head1.size(), head2.size()), '-') << '\n';

  for (int size : report.sizes) {
    out << left(std::to_string(size), kInstanceWidth)
        << right(mean_or_na(report.cell(size, baseline)), kTimeWidth);
    for (std::size_t w : parallel) {
      const auto s = report.speedup(size, w);
      out << right(s ? fixed(*s, 2) : "n/a", kSpeedupWidth);
    }
    out << right(mean_or_na(report.cell(size, largest)), kLastWidth) << '\n';
  }

  out << "\nsamples per cell: " << report.metadata.samples
      << "; times are means over solved samples\n";
  for (const auto& cell : report.cells) {
    if (cell.censored() == 0) continue;
    out << "censored: size " << cell.size << ", " << cell.workers << " workers: "
        << cell.censored() << " of " << cell.samples.size() << " unsolved ("
        << cell.timed_out() << " timed out)\n";
  }
  return out.str();
}

std::string format_csv(const RunReport& report) {
  std::ostringstream out;
  out << "problem,size,workers,sample,seconds,solved\n";
  for (const auto& cell : report.cells) {
    for (const auto& s : cell.samples) {
      out << report.problem << ',' << cell.size << ',' << cell.workers << ',' << s.sample << ','
          << fixed(s.seconds(), 3) << ',' << (s.solved ? 1 : 0) << '\n';
    }
  }
  return out.str();
}

namespace {

json params_to_json(const SolverParams& p) {
  return json{{"tenure", p.tenure},
              {"reset_limit", p.reset_limit},
              {"max_iterations", p.max_iterations},
              {"max_restarts", p.max_restarts},
              {"reset_fraction", p.reset_fraction},
              {"escape_percent", p.escape_percent}};
}

SolverParams params_from_json(const json& j) {
  SolverParams p;
  p.tenure = j.at("tenure").get<std::uint64_t>();
  p.reset_limit = j.at("reset_limit").get<std::uint64_t>();
  p.max_iterations = j.at("max_iterations").get<std::uint64_t>();
  p.max_restarts = j.at("max_restarts").get<std::uint64_t>();
  p.reset_fraction = j.at("reset_fraction").get<double>();
  p.escape_percent = j.at("escape_percent").get<std::uint32_t>();
  return p;
}

}  // namespace

std::string format_structured(const RunReport& report) {
  json params = json::object();
  for (const auto& [size, p] : report.metadata.params) params[std::to_string(size)] = params_to_json(p);

  json cells = json::array();
  for (const auto& cell : report.cells) {
    json samples = json::array();
    for (const auto& s : cell.samples) {
      samples.push_back(json{{"sample", s.sample},
                             {"millis", s.millis},
                             {"solved", s.solved},
                             {"timed_out", s.timed_out},
                             {"iterations", s.iterations},
                             {"restarts", s.restarts},
                             {"cost", s.cost},
                             {"worker_id", s.worker_id ? json(*s.worker_id) : json(nullptr)}});
    }
    json entry{{"size", cell.size}, {"workers", cell.workers}, {"samples", std::move(samples)}};
    const auto mean = cell.mean_seconds();
    const auto median = cell.median_seconds();
    const auto speedup = report.speedup(cell.size, cell.workers);
    entry["mean_seconds"] = mean ? json(*mean) : json(nullptr);
    entry["median_seconds"] = median ? json(*median) : json(nullptr);
    entry["solve_rate"] = cell.solve_rate();
    entry["censored"] = cell.censored();
    entry["speedup"] = speedup ? json(*speedup) : json(nullptr);
    cells.push_back(std::move(entry));
  }

  const json doc{{"problem", report.problem},
                 {"sizes", report.sizes},
                 {"workers", report.workers},
                 {"metadata",
                  {{"seed_base", report.metadata.seed_base},
                   {"samples", report.metadata.samples},
                   {"timeout_seconds", report.metadata.timeout_seconds},
                   {"params", std::move(params)},
                   {"hardware_threads", report.metadata.hardware_threads},
                   {"compiler", report.metadata.compiler}}},
                 {"cells", std::move(cells)}};
  return doc.dump(2) + "\n";
}

std::string emit_report(const RunReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::table: return format_table(report);
    case ReportFormat::csv: return format_csv(report);
    case ReportFormat::structured: return format_structured(report);
  }
  throw std::invalid_argument("unknown report format");
}

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    parts.emplace_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

CellReport& cell_for(RunReport& report, int size, std::size_t workers) {
  for (auto& c : report.cells) {
    if (c.size == size && c.workers == workers) return c;
  }
  if (std::find(report.sizes.begin(), report.sizes.end(), size) == report.sizes.end()) {
    report.sizes.push_back(size);
  }
  if (std::find(report.workers.begin(), report.workers.end(), workers) == report.workers.end()) {
    report.workers.push_back(workers);
  }
  report.cells.push_back(CellReport{size, workers, {}});
  return report.cells.back();
}

}  // namespace

RunReport parse_csv(std::string_view text) {
  RunReport report;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (line_no == 1) {
      if (line != "problem,size,workers,sample,seconds,solved") {
        throw std::invalid_argument("csv: unexpected header");
      }
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 6) {
      throw std::invalid_argument("csv: line " + std::to_string(line_no) + " has " +
                                  std::to_string(fields.size()) + " fields");
    }
    if (report.problem.empty()) report.problem = fields[0];
    CellReport& cell = cell_for(report, std::stoi(fields[1]),
                                static_cast<std::size_t>(std::stoull(fields[2])));
    SampleRecord s;
    s.sample = static_cast<std::size_t>(std::stoull(fields[3]));
    s.millis = std::llround(std::stod(fields[4]) * 1000.0);
    s.solved = fields[5] == "1";
    cell.samples.push_back(s);
  }
  std::sort(report.workers.begin(), report.workers.end());
  return report;
}

RunReport parse_structured(std::string_view text) {
  const json doc = json::parse(text);
  RunReport report;
  report.problem = doc.at("problem").get<std::string>();
  report.sizes = doc.at("sizes").get<std::vector<int>>();
  report.workers = doc.at("workers").get<std::vector<std::size_t>>();
  const json& meta = doc.at("metadata");
  report.metadata.seed_base = meta.at("seed_base").get<std::uint64_t>();
  report.metadata.samples = meta.at("samples").get<std::size_t>();
  report.metadata.timeout_seconds = meta.at("timeout_seconds").get<double>();
  for (const auto& [key, value] : meta.at("params").items()) {
    report.metadata.params[std::stoi(key)] = params_from_json(value);
  }
  report.metadata.hardware_threads = meta.at("hardware_threads").get<unsigned>();
  report.metadata.compiler = meta.at("compiler").get<std::string>();
  for (const auto& entry : doc.at("cells")) {
    CellReport cell;
    cell.size = entry.at("size").get<int>();
    cell.workers = entry.at("workers").get<std::size_t>();
    for (const auto& s : entry.at("samples")) {
      SampleRecord rec;
      rec.sample = s.at("sample").get<std::size_t>();
      rec.millis = s.at("millis").get<std::int64_t>();
      rec.solved = s.at("solved").get<bool>();
      rec.timed_out = s.at("timed_out").get<bool>();
      rec.iterations = s.at("iterations").get<std::uint64_t>();
      rec.restarts = s.at("restarts").get<std::uint64_t>();
      rec.cost = s.at("cost").get<Cost>();
      if (!s.at("worker_id").is_null()) rec.worker_id = s.at("worker_id").get<std::size_t>();
      cell.samples.push_back(rec);
    }
    report.cells.push_back(std::move(cell));
  }
  return report;
}

}  // namespace asearch
