#include "deaic/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <unordered_set>
#include <utility>

#include "deaic/errors.hpp"

namespace deaic {
namespace {

constexpr std::string_view kProducersHeader =
    "id,electricity_mwh,raw_materials_e10_rial,labor_hours_e6,sales_e10_rial";
constexpr std::string_view kOutagesHeader = "producer_id,duration_h,demand_mw";
constexpr std::string_view kDistributionsHeader = "producer_id,mean_mwh,std_mwh";
constexpr std::string_view kSamplesHeader =
    "producer_id,sample_index,e0_mwh,beta,ic_rial_per_kwh";

struct Line {
  std::size_t number;  // 1-based, counting every physical line
  std::string_view text;
};

// LF or CRLF; a trailing newline does not create an extra line.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number, line});
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
    ++number;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    std::size_t comma = line.find(',');
    fields.push_back(trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) return fields;
    line.remove_prefix(comma + 1);
  }
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw InvalidInput("line " + std::to_string(line) + ": " + message);
}

double parse_number(std::string_view field, std::size_t line, std::string_view column) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range || (ec == std::errc{} && !std::isfinite(value)))
    fail(line, std::string(column) + ": value out of range: '" + std::string(field) + "'");
  if (ec != std::errc{} || ptr != last || field.empty())
    fail(line, std::string(column) + ": not a number: '" + std::string(field) + "'");
  return value;
}

// Header on the first line, then data rows; blank lines are skipped and a
// repeated header row is rejected rather than parsed as data.
struct RowReader {
  std::vector<Line> lines;
  std::string_view header;
  std::size_t next = 0;

  RowReader(std::string_view text, std::string_view expected_header)
      : lines(split_lines(text)), header(expected_header) {
    std::size_t first = 0;
    while (first < lines.size() && trim(lines[first].text).empty()) ++first;
    if (first == lines.size())
      throw InvalidInput("line 1: missing header '" + std::string(header) + "'");
    if (trim(lines[first].text) != header)
      fail(lines[first].number, "expected header '" + std::string(header) + "'");
    next = first + 1;
  }

  // Returns the next data row split into exactly `arity` fields, or nullopt
  // at end of input.
  std::optional<std::pair<std::size_t, std::vector<std::string_view>>> row(
      std::size_t arity) {
    while (next < lines.size()) {
      const Line& line = lines[next++];
      std::string_view body = trim(line.text);
      if (body.empty()) continue;
      if (body == header) fail(line.number, "duplicate header");
      std::vector<std::string_view> fields = split_fields(line.text);
      if (fields.size() != arity)
        fail(line.number, "expected " + std::to_string(arity) + " fields, got " +
                              std::to_string(fields.size()));
      return std::make_pair(line.number, std::move(fields));
    }
    return std::nullopt;
  }
};

void check_writable_id(std::string_view id) {
  if (id.empty() || id.find_first_of(",\r\n") != std::string_view::npos)
    throw InvalidInput("id not representable in csv: '" + std::string(id) + "'");
}

}  // namespace

Dataset parse_producers(std::string_view text) {
  RowReader reader(text, kProducersHeader);
  std::vector<Producer> producers;
  std::unordered_set<std::string> seen;
  while (auto row = reader.row(5)) {
    auto [line, f] = *row;
    Producer p;
    p.id = std::string(f[0]);
    if (p.id.empty()) fail(line, "empty id");
    if (!seen.insert(p.id).second) fail(line, "duplicate producer id '" + p.id + "'");
    p.electricity_mwh = parse_number(f[1], line, "electricity_mwh");
    p.raw_materials = parse_number(f[2], line, "raw_materials_e10_rial");
    p.labor_hours = parse_number(f[3], line, "labor_hours_e6");
    p.sales_value = parse_number(f[4], line, "sales_e10_rial");
    if (p.electricity_mwh < 0 || p.raw_materials < 0 || p.labor_hours < 0)
      fail(line, "producer '" + p.id + "': inputs must be non-negative");
    if (p.electricity_mwh <= 0 && p.raw_materials <= 0 && p.labor_hours <= 0)
      fail(line, "producer '" + p.id + "': all inputs are zero");
    if (p.sales_value <= 0)
      fail(line, "producer '" + p.id + "': sales value must be positive");
    producers.push_back(std::move(p));
  }
  if (producers.empty()) throw InvalidInput("no producers");
  return Dataset(std::move(producers));
}

std::vector<OutageRecord> parse_outages(std::string_view text) {
  RowReader reader(text, kOutagesHeader);
  std::vector<OutageRecord> records;
  while (auto row = reader.row(3)) {
    auto [line, f] = *row;
    OutageRecord r;
    r.producer_id = std::string(f[0]);
    if (r.producer_id.empty()) fail(line, "empty producer_id");
    r.duration_h = parse_number(f[1], line, "duration_h");
    if (r.duration_h <= 0) fail(line, "duration_h must be positive");
    if (!f[2].empty()) {
      r.demand_mw = parse_number(f[2], line, "demand_mw");
      if (*r.demand_mw <= 0) fail(line, "demand_mw must be positive");
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<EnergyDistribution> parse_distributions(std::string_view text,
                                                    const Dataset& dataset) {
  RowReader reader(text, kDistributionsHeader);
  std::vector<EnergyDistribution> dists;
  std::unordered_set<std::string> seen;
  while (auto row = reader.row(3)) {
    auto [line, f] = *row;
    EnergyDistribution d;
    d.producer_id = std::string(f[0]);
    if (d.producer_id.empty()) fail(line, "empty producer_id");
    if (!seen.insert(d.producer_id).second)
      fail(line, "duplicate producer id '" + d.producer_id + "'");
    auto index = dataset.find(d.producer_id);
    if (!index) fail(line, "unknown producer id '" + d.producer_id + "'");
    d.mean_mwh = parse_number(f[1], line, "mean_mwh");
    d.std_mwh = parse_number(f[2], line, "std_mwh");
    if (d.std_mwh < 0) fail(line, "std_mwh must be non-negative");
    d.base_mwh = dataset.at(*index).electricity_mwh;
    dists.push_back(std::move(d));
  }
  return dists;
}

std::string format_exact(double value) {
  if (!std::isfinite(value)) throw InvalidInput("non-finite value in output");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw InternalError("to_chars failed");
  return std::string(buf, ptr);
}

std::string format_sig9(double value) {
  if (!std::isfinite(value)) throw InvalidInput("non-finite value in output");
  char buf[64];
  int n = std::snprintf(buf, sizeof(buf), "%.9g", value);
  if (n < 0 || n >= static_cast<int>(sizeof(buf)))
    throw InternalError("number formatting failed");
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string write_producers(const Dataset& dataset) {
  std::string out(kProducersHeader);
  out += '\n';
  for (const Producer& p : dataset.producers()) {
    check_writable_id(p.id);
    out += p.id;
    out += ',';
    out += format_exact(p.electricity_mwh);
    out += ',';
    out += format_exact(p.raw_materials);
    out += ',';
    out += format_exact(p.labor_hours);
    out += ',';
    out += format_exact(p.sales_value);
    out += '\n';
  }
  return out;
}

std::string write_distributions(const std::vector<EnergyDistribution>& dists) {
  std::string out(kDistributionsHeader);
  out += '\n';
  for (const EnergyDistribution& d : dists) {
    check_writable_id(d.producer_id);
    out += d.producer_id;
    out += ',';
    out += format_exact(d.mean_mwh);
    out += ',';
    out += format_exact(d.std_mwh);
    out += '\n';
  }
  return out;
}

namespace {

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

void append_kv(std::string& out, std::string_view indent, std::string_view key,
               const std::string& value, bool comma) {
  out += indent;
  out += '"';
  out += key;
  out += "\": ";
  out += value;
  if (comma) out += ',';
  out += '\n';
}

}  // namespace

std::string json_quote(std::string_view text) {
  return '"' + json_escape(text) + '"';
}

namespace {

std::string quoted(std::string_view s) { return json_quote(s); }

std::string write_report_json(const Report& report) {
  std::string out = "{\n";
  append_kv(out, "  ", "tool_version", quoted(report.tool_version), true);
  append_kv(out, "  ", "seed", std::to_string(report.seed), true);
  append_kv(out, "  ", "samples_requested", std::to_string(report.samples_requested),
            true);
  out += "  \"dataset\": {\n";
  append_kv(out, "    ", "source", quoted(report.dataset_source), true);
  append_kv(out, "    ", "digest", quoted(report.dataset_digest), false);
  out += "  },\n";
  out += "  \"distributions\": {\n";
  append_kv(out, "    ", "source", quoted(report.distributions_source), true);
  append_kv(out, "    ", "digest", quoted(report.distributions_digest), false);
  out += "  },\n";
  out += "  \"notes\": [";
  for (std::size_t i = 0; i < report.notes.size(); ++i) {
    if (i) out += ", ";
    out += quoted(report.notes[i]);
  }
  out += "],\n";
  out += "  \"producers\": [";
  for (std::size_t i = 0; i < report.producers.size(); ++i) {
    const ProducerReport& p = report.producers[i];
    out += i ? ",\n    {\n" : "\n    {\n";
    append_kv(out, "      ", "id", quoted(p.producer_id), true);
    append_kv(out, "      ", "z", format_sig9(p.z), true);
    append_kv(out, "      ", "efficiency_index", format_sig9(p.efficiency_index), true);
    append_kv(out, "      ", "mean_mwh", format_sig9(p.mean_mwh), true);
    append_kv(out, "      ", "std_mwh", format_sig9(p.std_mwh), true);
    append_kv(out, "      ", "base_mwh", format_sig9(p.base_mwh), true);
    append_kv(out, "      ", "mean_ic_rial_per_kwh", format_sig9(p.mean_ic), true);
    append_kv(out, "      ", "std_ic_rial_per_kwh", format_sig9(p.std_ic), true);
    append_kv(out, "      ", "samples_requested", std::to_string(p.n_requested), true);
    append_kv(out, "      ", "samples_used", std::to_string(p.n_used), true);
    if (!p.note.empty()) append_kv(out, "      ", "note", quoted(p.note), true);
    out += "      \"samples\": [";
    for (std::size_t k = 0; k < p.samples.size(); ++k) {
      const CostSample& s = p.samples[k];
      out += k ? ",\n        " : "\n        ";
      out += "{\"index\": " + std::to_string(s.index);
      out += ", \"e0_mwh\": " + format_sig9(s.e0_mwh);
      out += ", \"beta\": " + format_sig9(s.beta);
      out += ", \"ic_rial_per_kwh\": " + format_sig9(s.ic_rial_per_kwh);
      out += '}';
    }
    out += p.samples.empty() ? "]\n" : "\n      ]\n";
    out += "    }";
  }
  out += report.producers.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

std::string write_report_csv(const Report& report) {
  std::string out(kSamplesHeader);
  out += '\n';
  for (const ProducerReport& p : report.producers) {
    check_writable_id(p.producer_id);
    for (const CostSample& s : p.samples) {
      out += p.producer_id;
      out += ',';
      out += std::to_string(s.index);
      out += ',';
      out += format_sig9(s.e0_mwh);
      out += ',';
      out += format_sig9(s.beta);
      out += ',';
      out += format_sig9(s.ic_rial_per_kwh);
      out += '\n';
    }
  }
  return out;
}

}  // namespace

std::string write_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::Json ? write_report_json(report)
                                      : write_report_csv(report);
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace deaic
