#include "playbench/csv_io.hpp"

#include <charconv>
#include <cstdint>
#include <system_error>

#include "playbench/error.hpp"

namespace playbench {
namespace {

[[noreturn]] void bad_csv(std::size_t line, const std::string& what) {
  throw Error(Errc::invalid_input, "trace CSV line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
T parse_field(std::string_view text, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    bad_csv(line, "cannot parse field '" + std::string(text) + "'");
  }
  return value;
}

void append_numbered(std::string& out, char prefix, std::size_t count) {
  for (std::size_t i = 1; i <= count; ++i) {
    out += ',';
    out += prefix;
    out += std::to_string(i);
  }
}

}  // namespace

std::string format_real(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string csv_header(const TraceLayout& layout) {
  std::string h = "step,epoch,sample";
  append_numbered(h, 'x', layout.inputs);
  h += ",desired";
  append_numbered(h, 'n', layout.nets);
  h += ",output,error";
  append_numbered(h, 'w', layout.weights);
  append_numbered(h, 'b', layout.biases);
  return h;
}

std::string write_trace_csv(const TraceLayout& layout, std::span<const IterationRecord> records) {
  std::string out = csv_header(layout);
  out += '\n';
  for (const auto& r : records) {
    if (!layout.matches(r)) throw Error(Errc::invalid_input, "record does not match the trace layout");
    out += std::to_string(r.step) + ',' + std::to_string(r.epoch) + ',' + std::to_string(r.sample);
    for (int x : r.inputs) out += ',' + std::to_string(x);
    out += ',' + std::to_string(r.desired);
    for (double n : r.net) out += ',' + format_real(n);
    out += ',' + std::to_string(r.output) + ',' + std::to_string(r.error);
    for (double w : r.weights) out += ',' + format_real(w);
    for (double b : r.biases) out += ',' + format_real(b);
    out += '\n';
  }
  return out;
}

CsvTrace parse_trace_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) bad_csv(lines.size() + 1, "missing trailing newline");
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) bad_csv(1, "missing header");

  CsvTrace out;
  bool matched = false;
  for (const TraceLayout candidate : {TraceLayout::perceptron(), TraceLayout::mlp(false), TraceLayout::mlp(true)}) {
    if (csv_header(candidate) == lines[0]) {
      out.layout = candidate;
      matched = true;
      break;
    }
  }
  if (!matched) bad_csv(1, "unrecognised header");

  const auto& L = out.layout;
  const std::size_t width = 3 + L.inputs + 1 + L.nets + 2 + L.weights + L.biases;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = split(lines[i]);
    if (fields.size() != width) bad_csv(line_no, "expected " + std::to_string(width) + " fields");
    std::size_t f = 0;
    IterationRecord r;
    r.step = parse_field<std::uint64_t>(fields[f++], line_no);
    r.epoch = parse_field<std::uint64_t>(fields[f++], line_no);
    r.sample = parse_field<std::uint64_t>(fields[f++], line_no);
    for (std::size_t k = 0; k < L.inputs; ++k) r.inputs.push_back(parse_field<int>(fields[f++], line_no));
    r.desired = parse_field<int>(fields[f++], line_no);
    for (std::size_t k = 0; k < L.nets; ++k) r.net.push_back(parse_field<double>(fields[f++], line_no));
    r.output = parse_field<int>(fields[f++], line_no);
    r.error = parse_field<int>(fields[f++], line_no);
    for (std::size_t k = 0; k < L.weights; ++k) r.weights.push_back(parse_field<double>(fields[f++], line_no));
    for (std::size_t k = 0; k < L.biases; ++k) r.biases.push_back(parse_field<double>(fields[f++], line_no));
    out.records.push_back(std::move(r));
  }
  return out;
}

std::string write_kmeans_csv(const KMeansResult& result) {
  std::string out = "point,x,y,cluster,distance,color\n";
  for (std::size_t i = 0; i < result.coloured.entries.size(); ++i) {
    const auto& e = result.coloured.entries[i];
    out += std::to_string(i) + ',' + std::to_string(e.point.x) + ',' + std::to_string(e.point.y) + ',' +
           std::to_string(e.cluster) + ',' + std::to_string(result.assignment.distances[i]) + ',' + e.color + '\n';
  }
  return out;
}

}  // namespace playbench
