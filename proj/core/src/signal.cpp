#include "cohesion/signal.hpp"

#include <charconv>
#include <cstdio>

#include "cohesion/error.hpp"
#include "cohesion/text.hpp"

namespace cohesion {

std::string_view to_string(FilterKind kind) noexcept {
  return kind == FilterKind::MovingAverage ? "moving_average" : "hamming";
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(text::trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) return fields;
    start = comma + 1;
  }
}

template <typename T>
T parse_number(std::string_view s, std::size_t line_no) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line_no, "bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string write_signal_csv(const CohesionSignal& signal) {
  std::string out = "gap_index,value,degenerate\n";
  for (std::size_t i = 0; i < signal.values.size(); ++i) {
    const bool degenerate = i < signal.degenerate.size() && signal.degenerate[i];
    out += std::to_string(i) + ',' + fixed6(signal.values[i]) + ',' + (degenerate ? '1' : '0') + '\n';
  }
  return out;
}

CohesionSignal read_signal_csv(std::string_view csv, std::string doc_id) {
  CohesionSignal signal;
  signal.doc_id = std::move(doc_id);
  std::size_t line_no = 0;
  bool header_seen = false;
  for (std::string_view line : text::split_lines(csv)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    if (!header_seen) {
      if (text::trim(line) != "gap_index,value,degenerate") {
        throw ParseError(line_no, "expected header 'gap_index,value,degenerate'");
      }
      header_seen = true;
      continue;
    }
    const auto fields = split_commas(line);
    if (fields.size() != 3) throw ParseError(line_no, "expected 3 fields");
    const auto gap = parse_number<std::size_t>(fields[0], line_no);
    if (gap != signal.values.size()) {
      throw ParseError(line_no, "gap_index " + std::to_string(gap) + " out of sequence");
    }
    signal.values.push_back(parse_number<double>(fields[1], line_no));
    if (fields[2] != "0" && fields[2] != "1") throw ParseError(line_no, "degenerate must be 0 or 1");
    signal.degenerate.push_back(fields[2] == "1");
  }
  if (!header_seen) throw ParseError(0, "empty signal file");
  return signal;
}

std::string write_smoothed_csv(const CohesionSignal& raw, const CohesionSignal& smoothed) {
  if (raw.size() != smoothed.size()) {
    throw Error(ErrorCode::SignalLength, "raw and smoothed signals differ in length");
  }
  std::string out = "gap_index,raw,smoothed\n";
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out += std::to_string(i) + ',' + fixed6(raw.values[i]) + ',' + fixed6(smoothed.values[i]) + '\n';
  }
  return out;
}

std::string write_plot_dat(const CohesionSignal& signal) {
  std::string out = "# gap_index value (" + signal.doc_id + (signal.smoothed ? ", smoothed" : "") + ")\n";
  for (std::size_t i = 0; i < signal.size(); ++i) {
    out += std::to_string(i) + ' ' + fixed6(signal.values[i]) + '\n';
  }
  return out;
}

}  // namespace cohesion
