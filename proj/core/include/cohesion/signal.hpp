#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cohesion {

enum class FilterKind { MovingAverage, Hamming };

std::string_view to_string(FilterKind kind) noexcept;

enum class EdgeMode { Reflect };

/// Symmetric FIR low-pass filter. `window` counts gaps and must be odd.
struct FilterSpec {
  FilterKind kind = FilterKind::MovingAverage;
  int window = 5;
  EdgeMode edge = EdgeMode::Reflect;

  bool operator==(const FilterSpec&) const = default;
};

/// Similarity of adjacent segments: values[i] scores the gap between
/// segments i and i+1. `degenerate[i]` marks gaps where one side had an empty
/// vector and the value was defined as 0.
struct CohesionSignal {
  std::string doc_id;
  std::vector<double> values;
  std::vector<bool> degenerate;
  bool smoothed = false;
  std::optional<FilterSpec> filter;

  std::size_t size() const noexcept { return values.size(); }
  bool operator==(const CohesionSignal&) const = default;
};

/// "gap_index,value,degenerate", six decimals.
std::string write_signal_csv(const CohesionSignal& signal);
CohesionSignal read_signal_csv(std::string_view csv, std::string doc_id = {});

/// "gap_index,raw,smoothed", six decimals. Both signals must be the same length.
std::string write_smoothed_csv(const CohesionSignal& raw, const CohesionSignal& smoothed);

/// Two whitespace-separated columns (gap value) for plotting tools.
std::string write_plot_dat(const CohesionSignal& signal);

}  // namespace cohesion
