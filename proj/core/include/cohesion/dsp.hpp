#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cohesion/signal.hpp"

namespace cohesion {

/// Normalized filter coefficients (non-negative, summing to 1). Throws
/// Error{FilterWindow} when the window is not a positive odd number.
std::vector<double> filter_kernel(const FilterSpec& spec);

/// Zero-phase FIR smoothing with reflected edges (the sample at index -k is
/// values[k]). Output has the input's length and lies within the input's
/// value range. Requires window <= 2 * length - 1.
CohesionSignal lowpass(const CohesionSignal& signal, const FilterSpec& spec);
std::vector<double> lowpass(std::span<const double> values, const FilterSpec& spec);

struct CorrelationResult {
  /// h[j] = sum_k x[j + k] * y[k], out-of-range samples taken as 0.
  std::vector<double> h;
  /// h[0] / (|x| |y|). The only meaningful coefficient for aligned signals,
  /// which have no phase shift.
  double r = 0.0;
  std::size_t n_x = 0;
  std::size_t n_y = 0;
};

/// Throws Error{ZeroNorm} if either input is empty or all zero.
CorrelationResult cross_correlate(std::span<const double> x, std::span<const double> y);

struct LabeledSignal {
  std::string label;
  std::vector<double> values;
};

struct CorrelationMatrix {
  std::vector<std::string> labels;
  /// Row-major, symmetric, unit diagonal.
  std::vector<std::vector<double>> cells;

  std::size_t size() const noexcept { return labels.size(); }
};

/// Pairwise normalized correlations. Runs must be equally long, which in
/// practice means the documents were aligned first. Throws
/// Error{SignalLength} naming the first offending pair.
CorrelationMatrix correlation_matrix(const std::vector<LabeledSignal>& runs);

/// Label header row and column, three decimals, lower triangle filled
/// symmetrically.
std::string write_matrix_csv(const CorrelationMatrix& matrix);
std::string write_matrix_json(const CorrelationMatrix& matrix);

}  // namespace cohesion
