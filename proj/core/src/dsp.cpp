#include "cohesion/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <json.hpp>

#include "cohesion/error.hpp"

namespace cohesion {

std::vector<double> filter_kernel(const FilterSpec& spec) {
  if (spec.window < 1 || spec.window % 2 == 0) {
    throw Error(ErrorCode::FilterWindow,
                "filter window must be a positive odd number, got " + std::to_string(spec.window));
  }
  const auto size = static_cast<std::size_t>(spec.window);
  const std::size_t half = size / 2;
  std::vector<double> kernel(size, 1.0);
  if (spec.kind == FilterKind::Hamming && size > 1) {
    // Computed for the left half and mirrored so the kernel is exactly
    // symmetric.
    for (std::size_t k = 0; k <= half; ++k) {
      const double w = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                                              static_cast<double>(size - 1));
      kernel[k] = w;
      kernel[size - 1 - k] = w;
    }
  }
  double sum = 0.0;
  for (double w : kernel) sum += w;
  for (double& w : kernel) w /= sum;
  return kernel;
}

std::vector<double> lowpass(std::span<const double> values, const FilterSpec& spec) {
  const auto kernel = filter_kernel(spec);
  const std::size_t n = values.size();
  const std::size_t half = kernel.size() / 2;
  if (n == 0 || half > n - 1) {
    throw Error(ErrorCode::FilterWindow,
                "filter window " + std::to_string(spec.window) + " too large for a signal of length " +
                    std::to_string(n) + " (maximum " + std::to_string(n == 0 ? 0 : 2 * n - 1) + ")");
  }
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;

  auto sample = [&](std::ptrdiff_t j) {
    const auto last = static_cast<std::ptrdiff_t>(n) - 1;
    if (j < 0) j = -j;
    if (j > last) j = 2 * last - j;
    return values[static_cast<std::size_t>(j)];
  };

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < kernel.size(); ++k) {
      acc += kernel[k] * sample(static_cast<std::ptrdiff_t>(i + k) - static_cast<std::ptrdiff_t>(half));
    }
    // A convex combination stays inside the input's range; clamp away the
    // last-ulp rounding.
    out[i] = std::clamp(acc, lo, hi);
  }
  return out;
}

CohesionSignal lowpass(const CohesionSignal& signal, const FilterSpec& spec) {
  CohesionSignal out = signal;
  out.values = lowpass(std::span<const double>(signal.values), spec);
  out.smoothed = true;
  out.filter = spec;
  return out;
}

CorrelationResult cross_correlate(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) throw Error(ErrorCode::ZeroNorm, "cannot correlate an empty signal");
  double sxx = 0.0, syy = 0.0;
  for (double v : x) sxx += v * v;
  for (double v : y) syy += v * v;
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::ZeroNorm, "signal has zero norm; correlation cannot be normalized");
  }

  CorrelationResult result;
  result.n_x = x.size();
  result.n_y = y.size();
  const std::size_t n_h = x.size() + y.size() - 1;
  result.h.assign(n_h, 0.0);
  for (std::size_t j = 0; j < n_h; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < y.size() && j + k < x.size(); ++k) acc += x[j + k] * y[k];
    result.h[j] = acc;
  }
  result.r = std::clamp(result.h[0] / std::sqrt(sxx * syy), -1.0, 1.0);
  return result;
}

CorrelationMatrix correlation_matrix(const std::vector<LabeledSignal>& runs) {
  if (runs.size() < 2) {
    throw Error(ErrorCode::Config, "correlation matrix needs at least 2 runs");
  }
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].values.size() != runs[0].values.size()) {
      throw Error(ErrorCode::SignalLength,
                  "signals '" + runs[0].label + "' (" + std::to_string(runs[0].values.size()) +
                      " gaps) and '" + runs[i].label + "' (" + std::to_string(runs[i].values.size()) +
                      " gaps) differ in length; align the documents first");
    }
  }
  CorrelationMatrix m;
  const std::size_t n = runs.size();
  m.cells.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    m.labels.push_back(runs[i].label);
    for (std::size_t j = i; j < n; ++j) {
      const double r = cross_correlate(runs[i].values, runs[j].values).r;
      m.cells[i][j] = r;
      m.cells[j][i] = r;
    }
  }
  return m;
}

std::string write_matrix_csv(const CorrelationMatrix& matrix) {
  std::string out = "label";
  for (const auto& l : matrix.labels) out += ',' + l;
  out += '\n';
  char buf[32];
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out += matrix.labels[i];
    for (double v : matrix.cells[i]) {
      std::snprintf(buf, sizeof buf, "%.3f", v);
      out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string write_matrix_json(const CorrelationMatrix& matrix) {
  nlohmann::ordered_json j;
  j["labels"] = matrix.labels;
  j["cells"] = matrix.cells;
  return j.dump(2) + "\n";
}

}  // namespace cohesion
