#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cohesion/analysis.hpp"
#include "cohesion/signal.hpp"

namespace cohesion {

/// Sparse idf.tf vector of one segment, sorted by term. Only strictly
/// positive weights are stored.
struct SegmentVector {
  std::size_t index = 0;
  std::vector<std::pair<std::string, double>> weights;

  bool empty() const noexcept { return weights.empty(); }
};

/// weight(t, s) = tf(t, s) * ln(N / df(t)), N = number of segments.
/// Terms occurring in every segment get weight 0 and are left out.
/// Throws Error{TooFewSegments} for fewer than two segments.
std::vector<SegmentVector> build_vectors(const std::vector<AnalyzedSegment>& analyzed);

struct CosineResult {
  double value = 0.0;
  bool degenerate = false;
};

/// Cosine of the angle between two weight vectors, clamped to [0, 1]. An
/// empty operand gives 0 with `degenerate` set.
CosineResult cosine(const SegmentVector& x, const SegmentVector& y);

CohesionSignal cohesion_signal(const std::vector<SegmentVector>& vectors,
                               std::string doc_id = {});

/// analyze_document + build_vectors + cohesion_signal.
CohesionSignal compute_signal(const Document& doc, const AnalysisConfig& cfg);

}  // namespace cohesion
