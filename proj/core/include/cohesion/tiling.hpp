#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohesion/signal.hpp"

namespace cohesion {

/// Gaps selected as subtopic boundaries in one document.
struct BoundarySet {
  std::string doc_id;
  std::vector<std::size_t> gaps;  // strictly ascending
  std::map<std::size_t, double> depths;
  double min_depth = 0.0;
  std::size_t signal_length = 0;

  bool operator==(const BoundarySet&) const = default;
};

/// Interior valleys of the signal. A maximal run of equal values whose two
/// flanking samples are both strictly higher is one minimum, reported at the
/// run's leftmost index; runs touching either end of the signal are not
/// minima. Depth is the sum of the rises to the hill tops reached by
/// climbing left and right from the valley. Valleys shallower than
/// `min_depth` are dropped.
BoundarySet detect_boundaries(const CohesionSignal& signal, double min_depth = 0.0);
BoundarySet detect_boundaries(const std::vector<double>& values, double min_depth = 0.0,
                              std::string doc_id = {});

enum class BoundaryClass { Confirmed, WeakDistortion, Unconfirmed };

std::string_view to_string(BoundaryClass c) noexcept;

struct BoundaryCluster {
  std::size_t consensus_gap = 0;
  BoundaryClass cls = BoundaryClass::Unconfirmed;
  /// One entry per document: offset of its boundary from consensus_gap, or
  /// nullopt when the document has no boundary in this cluster.
  std::vector<std::optional<long>> supporters;
  double strength = 0.0;
};

struct BoundaryComparison {
  std::vector<BoundarySet> inputs;
  std::vector<BoundaryCluster> clusters;  // ascending consensus_gap
  std::vector<std::vector<double>> agreement;
  std::size_t tolerance_used = 1;
  double alpha_used = 0.25;
};

inline constexpr double kDefaultAgreementAlpha = 0.25;

/// Clusters boundaries across language versions. Clusters are seeded at the
/// gap with the most exact support (smallest index on ties); each document
/// then contributes its nearest unclaimed boundary within `tolerance`.
/// Exact support counts 1 toward strength, an off-by-one 0.5, anything else 0.
BoundaryComparison compare_boundaries(const std::vector<BoundarySet>& sets,
                                      std::size_t tolerance = 1,
                                      double alpha = kDefaultAgreementAlpha);

/// Length-normalized agreement: boundaries match one-to-one (closest first)
/// within w = max(1, floor(alpha * mean tile length)), where the mean tile
/// length is 2 * signal_length / (|a| + |b| + 2). Returns 2 * matches /
/// (|a| + |b|), or 1 when both sets are empty.
double agreement_score(const BoundarySet& a, const BoundarySet& b,
                       double alpha = kDefaultAgreementAlpha);

/// Moves every off-by-one boundary of a weak-distortion cluster onto the
/// consensus gap. All other boundaries are kept.
std::vector<BoundarySet> repair_boundaries(const BoundaryComparison& comparison);

/// JSON report of a comparison (per-document gaps, clusters, agreement).
std::string write_comparison_json(const BoundaryComparison& comparison);
std::string write_boundaries_json(const BoundarySet& set);

/// Text table with one row per cluster and one column per document; 'x'
/// marks an exact boundary, '<' / '>' one placed earlier / later.
std::string format_boundary_table(const BoundaryComparison& comparison);

}  // namespace cohesion
