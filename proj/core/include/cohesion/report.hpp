#pragma once

#include <string>
#include <vector>

#include "cohesion/analysis.hpp"
#include "cohesion/corpusio.hpp"

namespace cohesion {

/// JSON stats report for one document under one analysis configuration.
/// With `with_terms`, per-segment term counts are included as well.
std::string write_stats_json(const Document& doc, const AnalysisConfig& cfg,
                             const CorpusStats& stats,
                             const std::vector<AnalyzedSegment>* terms = nullptr);

std::string format_divergences(const AlignmentMap& map);

}  // namespace cohesion
