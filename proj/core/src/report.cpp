#include "cohesion/report.hpp"

#include <json.hpp>

namespace cohesion {

std::string write_stats_json(const Document& doc, const AnalysisConfig& cfg,
                             const CorpusStats& stats,
                             const std::vector<AnalyzedSegment>* terms) {
  nlohmann::ordered_json j;
  j["doc_id"] = doc.id;
  j["language"] = doc.language;
  j["segments"] = doc.size();
  j["gaps"] = doc.size() > 0 ? doc.size() - 1 : 0;
  j["mode"] = to_string(cfg.mode);
  if (cfg.mode == AnalysisMode::CharNgram) j["n"] = cfg.n;
  j["stoplist"] = cfg.use_stoplist;
  j["tokens"] = stats.tokens;
  j["surface_types"] = stats.surface_types;
  j["analyzed_types"] = stats.analyzed_types;
  if (cfg.lemma_table) j["lemma_entries"] = cfg.lemma_table->size();
  if (terms) {
    auto segs = nlohmann::ordered_json::array();
    for (const auto& seg : *terms) {
      nlohmann::ordered_json js;
      js["index"] = seg.index;
      js["token_count"] = seg.token_count;
      nlohmann::ordered_json counts = nlohmann::ordered_json::object();
      for (const auto& [term, count] : seg.terms) counts[term] = count;
      js["terms"] = counts;
      segs.push_back(js);
    }
    j["segment_terms"] = segs;
  }
  return j.dump(2) + "\n";
}

std::string format_divergences(const AlignmentMap& map) {
  std::string out;
  out += std::to_string(map.pairs.size()) + " pairs, " + std::to_string(map.divergences.size()) +
         " divergence(s)\n";
  for (const auto& d : map.divergences) {
    out += "  pair " + std::to_string(d.position) + ": " + std::string(to_string(d.kind)) + ": " +
           d.detail + "\n";
  }
  return out;
}

}  // namespace cohesion
