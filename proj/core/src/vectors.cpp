#include "cohesion/vectors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "cohesion/error.hpp"

namespace cohesion {

std::vector<SegmentVector> build_vectors(const std::vector<AnalyzedSegment>& analyzed) {
  if (analyzed.size() < 2) {
    throw Error(ErrorCode::TooFewSegments,
                "need at least 2 segments, got " + std::to_string(analyzed.size()));
  }

  std::unordered_map<std::string_view, std::size_t> df;
  for (const auto& seg : analyzed) {
    for (const auto& [term, count] : seg.terms) ++df[term];
  }
  const auto n = static_cast<double>(analyzed.size());
  std::unordered_map<std::string_view, double> idf;
  idf.reserve(df.size());
  for (const auto& [term, d] : df) idf.emplace(term, std::log(n / static_cast<double>(d)));

  std::vector<SegmentVector> vectors;
  vectors.reserve(analyzed.size());
  for (const auto& seg : analyzed) {
    SegmentVector v{seg.index, {}};
    v.weights.reserve(seg.terms.size());
    for (const auto& [term, count] : seg.terms) {
      const double w = static_cast<double>(count) * idf.find(term)->second;
      if (w > 0.0) v.weights.emplace_back(term, w);
    }
    vectors.push_back(std::move(v));
  }
  return vectors;
}

CosineResult cosine(const SegmentVector& x, const SegmentVector& y) {
  if (x.empty() || y.empty()) return {0.0, true};

  double dot = 0.0;
  auto xi = x.weights.begin();
  auto yi = y.weights.begin();
  while (xi != x.weights.end() && yi != y.weights.end()) {
    const int c = xi->first.compare(yi->first);
    if (c == 0) {
      dot += xi->second * yi->second;
      ++xi;
      ++yi;
    } else if (c < 0) {
      ++xi;
    } else {
      ++yi;
    }
  }

  double nx = 0.0, ny = 0.0;
  for (const auto& [t, w] : x.weights) nx += w * w;
  for (const auto& [t, w] : y.weights) ny += w * w;
  // sqrt(nx * ny) rather than sqrt(nx) * sqrt(ny): identical inputs give
  // exactly 1.
  const double value = dot / std::sqrt(nx * ny);
  return {std::clamp(value, 0.0, 1.0), false};
}

CohesionSignal cohesion_signal(const std::vector<SegmentVector>& vectors, std::string doc_id) {
  if (vectors.size() < 2) {
    throw Error(ErrorCode::TooFewSegments,
                "need at least 2 segments, got " + std::to_string(vectors.size()));
  }
  CohesionSignal signal;
  signal.doc_id = std::move(doc_id);
  signal.values.reserve(vectors.size() - 1);
  signal.degenerate.reserve(vectors.size() - 1);
  for (std::size_t i = 0; i + 1 < vectors.size(); ++i) {
    const auto c = cosine(vectors[i], vectors[i + 1]);
    signal.values.push_back(c.value);
    signal.degenerate.push_back(c.degenerate);
  }
  return signal;
}

namespace {

using TermId = std::uint32_t;
using SparseCounts = std::vector<std::pair<TermId, std::size_t>>;

void sort_and_merge(SparseCounts& v) {
  std::sort(v.begin(), v.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (out > 0 && v[out - 1].first == v[i].first) {
      v[out - 1].second += v[i].second;
    } else {
      v[out++] = v[i];
    }
  }
  v.resize(out);
}

}  // namespace

// Same arithmetic as cohesion_signal(build_vectors(analyze_document(...))),
// on interned term ids. Index terms are additive over tokens, so each
// distinct token is analyzed once. Ids are ranked lexicographically, which
// keeps every sum in the same order as the string-keyed path.
CohesionSignal compute_signal(const Document& doc, const AnalysisConfig& cfg) {
  if (doc.size() < 2) {
    throw Error(ErrorCode::TooFewSegments,
                "document '" + (doc.id.empty() ? doc.source : doc.id) + "' has " +
                    std::to_string(doc.size()) + " segment(s); at least 2 are needed");
  }
  cfg.validate();

  std::unordered_map<std::string, TermId> term_ids;
  std::vector<const std::string*> terms;
  std::unordered_map<std::string, SparseCounts> by_token;
  std::vector<SparseCounts> segments;
  segments.reserve(doc.size());
  for (const Segment& seg : doc.segments) {
    SparseCounts counts;
    for (const auto& token : tokenize(seg)) {
      auto [it, fresh] = by_token.try_emplace(token);
      if (fresh) {
        for (auto& [term, c] : index_terms({token}, cfg)) {
          auto [tid, added] = term_ids.try_emplace(term, static_cast<TermId>(terms.size()));
          if (added) terms.push_back(&tid->first);
          it->second.emplace_back(tid->second, c);
        }
      }
      counts.insert(counts.end(), it->second.begin(), it->second.end());
    }
    segments.push_back(std::move(counts));
  }

  std::vector<TermId> order(terms.size());
  for (TermId i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](TermId a, TermId b) { return *terms[a] < *terms[b]; });
  std::vector<TermId> rank(terms.size());
  for (TermId r = 0; r < order.size(); ++r) rank[order[r]] = r;

  std::vector<std::size_t> df(terms.size(), 0);
  for (auto& seg : segments) {
    for (auto& [id, c] : seg) id = rank[id];
    sort_and_merge(seg);
    for (const auto& [id, c] : seg) ++df[id];
  }
  const auto n = static_cast<double>(segments.size());
  std::vector<double> idf(terms.size());
  for (std::size_t i = 0; i < idf.size(); ++i) idf[i] = std::log(n / static_cast<double>(df[i]));

  std::vector<std::vector<std::pair<TermId, double>>> vectors(segments.size());
  for (std::size_t s = 0; s < segments.size(); ++s) {
    for (const auto& [id, c] : segments[s]) {
      const double w = static_cast<double>(c) * idf[id];
      if (w > 0.0) vectors[s].emplace_back(id, w);
    }
  }

  CohesionSignal signal;
  signal.doc_id = doc.id;
  signal.values.reserve(vectors.size() - 1);
  signal.degenerate.reserve(vectors.size() - 1);
  for (std::size_t i = 0; i + 1 < vectors.size(); ++i) {
    const auto& x = vectors[i];
    const auto& y = vectors[i + 1];
    if (x.empty() || y.empty()) {
      signal.values.push_back(0.0);
      signal.degenerate.push_back(true);
      continue;
    }
    double dot = 0.0;
    auto xi = x.begin();
    auto yi = y.begin();
    while (xi != x.end() && yi != y.end()) {
      if (xi->first == yi->first) {
        dot += xi->second * yi->second;
        ++xi;
        ++yi;
      } else if (xi->first < yi->first) {
        ++xi;
      } else {
        ++yi;
      }
    }
    double nx = 0.0, ny = 0.0;
    for (const auto& [t, w] : x) nx += w * w;
    for (const auto& [t, w] : y) ny += w * w;
    signal.values.push_back(std::clamp(dot / std::sqrt(nx * ny), 0.0, 1.0));
    signal.degenerate.push_back(false);
  }
  return signal;
}

}  // namespace cohesion
