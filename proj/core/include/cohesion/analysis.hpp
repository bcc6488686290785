#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cohesion/corpusio.hpp"

namespace cohesion {

enum class AnalysisMode { Surface, Lemmatized, CharNgram };

std::string_view to_string(AnalysisMode mode) noexcept;

/// Term multiset. Ordered by term so that every accumulation over it runs in
/// the same (lexicographic byte) order on every platform.
using TermCounts = std::map<std::string, std::size_t, std::less<>>;

struct AnalysisConfig {
  AnalysisMode mode = AnalysisMode::Surface;
  int n = 3;
  char32_t pad = U'_';
  bool use_stoplist = false;
  std::shared_ptr<const LemmaTable> lemma_table;
  std::shared_ptr<const Stoplist> stoplist;

  /// Throws Error{Config} on a lemmatized config without a table, n outside
  /// [2, 8], or use_stoplist without a stoplist.
  void validate() const;
};

struct AnalyzedSegment {
  std::size_t index = 0;
  TermCounts terms;
  /// Tokens produced by the tokenizer, before stoplist and term mapping.
  std::size_t token_count = 0;
};

struct CorpusStats {
  std::size_t tokens = 0;
  std::size_t surface_types = 0;
  std::size_t analyzed_types = 0;
};

/// Whitespace split, then every character that is not a letter is dropped,
/// except hyphens and apostrophes standing between two letters. Lowercased.
std::vector<std::string> tokenize(std::string_view text);
inline std::vector<std::string> tokenize(const Segment& segment) {
  return tokenize(segment.text);
}

std::vector<std::string> lemmatize(std::vector<std::string> tokens, const LemmaTable& table);

/// Pads each token with one `pad` on both sides and emits every window of n
/// code points; a padded token shorter than n is emitted whole.
TermCounts char_ngrams(const std::vector<std::string>& tokens, int n, char32_t pad = U'_');

std::vector<std::string> apply_stoplist(std::vector<std::string> tokens, const Stoplist& stoplist);
TermCounts apply_stoplist(TermCounts terms, const Stoplist& stoplist);

/// Maps one segment's tokens to index terms under `cfg`.
TermCounts index_terms(const std::vector<std::string>& tokens, const AnalysisConfig& cfg);

std::vector<AnalyzedSegment> analyze_document(const Document& doc, const AnalysisConfig& cfg);

CorpusStats corpus_stats(const Document& doc, const AnalysisConfig& cfg);

}  // namespace cohesion
