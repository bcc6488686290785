#include "cohesion/analysis.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "cohesion/error.hpp"
#include "cohesion/text.hpp"

namespace cohesion {

std::string_view to_string(AnalysisMode mode) noexcept {
  switch (mode) {
    case AnalysisMode::Surface: return "surface";
    case AnalysisMode::Lemmatized: return "lemmatized";
    case AnalysisMode::CharNgram: return "char_ngram";
  }
  return "unknown";
}

void AnalysisConfig::validate() const {
  if (mode == AnalysisMode::Lemmatized && !lemma_table) {
    throw Error(ErrorCode::Config, "lemmatized analysis requires a lemma table");
  }
  if (mode == AnalysisMode::CharNgram && (n < 2 || n > 8)) {
    throw Error(ErrorCode::Config, "n-gram size must be in [2, 8], got " + std::to_string(n));
  }
  if (use_stoplist && !stoplist) {
    throw Error(ErrorCode::Config, "stoplist enabled but none supplied");
  }
}

namespace {

bool is_joiner(char32_t c) { return c == U'-' || c == U'\'' || c == U'\u2019'; }

std::string clean_token(std::u32string_view chunk, std::u32string& kept) {
  kept.clear();
  for (char32_t c : chunk) {
    if (text::is_letter(c) || is_joiner(c)) kept.push_back(c);
  }
  std::string out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const char32_t c = kept[i];
    if (text::is_letter(c)) {
      text::append(out, text::to_lower(c));
    } else if (i > 0 && i + 1 < kept.size() && text::is_letter(kept[i - 1]) &&
               text::is_letter(kept[i + 1])) {
      text::append(out, c);
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view raw) {
  std::vector<std::string> tokens;
  const std::u32string cps = text::decode(raw);
  std::u32string scratch;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && text::is_space(cps[i])) ++i;
    const std::size_t start = i;
    while (i < cps.size() && !text::is_space(cps[i])) ++i;
    if (i == start) break;
    std::string token = clean_token(std::u32string_view(cps).substr(start, i - start), scratch);
    if (!token.empty()) tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<std::string> lemmatize(std::vector<std::string> tokens, const LemmaTable& table) {
  for (auto& token : tokens) {
    if (const std::string* lemma = table.find(token)) token = *lemma;
  }
  return tokens;
}

TermCounts char_ngrams(const std::vector<std::string>& tokens, int n, char32_t pad) {
  if (n < 2 || n > 8) {
    throw Error(ErrorCode::Config, "n-gram size must be in [2, 8], got " + std::to_string(n));
  }
  const auto width = static_cast<std::size_t>(n);
  const std::string pad_utf8 = text::encode(pad);

  // All padded tokens live in one buffer so the counts can key on views.
  std::size_t total = 0;
  for (const auto& t : tokens) total += t.size() + 2 * pad_utf8.size();
  std::string arena;
  arena.reserve(total);
  std::vector<std::string_view> grams;

  std::vector<std::size_t> starts;  // byte offset of every code point, plus the end
  for (const auto& token : tokens) {
    const std::size_t base = arena.size();
    arena += pad_utf8;
    arena += token;
    arena += pad_utf8;
    const std::string_view padded = std::string_view(arena).substr(base);
    starts.clear();
    for (std::size_t i = 0; i < padded.size(); ++i) {
      if ((static_cast<unsigned char>(padded[i]) & 0xC0) != 0x80) starts.push_back(i);
    }
    starts.push_back(padded.size());
    const std::size_t cps = starts.size() - 1;
    if (cps < width) {
      grams.push_back(padded);
      continue;
    }
    for (std::size_t i = 0; i + width <= cps; ++i) {
      grams.push_back(padded.substr(starts[i], starts[i + width] - starts[i]));
    }
  }

  std::sort(grams.begin(), grams.end());
  TermCounts terms;
  for (std::size_t i = 0; i < grams.size();) {
    std::size_t j = i + 1;
    while (j < grams.size() && grams[j] == grams[i]) ++j;
    terms.emplace_hint(terms.end(), grams[i], j - i);
    i = j;
  }
  return terms;
}

std::vector<std::string> apply_stoplist(std::vector<std::string> tokens, const Stoplist& stoplist) {
  std::erase_if(tokens, [&](const std::string& t) { return stoplist.contains(t); });
  return tokens;
}

TermCounts apply_stoplist(TermCounts terms, const Stoplist& stoplist) {
  std::erase_if(terms, [&](const auto& kv) { return stoplist.contains(kv.first); });
  return terms;
}

TermCounts index_terms(const std::vector<std::string>& tokens, const AnalysisConfig& cfg) {
  std::vector<std::string> kept =
      cfg.use_stoplist ? apply_stoplist(tokens, *cfg.stoplist) : tokens;
  switch (cfg.mode) {
    case AnalysisMode::CharNgram:
      return char_ngrams(kept, cfg.n, cfg.pad);
    case AnalysisMode::Lemmatized:
      kept = lemmatize(std::move(kept), *cfg.lemma_table);
      break;
    case AnalysisMode::Surface:
      break;
  }
  TermCounts terms;
  for (auto& t : kept) ++terms[std::move(t)];
  return terms;
}

std::vector<AnalyzedSegment> analyze_document(const Document& doc, const AnalysisConfig& cfg) {
  cfg.validate();
  std::vector<AnalyzedSegment> out;
  out.reserve(doc.segments.size());
  for (const Segment& seg : doc.segments) {
    const auto tokens = tokenize(seg);
    out.push_back({seg.index, index_terms(tokens, cfg), tokens.size()});
  }
  return out;
}

CorpusStats corpus_stats(const Document& doc, const AnalysisConfig& cfg) {
  cfg.validate();
  CorpusStats stats;
  std::set<std::string, std::less<>> surface;
  std::set<std::string, std::less<>> analyzed;
  for (const Segment& seg : doc.segments) {
    const auto tokens = tokenize(seg);
    stats.tokens += tokens.size();
    surface.insert(tokens.begin(), tokens.end());
    for (auto& [term, count] : index_terms(tokens, cfg)) analyzed.insert(term);
  }
  stats.surface_types = surface.size();
  stats.analyzed_types = analyzed.size();
  return stats;
}

}  // namespace cohesion
