#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cohesion {

enum class SegmentKind { Heading, Paragraph };

std::string_view to_string(SegmentKind kind) noexcept;

struct Segment {
  std::size_t index = 0;
  SegmentKind kind = SegmentKind::Paragraph;
  std::string text;
  /// Length in code points, not bytes.
  std::size_t char_length = 0;

  bool operator==(const Segment&) const = default;
};

/// One language version of a text: an ordered list of headings and
/// paragraphs. Segment indices are 0..n-1 in file order.
struct Document {
  std::string id;
  std::string language;
  std::vector<Segment> segments;
  std::string source;

  std::size_t size() const noexcept { return segments.size(); }

  bool operator==(const Document&) const = default;
};

struct ParseOptions {
  std::string heading_marker = "== ";
  /// Also treat short single-line segments without terminal sentence
  /// punctuation as headings (for raw texts without markers).
  bool heuristic_headings = false;
  std::size_t heuristic_max_chars = 60;

  std::string id;
  std::string language;
  std::string source;
};

/// Consecutive non-blank lines form one segment; runs of blank lines
/// separate segments. Throws Error{EmptyDocument} when nothing remains.
Document parse_document(std::string_view raw_text, const ParseOptions& options = {});

/// Inverse of parse_document for the canonical format: heading marker
/// restored, one blank line between segments, trailing newline.
std::string serialize_document(const Document& doc,
                               std::string_view heading_marker = "== ");

Document load_document(const std::string& path, ParseOptions options = {});

/// Word form to citation form. Forms seen with more than one lemma in the
/// source list are excluded; `dropped_ambiguous` counts them.
struct LemmaTable {
  std::map<std::string, std::string, std::less<>> entries;
  std::size_t dropped_ambiguous = 0;

  const std::string* find(std::string_view form) const;
  std::size_t size() const noexcept { return entries.size(); }
};

/// Lines of "form<TAB>lemma"; '#' comment lines and blank lines are skipped.
LemmaTable load_lemma_table(std::string_view tsv_text);

struct Stoplist {
  std::set<std::string, std::less<>> forms;

  bool contains(std::string_view form) const { return forms.contains(form); }
  std::size_t size() const noexcept { return forms.size(); }
};

/// One form per line, lowercased; blank lines and '#' comments ignored.
Stoplist load_stoplist(std::string_view text);

std::string read_file(const std::string& path);

// ---------------------------------------------------------------------------
// Segment-level alignment of two language versions.

/// Half-open range [begin, end) of segment indices. Empty ranges occur when
/// one side of an aligned region has no segments at all.
struct SegmentRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  bool operator==(const SegmentRange&) const = default;
};

enum class DivergenceKind { CountMismatch, SizeMismatch };

std::string_view to_string(DivergenceKind kind) noexcept;

struct Divergence {
  /// Index of the first alignment pair covered by the divergence.
  std::size_t position = 0;
  DivergenceKind kind = DivergenceKind::CountMismatch;
  SegmentRange a;
  SegmentRange b;
  std::string detail;
};

enum class AlignmentStatus { Ok, Divergent };

struct AlignmentPair {
  SegmentRange a;
  SegmentRange b;
  AlignmentStatus status = AlignmentStatus::Ok;

  bool operator==(const AlignmentPair&) const = default;
};

struct AlignmentMap {
  std::vector<AlignmentPair> pairs;
  std::vector<Divergence> divergences;
};

inline constexpr double kDefaultSizeTolerance = 0.4;

/// Matches headings by size-compatible LCS (earliest match wins ties), then
/// pairs the paragraphs between matched headings. Count differences are
/// resolved by greedily merging adjacent segments on the larger side and
/// reported as divergences for manual review.
AlignmentMap align_documents(const Document& a, const Document& b,
                             double size_tolerance = kDefaultSizeTolerance);

/// TSV rows "A_begin-A_end<TAB>B_begin-B_end<TAB>status" with inclusive
/// ranges; an empty range is written as "-".
std::string write_alignment_tsv(const std::vector<AlignmentPair>& pairs);
std::vector<AlignmentPair> read_alignment_tsv(std::string_view tsv_text);

/// Joins each aligned range into a single segment so that both documents
/// end up with one segment per alignment pair. Pairs with an empty side
/// produce an empty paragraph on that side.
std::pair<Document, Document> apply_alignment(const Document& a, const Document& b,
                                              const std::vector<AlignmentPair>& pairs);

}  // namespace cohesion
