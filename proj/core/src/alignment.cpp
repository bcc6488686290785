#include <algorithm>
#include <charconv>
#include <limits>

#include "cohesion/corpusio.hpp"
#include "cohesion/error.hpp"
#include "cohesion/text.hpp"

namespace cohesion {

std::string_view to_string(DivergenceKind kind) noexcept {
  return kind == DivergenceKind::CountMismatch ? "count-mismatch" : "size-mismatch";
}

namespace {

double size_ratio(std::size_t x, std::size_t y) {
  const auto hi = std::max(x, y);
  if (hi == 0) return 1.0;
  return static_cast<double>(std::min(x, y)) / static_cast<double>(hi);
}

std::size_t range_length(const Document& doc, SegmentRange r) {
  std::size_t total = 0;
  for (std::size_t i = r.begin; i < r.end; ++i) total += doc.segments[i].char_length;
  return total;
}

std::string describe(SegmentRange r) {
  if (r.empty()) return "-";
  return std::to_string(r.begin) + "-" + std::to_string(r.end - 1);
}

class Aligner {
 public:
  Aligner(const Document& a, const Document& b, double tolerance)
      : a_(a), b_(b), min_ratio_(1.0 - tolerance) {}

  AlignmentMap run() {
    std::vector<std::size_t> ha, hb;
    for (const auto& s : a_.segments)
      if (s.kind == SegmentKind::Heading) ha.push_back(s.index);
    for (const auto& s : b_.segments)
      if (s.kind == SegmentKind::Heading) hb.push_back(s.index);

    std::size_t next_a = 0, next_b = 0;
    for (auto [ia, ib] : match_headings(ha, hb)) {
      region({next_a, ia}, {next_b, ib});
      emit_one_to_one(ia, ib);
      next_a = ia + 1;
      next_b = ib + 1;
    }
    region({next_a, a_.size()}, {next_b, b_.size()});
    return std::move(map_);
  }

 private:
  bool compatible(std::size_t ia, std::size_t ib) const {
    return size_ratio(a_.segments[ia].char_length, b_.segments[ib].char_length) >= min_ratio_;
  }

  // Longest common subsequence of size-compatible headings. Reconstruction
  // walks forward and takes a match as soon as it is optimal.
  std::vector<std::pair<std::size_t, std::size_t>> match_headings(
      const std::vector<std::size_t>& ha, const std::vector<std::size_t>& hb) const {
    const std::size_t n = ha.size(), m = hb.size();
    std::vector<std::vector<std::size_t>> lcs(n + 1, std::vector<std::size_t>(m + 1, 0));
    for (std::size_t p = n; p-- > 0;) {
      for (std::size_t q = m; q-- > 0;) {
        std::size_t best = std::max(lcs[p + 1][q], lcs[p][q + 1]);
        if (compatible(ha[p], hb[q])) best = std::max(best, lcs[p + 1][q + 1] + 1);
        lcs[p][q] = best;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> matches;
    std::size_t p = 0, q = 0;
    while (p < n && q < m) {
      if (compatible(ha[p], hb[q]) && lcs[p][q] == lcs[p + 1][q + 1] + 1) {
        matches.emplace_back(ha[p], hb[q]);
        ++p;
        ++q;
      } else if (lcs[p + 1][q] >= lcs[p][q + 1]) {
        ++p;
      } else {
        ++q;
      }
    }
    return matches;
  }

  void emit_one_to_one(std::size_t ia, std::size_t ib) {
    emit({ia, ia + 1}, {ib, ib + 1});
  }

  // Appends a pair; 1:1 pairs whose sizes disagree are flagged.
  void emit(SegmentRange ra, SegmentRange rb) {
    AlignmentPair pair{ra, rb, AlignmentStatus::Ok};
    if (ra.size() != 1 || rb.size() != 1) {
      pair.status = AlignmentStatus::Divergent;
    } else if (size_ratio(range_length(a_, ra), range_length(b_, rb)) < min_ratio_) {
      pair.status = AlignmentStatus::Divergent;
      map_.divergences.push_back(
          {map_.pairs.size(), DivergenceKind::SizeMismatch, ra, rb,
           "segment lengths " + std::to_string(range_length(a_, ra)) + " vs " +
               std::to_string(range_length(b_, rb)) + " chars"});
    }
    map_.pairs.push_back(pair);
  }

  void region(SegmentRange ra, SegmentRange rb) {
    if (ra.empty() && rb.empty()) return;
    if (ra.size() == rb.size()) {
      for (std::size_t k = 0; k < ra.size(); ++k) emit_one_to_one(ra.begin + k, rb.begin + k);
      return;
    }

    const std::size_t position = map_.pairs.size();
    map_.divergences.push_back(
        {position, DivergenceKind::CountMismatch, ra, rb,
         "A " + describe(ra) + " has " + std::to_string(ra.size()) + " segment(s), B " +
             describe(rb) + " has " + std::to_string(rb.size())});

    if (ra.empty() || rb.empty()) {
      emit(ra, rb);
      return;
    }

    const bool merge_a = ra.size() > rb.size();
    const Document& big = merge_a ? a_ : b_;
    const Document& small = merge_a ? b_ : a_;
    const SegmentRange big_range = merge_a ? ra : rb;
    const SegmentRange small_range = merge_a ? rb : ra;

    std::vector<SegmentRange> groups;
    for (std::size_t i = big_range.begin; i < big_range.end; ++i) groups.push_back({i, i + 1});
    std::vector<std::size_t> small_len;
    for (std::size_t i = small_range.begin; i < small_range.end; ++i)
      small_len.push_back(small.segments[i].char_length);

    auto cost_with_merge = [&](std::size_t k) {
      double cost = 0.0;
      std::size_t slot = 0;
      for (std::size_t g = 0; g < groups.size(); ++g, ++slot) {
        SegmentRange r = groups[g];
        if (g == k) r.end = groups[++g].end;
        cost += std::abs(size_ratio(range_length(big, r), small_len[slot]) - 1.0);
      }
      return cost;
    };

    while (groups.size() > small_len.size()) {
      std::size_t best = 0;
      double best_cost = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k + 1 < groups.size(); ++k) {
        const double c = cost_with_merge(k);
        if (c < best_cost) {
          best_cost = c;
          best = k;
        }
      }
      groups[best].end = groups[best + 1].end;
      groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(best) + 1);
    }

    for (std::size_t k = 0; k < groups.size(); ++k) {
      const SegmentRange other{small_range.begin + k, small_range.begin + k + 1};
      if (merge_a) {
        emit(groups[k], other);
      } else {
        emit(other, groups[k]);
      }
    }
  }

  const Document& a_;
  const Document& b_;
  double min_ratio_;
  AlignmentMap map_;
};

SegmentRange parse_range(std::string_view field, std::size_t line_no) {
  field = text::trim(field);
  if (field == "-") return {};
  const auto dash = field.find('-');
  auto parse_num = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw ParseError(line_no, "bad segment range '" + std::string(field) + "'");
    }
    return v;
  };
  if (dash == std::string_view::npos) {
    throw ParseError(line_no, "bad segment range '" + std::string(field) + "'");
  }
  const std::size_t first = parse_num(field.substr(0, dash));
  const std::size_t last = parse_num(field.substr(dash + 1));
  if (last < first) throw ParseError(line_no, "descending range '" + std::string(field) + "'");
  return {first, last + 1};
}

void check_coverage(const std::vector<AlignmentPair>& pairs, bool side_a, std::size_t n) {
  std::size_t next = 0;
  for (const auto& p : pairs) {
    const SegmentRange r = side_a ? p.a : p.b;
    if (r.empty()) continue;
    if (r.begin != next) {
      throw Error(ErrorCode::AlignmentRequired,
                  std::string("alignment ranges for document ") + (side_a ? "A" : "B") +
                      " are not contiguous at segment " + std::to_string(next));
    }
    next = r.end;
  }
  if (next != n) {
    throw Error(ErrorCode::AlignmentRequired,
                std::string("alignment covers ") + std::to_string(next) + " of " +
                    std::to_string(n) + " segments of document " + (side_a ? "A" : "B"));
  }
}

Segment join(const Document& doc, SegmentRange r, std::size_t index) {
  Segment seg;
  seg.index = index;
  bool all_headings = !r.empty();
  for (std::size_t i = r.begin; i < r.end; ++i) {
    if (i > r.begin) seg.text += '\n';
    seg.text += doc.segments[i].text;
    all_headings = all_headings && doc.segments[i].kind == SegmentKind::Heading;
  }
  seg.kind = all_headings ? SegmentKind::Heading : SegmentKind::Paragraph;
  seg.char_length = text::length(seg.text);
  return seg;
}

}  // namespace

AlignmentMap align_documents(const Document& a, const Document& b, double size_tolerance) {
  if (a.segments.empty() || b.segments.empty()) {
    throw Error(ErrorCode::EmptyDocument, "cannot align an empty document");
  }
  if (!(size_tolerance > 0.0)) {
    throw Error(ErrorCode::Config, "size tolerance must be positive");
  }
  return Aligner(a, b, size_tolerance).run();
}

std::string write_alignment_tsv(const std::vector<AlignmentPair>& pairs) {
  std::string out;
  for (const auto& p : pairs) {
    out += describe(p.a);
    out += '\t';
    out += describe(p.b);
    out += '\t';
    out += p.status == AlignmentStatus::Ok ? "ok" : "divergent";
    out += '\n';
  }
  return out;
}

std::vector<AlignmentPair> read_alignment_tsv(std::string_view tsv_text) {
  std::vector<AlignmentPair> pairs;
  std::size_t line_no = 0;
  std::size_t cursor_a = 0, cursor_b = 0;
  for (std::string_view line : text::split_lines(tsv_text)) {
    ++line_no;
    if (text::trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3) throw ParseError(line_no, "expected three tab-separated fields");
    AlignmentPair pair{parse_range(fields[0], line_no), parse_range(fields[1], line_no)};
    // "-" carries no position; it sits where the previous row ended.
    if (pair.a.begin == pair.a.end) pair.a = {cursor_a, cursor_a};
    if (pair.b.begin == pair.b.end) pair.b = {cursor_b, cursor_b};
    cursor_a = pair.a.end;
    cursor_b = pair.b.end;
    const auto status = text::trim(fields[2]);
    if (status == "ok") {
      pair.status = AlignmentStatus::Ok;
    } else if (status == "divergent") {
      pair.status = AlignmentStatus::Divergent;
    } else {
      throw ParseError(line_no, "unknown status '" + std::string(status) + "'");
    }
    pairs.push_back(pair);
  }
  return pairs;
}

std::pair<Document, Document> apply_alignment(const Document& a, const Document& b,
                                              const std::vector<AlignmentPair>& pairs) {
  check_coverage(pairs, true, a.size());
  check_coverage(pairs, false, b.size());
  Document pa{a.id, a.language, {}, a.source};
  Document pb{b.id, b.language, {}, b.source};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    pa.segments.push_back(join(a, pairs[k].a, k));
    pb.segments.push_back(join(b, pairs[k].b, k));
  }
  return {std::move(pa), std::move(pb)};
}

}  // namespace cohesion
