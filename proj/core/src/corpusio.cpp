#include "cohesion/corpusio.hpp"

#include <fstream>
#include <sstream>

#include "cohesion/error.hpp"
#include "cohesion/text.hpp"

namespace cohesion {

std::string_view to_string(SegmentKind kind) noexcept {
  return kind == SegmentKind::Heading ? "heading" : "paragraph";
}

namespace {

bool is_blank(std::string_view line) { return text::trim(line).empty(); }

bool looks_like_heading(std::string_view line, std::size_t max_chars) {
  const auto t = text::trim(line);
  if (t.empty() || text::length(t) > max_chars) return false;
  switch (t.back()) {
    case '.': case '!': case '?': case ';': case ':': case ',':
      return false;
    default:
      break;
  }
  for (char32_t c : text::decode(t)) {
    if (text::is_letter(c)) return true;
  }
  return false;
}

Segment make_segment(std::vector<std::string_view>& lines, const ParseOptions& options,
                     std::size_t index) {
  Segment seg;
  seg.index = index;
  const std::string_view marker = options.heading_marker;
  if (!marker.empty() && lines.front().starts_with(marker)) {
    seg.kind = SegmentKind::Heading;
    lines.front().remove_prefix(marker.size());
  } else if (options.heuristic_headings && lines.size() == 1 &&
             looks_like_heading(lines.front(), options.heuristic_max_chars)) {
    seg.kind = SegmentKind::Heading;
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) seg.text += '\n';
    seg.text += lines[i];
  }
  seg.char_length = text::length(seg.text);
  return seg;
}

}  // namespace

Document parse_document(std::string_view raw_text, const ParseOptions& options) {
  Document doc;
  doc.id = options.id;
  doc.language = options.language;
  doc.source = options.source;

  std::vector<std::string_view> block;
  auto flush = [&] {
    if (block.empty()) return;
    doc.segments.push_back(make_segment(block, options, doc.segments.size()));
    block.clear();
  };
  for (std::string_view line : text::split_lines(raw_text)) {
    if (is_blank(line)) {
      flush();
    } else {
      block.push_back(line);
    }
  }
  flush();

  if (doc.segments.empty()) {
    throw Error(ErrorCode::EmptyDocument,
                "document" + (doc.source.empty() ? std::string() : " '" + doc.source + "'") +
                    " contains no segments");
  }
  return doc;
}

std::string serialize_document(const Document& doc, std::string_view heading_marker) {
  std::string out;
  for (std::size_t i = 0; i < doc.segments.size(); ++i) {
    const Segment& seg = doc.segments[i];
    if (i > 0) out += "\n\n";
    if (seg.kind == SegmentKind::Heading) out += heading_marker;
    out += seg.text;
  }
  out += '\n';
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "error reading '" + path + "'");
  return std::move(ss).str();
}

Document load_document(const std::string& path, ParseOptions options) {
  options.source = path;
  return parse_document(read_file(path), options);
}

const std::string* LemmaTable::find(std::string_view form) const {
  auto it = entries.find(form);
  return it == entries.end() ? nullptr : &it->second;
}

LemmaTable load_lemma_table(std::string_view tsv_text) {
  // form -> lemma, or nullopt once a second distinct lemma has been seen
  std::map<std::string, std::optional<std::string>, std::less<>> seen;
  std::size_t line_no = 0;
  for (std::string_view line : text::split_lines(tsv_text)) {
    ++line_no;
    if (text::trim(line).empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected 'form<TAB>lemma'");
    }
    std::string form = text::to_lower(text::trim(line.substr(0, tab)));
    std::string lemma = text::to_lower(text::trim(line.substr(tab + 1)));
    if (form.empty() || lemma.empty()) {
      throw ParseError(line_no, "empty form or lemma");
    }
    auto [it, inserted] = seen.try_emplace(std::move(form), lemma);
    if (!inserted && it->second && *it->second != lemma) it->second.reset();
  }

  LemmaTable table;
  for (auto& [form, lemma] : seen) {
    if (lemma) {
      table.entries.emplace(form, std::move(*lemma));
    } else {
      ++table.dropped_ambiguous;
    }
  }
  return table;
}

Stoplist load_stoplist(std::string_view text_in) {
  Stoplist stoplist;
  for (std::string_view line : text::split_lines(text_in)) {
    const auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    stoplist.forms.insert(text::to_lower(t));
  }
  return stoplist;
}

}  // namespace cohesion
