#include "manifest.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "cohesion/corpusio.hpp"
#include "cohesion/error.hpp"
#include "cohesion/text.hpp"

namespace fs = std::filesystem;

namespace cohesion::cli {

AnalysisMode parse_mode(std::string_view name) {
  if (name == "surface") return AnalysisMode::Surface;
  if (name == "lemma" || name == "lemmatized") return AnalysisMode::Lemmatized;
  if (name == "ngram" || name == "char_ngram") return AnalysisMode::CharNgram;
  throw Error(ErrorCode::Config, "unknown mode '" + std::string(name) + "'");
}

FilterKind parse_filter(std::string_view name) {
  if (name == "ma" || name == "moving_average") return FilterKind::MovingAverage;
  if (name == "hamming") return FilterKind::Hamming;
  throw Error(ErrorCode::Config, "unknown filter '" + std::string(name) + "'");
}

AnalysisConfig make_analysis(AnalysisMode mode, int ngram, const std::string& lemmas,
                             const std::string& stoplist) {
  AnalysisConfig cfg;
  cfg.mode = mode;
  cfg.n = ngram;
  if (!lemmas.empty()) cfg.lemma_table = std::make_shared<LemmaTable>(load_lemma_table(read_file(lemmas)));
  if (!stoplist.empty()) {
    cfg.stoplist = std::make_shared<Stoplist>(load_stoplist(read_file(stoplist)));
    cfg.use_stoplist = true;
  }
  cfg.validate();
  return cfg;
}

namespace {

std::vector<std::string> words(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int to_int(const std::string& s, std::size_t line) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
  return v;
}

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

void require_file(const fs::path& p, std::size_t line) {
  if (!fs::is_regular_file(p)) throw ParseError(line, "no such file: " + p.string());
}

}  // namespace

RunManifest parse_manifest(std::string_view text, const Options& defaults, const fs::path& base_dir) {
  RunManifest m;
  std::set<std::string> labels;
  std::size_t line_no = 0;
  for (std::string_view raw : text::split_lines(text)) {
    ++line_no;
    const auto hash = raw.find('#');
    const auto w = words(raw.substr(0, hash));
    if (w.empty()) continue;

    if (w[0] == "out") {
      if (w.size() != 2) throw ParseError(line_no, "usage: out <dir>");
      m.out_dir = resolve(base_dir, w[1]);
    } else if (w[0] == "align") {
      if (w.size() != 4) throw ParseError(line_no, "usage: align <labelA> <labelB> <tsv>");
      for (const auto* l : {&w[1], &w[2]}) {
        if (!labels.contains(*l)) throw ParseError(line_no, "unknown run label '" + *l + "'");
      }
      const auto tsv = resolve(base_dir, w[3]);
      require_file(tsv, line_no);
      m.alignments.push_back({w[1], w[2], tsv});
    } else if (w[0] == "run") {
      if (w.size() < 3) throw ParseError(line_no, "usage: run <label> <path> [key=value ...]");
      if (!labels.insert(w[1]).second) throw ParseError(line_no, "duplicate run label '" + w[1] + "'");
      RunSpec run;
      run.label = w[1];
      run.path = resolve(base_dir, w[2]);
      require_file(run.path, line_no);
      run.filter = defaults.filter;

      AnalysisMode mode = defaults.mode;
      int n = defaults.ngram;
      std::string lemmas = defaults.lemmas, stoplist = defaults.stoplist;
      for (std::size_t i = 3; i < w.size(); ++i) {
        const auto eq = w[i].find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected key=value, got '" + w[i] + "'");
        const std::string key = w[i].substr(0, eq), value = w[i].substr(eq + 1);
        if (key == "lang") {
          run.language = value;
        } else if (key == "mode") {
          mode = parse_mode(value);
        } else if (key == "n") {
          n = to_int(value, line_no);
        } else if (key == "lemmas") {
          lemmas = resolve(base_dir, value).string();
          require_file(lemmas, line_no);
        } else if (key == "stoplist") {
          stoplist = resolve(base_dir, value).string();
          require_file(stoplist, line_no);
        } else if (key == "filter") {
          run.filter.kind = parse_filter(value);
        } else if (key == "window") {
          run.filter.window = to_int(value, line_no);
        } else {
          throw ParseError(line_no, "unknown run key '" + key + "'");
        }
      }
      try {
        run.analysis = make_analysis(mode, n, lemmas, stoplist);
      } catch (const Error& e) {
        throw ParseError(line_no, "run '" + run.label + "': " + e.what());
      }
      m.runs.push_back(std::move(run));
    } else {
      throw ParseError(line_no, "unknown directive '" + w[0] + "'");
    }
  }
  if (m.runs.empty()) throw Error(ErrorCode::Config, "manifest lists no runs");
  return m;
}

RunManifest load_manifest(const fs::path& path, const Options& defaults) {
  return parse_manifest(read_file(path.string()), defaults, path.parent_path());
}

}  // namespace cohesion::cli
