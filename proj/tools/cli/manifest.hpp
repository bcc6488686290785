#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohesion/analysis.hpp"
#include "cohesion/signal.hpp"

namespace cohesion::cli {

/// Flag values shared by every subcommand. Manifest run lines start from
/// these and override per key.
struct Options {
  AnalysisMode mode = AnalysisMode::CharNgram;
  int ngram = 3;
  std::string lemmas;
  std::string stoplist;
  FilterSpec filter;
  double min_depth = 0.0;
  std::size_t tolerance = 1;
  double alpha = 0.25;
  double size_tolerance = 0.4;
  bool repair = false;
  std::string out;
};

AnalysisMode parse_mode(std::string_view name);
FilterKind parse_filter(std::string_view name);

struct RunSpec {
  std::string label;
  std::filesystem::path path;
  std::string language;
  AnalysisConfig analysis;
  FilterSpec filter;
};

struct AlignSpec {
  std::string a;
  std::string b;
  std::filesystem::path tsv;
};

struct RunManifest {
  std::vector<RunSpec> runs;
  std::vector<AlignSpec> alignments;
  std::filesystem::path out_dir;
};

/// Builds an AnalysisConfig from flag values, loading lemma and stop
/// lists from disk.
AnalysisConfig make_analysis(AnalysisMode mode, int ngram, const std::string& lemmas,
                             const std::string& stoplist);

/// Line format, '#' starts a comment:
///
///   out <dir>
///   run <label> <path> [key=value ...]
///   align <labelA> <labelB> <tsv>
///
/// Run keys: lang, mode, n, lemmas, stoplist, filter, window. Relative paths
/// are taken from `base_dir`. Checks label uniqueness and that every
/// referenced file exists.
RunManifest parse_manifest(std::string_view text, const Options& defaults,
                           const std::filesystem::path& base_dir);
RunManifest load_manifest(const std::filesystem::path& path, const Options& defaults);

}  // namespace cohesion::cli
