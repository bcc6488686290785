#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cohesion/cohesion.hpp"
#include "cohesion/synthetic.hpp"

namespace fs = std::filesystem;

namespace cohesion::cli {

namespace {

Document load(const fs::path& path, std::string id, std::string language = {}) {
  ParseOptions po;
  po.id = std::move(id);
  po.language = std::move(language);
  po.source = path.string();
  return load_document(path.string(), po);
}

AnalysisConfig analysis_of(const Options& opts) {
  return make_analysis(opts.mode, opts.ngram, opts.lemmas, opts.stoplist);
}

struct LoadedRun {
  const RunSpec* spec;
  Document doc;
};

// Loads every run and projects aligned pairs onto their alignment.
std::vector<LoadedRun> load_runs(const RunManifest& m) {
  std::vector<LoadedRun> runs;
  std::map<std::string, std::size_t> by_label;
  for (const auto& r : m.runs) {
    by_label[r.label] = runs.size();
    runs.push_back({&r, load(r.path, r.label, r.language)});
  }
  for (const auto& al : m.alignments) {
    auto& a = runs[by_label.at(al.a)].doc;
    auto& b = runs[by_label.at(al.b)].doc;
    auto [pa, pb] = apply_alignment(a, b, read_alignment_tsv(read_file(al.tsv.string())));
    a = std::move(pa);
    b = std::move(pb);
  }
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].doc.size() != runs[0].doc.size()) {
      throw Error(ErrorCode::AlignmentRequired,
                  "runs '" + runs[0].spec->label + "' (" + std::to_string(runs[0].doc.size()) +
                      " segments) and '" + runs[i].spec->label + "' (" +
                      std::to_string(runs[i].doc.size()) +
                      " segments) are not aligned; signals are only comparable segment by "
                      "segment, add an 'align' line to the manifest");
    }
  }
  return runs;
}

CohesionSignal smoothed_signal(const Document& doc, const AnalysisConfig& cfg, const FilterSpec& filter) {
  return lowpass(compute_signal(doc, cfg), filter);
}

std::string gap_list(const std::vector<std::size_t>& gaps) {
  std::string s;
  for (auto g : gaps) s += (s.empty() ? "" : " ") + std::to_string(g);
  return s.empty() ? "(none)" : s;
}

}  // namespace

CommandResult cmd_analyze(const fs::path& path, const Options& opts) {
  const std::string stem = path.stem().string();
  const Document doc = load(path, stem);
  const AnalysisConfig cfg = analysis_of(opts);
  const CohesionSignal raw = compute_signal(doc, cfg);
  const CohesionSignal smooth = lowpass(raw, opts.filter);
  CommandResult r;
  r.files.push_back({stem + ".signal.csv", write_signal_csv(raw)});
  r.files.push_back({stem + ".smoothed.csv", write_smoothed_csv(raw, smooth)});
  r.files.push_back({stem + ".stats.json", write_stats_json(doc, cfg, corpus_stats(doc, cfg))});
  r.files.push_back({stem + ".dat", write_plot_dat(smooth)});
  r.summary = stem + ": " + std::to_string(doc.size()) + " segments, " + std::to_string(raw.size()) +
              " gaps, " + std::string(to_string(cfg.mode)) + "\n";
  return r;
}

CommandResult cmd_stats(const fs::path& path, const Options& opts) {
  const std::string stem = path.stem().string();
  const Document doc = load(path, stem);
  const AnalysisConfig cfg = analysis_of(opts);
  CommandResult r;
  r.files.push_back({stem + ".stats.json", write_stats_json(doc, cfg, corpus_stats(doc, cfg))});
  r.summary = r.files.back().content;
  return r;
}

CommandResult cmd_segment(const fs::path& path, const Options& opts) {
  const std::string stem = path.stem().string();
  const Document doc = load(path, stem);
  const BoundarySet b = detect_boundaries(smoothed_signal(doc, analysis_of(opts), opts.filter), opts.min_depth);
  CommandResult r;
  r.files.push_back({stem + ".boundaries.json", write_boundaries_json(b)});
  r.summary = stem + ": " + gap_list(b.gaps) + "\n";
  return r;
}

CommandResult cmd_compare(const RunManifest& m, const Options& opts) {
  std::vector<BoundarySet> sets;
  for (const auto& run : load_runs(m)) {
    sets.push_back(detect_boundaries(smoothed_signal(run.doc, run.spec->analysis, run.spec->filter),
                                     opts.min_depth));
  }
  const auto cmp = compare_boundaries(sets, opts.tolerance, opts.alpha);
  CommandResult r;
  r.files.push_back({"boundaries.json", write_comparison_json(cmp)});
  r.files.push_back({"boundaries.txt", format_boundary_table(cmp)});
  r.summary = r.files.back().content;
  if (opts.repair) {
    const auto fixed = compare_boundaries(repair_boundaries(cmp), opts.tolerance, opts.alpha);
    r.files.push_back({"boundaries.repaired.json", write_comparison_json(fixed)});
    r.files.push_back({"boundaries.repaired.txt", format_boundary_table(fixed)});
    r.summary += "\nafter repair:\n" + r.files.back().content;
  }
  return r;
}

CommandResult cmd_correlate(const RunManifest& m) {
  std::vector<LabeledSignal> signals;
  for (const auto& run : load_runs(m)) {
    signals.push_back({run.spec->label, smoothed_signal(run.doc, run.spec->analysis, run.spec->filter).values});
  }
  const auto matrix = correlation_matrix(signals);
  CommandResult r;
  r.files.push_back({"matrix.csv", write_matrix_csv(matrix)});
  r.files.push_back({"matrix.json", write_matrix_json(matrix)});
  r.summary = r.files.front().content;
  return r;
}

CommandResult cmd_align(const fs::path& a, const fs::path& b, const Options& opts) {
  const Document da = load(a, a.stem().string());
  const Document db = load(b, b.stem().string());
  const auto map = align_documents(da, db, opts.size_tolerance);
  const std::string base = da.id + "_" + db.id;
  CommandResult r;
  r.files.push_back({base + ".align.tsv", write_alignment_tsv(map.pairs)});
  r.files.push_back({base + ".divergences.txt", format_divergences(map)});
  r.summary = r.files.back().content;
  return r;
}

CommandResult cmd_synth(std::uint64_t seed) {
  const auto abs = synth::generate_abstract(synth::CorpusParams{}, seed);
  struct Version {
    const char* tag;
    synth::RealizeOptions realize;
  };
  // English keeps the abstract inflections; the others redraw them and add
  // a little lexical noise, as a translation would.
  const Version versions[] = {
      {"en", {}},
      {"de", {.inflection_seed = seed + 11, .synonym_rate = 0.04, .drop_rate = 0.03, .noise_seed = seed + 12}},
      {"fr", {.inflection_seed = seed + 21, .synonym_rate = 0.04, .drop_rate = 0.03, .noise_seed = seed + 22}},
  };
  CommandResult r;
  std::uint64_t lang_seed = seed * 31;
  Document en;
  for (const auto& v : versions) {
    const auto lang = synth::make_language(v.tag, abs.lemma_count, ++lang_seed);
    Document doc = synth::realize(abs, lang, v.realize, v.tag);
    r.files.push_back({std::string(v.tag) + ".txt", serialize_document(doc)});
    r.files.push_back({"lemmas_" + std::string(v.tag) + ".tsv", synth::write_lemma_tsv(lang)});
    if (en.segments.empty()) en = std::move(doc);
  }

  // Alignment fixture: the English text with two adjacent paragraphs
  // merged into one.
  Document merged = en;
  for (std::size_t i = 1; i + 1 < merged.size(); ++i) {
    auto& s = merged.segments;
    if (s[i].kind == SegmentKind::Paragraph && s[i + 1].kind == SegmentKind::Paragraph) {
      s[i].text += "\n" + s[i + 1].text;
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      break;
    }
  }
  r.files.push_back({"en_merged.txt", serialize_document(merged)});

  r.files.push_back({"manifest.txt",
                     "# Demo corpus: one document in three languages, plus German\n"
                     "# analyzed without and with lemmatization.\n"
                     "out results\n"
                     "run en en.txt lang=en\n"
                     "run de de.txt lang=de\n"
                     "run fr fr.txt lang=fr\n"
                     "run de_nm de.txt lang=de mode=surface\n"
                     "run de_m de.txt lang=de mode=lemma lemmas=lemmas_de.tsv\n"});
  r.summary = "abstract document: " + std::to_string(abs.segments.size()) + " segments, " +
              std::to_string(abs.topic_starts.size()) + " topics, " + std::to_string(abs.lemma_count) +
              " lemmas\n";
  return r;
}

void write_outputs(const fs::path& dir, const std::vector<OutputFile>& files) {
  if (!dir.empty()) fs::create_directories(dir);
  std::vector<fs::path> temps, placed;
  auto cleanup = [&] {
    std::error_code ec;
    for (const auto& t : temps) fs::remove(t, ec);
    for (const auto& p : placed) fs::remove(p, ec);
  };
  try {
    for (const auto& f : files) {
      const fs::path tmp = dir / (f.name + ".tmp");
      temps.push_back(tmp);
      std::ofstream out(tmp, std::ios::binary);
      out << f.content;
      out.close();
      if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
      fs::rename(temps[i], dir / files[i].name);
      placed.push_back(dir / files[i].name);
    }
  } catch (const fs::filesystem_error& e) {
    cleanup();
    throw Error(ErrorCode::Io, e.what());
  } catch (...) {
    cleanup();
    throw;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Lexical cohesion signals, subtopic segmentation and cross-language correlation"};
  app.require_subcommand(1);
  Options opts;
  std::string mode = "ngram", filter = "ma";

  auto analysis_flags = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "Index terms: surface, lemma or ngram")
        ->check(CLI::IsMember({"surface", "lemma", "ngram"}))
        ->capture_default_str();
    sub->add_option("--ngram", opts.ngram, "Character n-gram length")->capture_default_str();
    sub->add_option("--lemmas", opts.lemmas, "Lemma table (form<TAB>lemma)")->check(CLI::ExistingFile);
    sub->add_option("--stoplist", opts.stoplist, "Stop word list, one per line")->check(CLI::ExistingFile);
  };
  auto filter_flags = [&](CLI::App* sub) {
    sub->add_option("--filter", filter, "Low-pass filter: ma or hamming")
        ->check(CLI::IsMember({"ma", "hamming"}))
        ->capture_default_str();
    sub->add_option("--window", opts.filter.window, "Filter window in gaps (odd)")->capture_default_str();
  };
  auto tiling_flags = [&](CLI::App* sub) {
    sub->add_option("--min-depth", opts.min_depth, "Discard minima shallower than this")->capture_default_str();
  };
  auto out_flag = [&](CLI::App* sub) { sub->add_option("--out", opts.out, "Output directory"); };

  std::string doc_path, doc_b, manifest_path;
  std::uint64_t seed = 2024;

  auto* analyze = app.add_subcommand("analyze", "Cohesion signal, smoothed signal, stats and plot data");
  analyze->add_option("document", doc_path)->required()->check(CLI::ExistingFile);
  analysis_flags(analyze);
  filter_flags(analyze);
  out_flag(analyze);

  auto* stats = app.add_subcommand("stats", "Token and type counts");
  stats->add_option("document", doc_path)->required()->check(CLI::ExistingFile);
  analysis_flags(stats);
  out_flag(stats);

  auto* segment = app.add_subcommand("segment", "Subtopic boundaries of one document");
  segment->add_option("document", doc_path)->required()->check(CLI::ExistingFile);
  analysis_flags(segment);
  filter_flags(segment);
  tiling_flags(segment);
  out_flag(segment);

  auto* compare = app.add_subcommand("compare", "Cross-language boundary comparison");
  compare->add_option("manifest", manifest_path)->required()->check(CLI::ExistingFile);
  analysis_flags(compare);
  filter_flags(compare);
  tiling_flags(compare);
  compare->add_option("--tolerance", opts.tolerance, "Cluster radius in gaps")->capture_default_str();
  compare->add_option("--alpha", opts.alpha, "Agreement window as a fraction of mean tile length")
      ->capture_default_str();
  compare->add_flag("--repair", opts.repair, "Move weak distortions onto the consensus gap");
  out_flag(compare);

  auto* correlate = app.add_subcommand("correlate", "Normalized correlation matrix of smoothed signals");
  correlate->add_option("manifest", manifest_path)->required()->check(CLI::ExistingFile);
  analysis_flags(correlate);
  filter_flags(correlate);
  out_flag(correlate);

  auto* align = app.add_subcommand("align", "Segment alignment of two language versions");
  align->add_option("a", doc_path)->required()->check(CLI::ExistingFile);
  align->add_option("b", doc_b)->required()->check(CLI::ExistingFile);
  align->add_option("--size-tolerance", opts.size_tolerance, "Allowed relative size difference")
      ->capture_default_str();
  out_flag(align);

  auto* synth = app.add_subcommand("synth", "Write the synthetic demo corpus");
  synth->add_option("--seed", seed)->capture_default_str();
  out_flag(synth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    opts.mode = parse_mode(mode);
    opts.filter.kind = parse_filter(filter);
    CommandResult result;
    fs::path out_dir = opts.out;
    auto manifest = [&] {
      RunManifest m = load_manifest(manifest_path, opts);
      if (out_dir.empty()) out_dir = m.out_dir;
      return m;
    };
    if (*analyze) result = cmd_analyze(doc_path, opts);
    else if (*stats) result = cmd_stats(doc_path, opts);
    else if (*segment) result = cmd_segment(doc_path, opts);
    else if (*compare) result = cmd_compare(manifest(), opts);
    else if (*correlate) result = cmd_correlate(manifest());
    else if (*align) result = cmd_align(doc_path, doc_b, opts);
    else if (*synth) result = cmd_synth(seed);
    write_outputs(out_dir.empty() ? fs::path(".") : out_dir, result.files);
    std::cout << result.summary;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "cohesion: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cohesion::cli
