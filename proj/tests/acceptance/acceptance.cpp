// Acceptance checks, one line per criterion. Exit status is non-zero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cohesion/cohesion.hpp"
#include "cohesion/synthetic.hpp"
#include "commands.hpp"
#include "oracle/oracle.hpp"

namespace fs = std::filesystem;
using namespace cohesion;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

const fs::path kSource = COHESION_SOURCE_DIR;

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

AnalysisConfig config(AnalysisMode mode, std::shared_ptr<const LemmaTable> lemmas = nullptr) {
  AnalysisConfig cfg;
  cfg.mode = mode;
  cfg.lemma_table = std::move(lemmas);
  return cfg;
}

// Default pipeline: signal, then the default low-pass filter.
std::vector<double> pipeline(const Document& doc, const AnalysisConfig& cfg) {
  return lowpass(compute_signal(doc, cfg), FilterSpec{}).values;
}

double corr(const std::vector<double>& x, const std::vector<double>& y) { return cross_correlate(x, y).r; }

Document demo_source(std::uint64_t seed, std::uint64_t inflection_seed = 0) {
  const auto abs = synth::generate_abstract(synth::CorpusParams{}, seed);
  return synth::realize(abs, synth::make_language("en", abs.lemma_count, seed + 1),
                        {.inflection_seed = inflection_seed}, "src");
}

Outcome bijection_fidelity() {
  Outcome o;
  const Document doc = demo_source(101);
  o.check(doc.size() == 484, "source has " + std::to_string(doc.size()) + " segments");

  // Letter ciphers map words and character n-grams one-to-one, so every
  // analysis mode must see the same structure.
  const Document copies[] = {doc, synth::substitute_letters(doc, 7), synth::substitute_letters(doc, 8)};
  const auto cfg = config(AnalysisMode::CharNgram);
  std::vector<std::vector<double>> sig;
  std::vector<BoundarySet> sets;
  for (const auto& d : copies) {
    sig.push_back(pipeline(d, cfg));
    sets.push_back(detect_boundaries(sig.back()));
  }
  o.check(sig[0].size() == 483, "signal has " + std::to_string(sig[0].size()) + " gaps");
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) worst = std::max(worst, std::abs(corr(sig[i], sig[j]) - 1.0));

  // Whole-word renaming, analyzed on surface forms.
  const Document renamed[] = {doc, synth::rename_vocabulary(doc, 7), synth::rename_vocabulary(doc, 8)};
  std::vector<std::vector<double>> sig_w;
  for (const auto& d : renamed) sig_w.push_back(pipeline(d, config(AnalysisMode::Surface)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) worst = std::max(worst, std::abs(corr(sig_w[i], sig_w[j]) - 1.0));
  o.check(worst <= 1e-9, "max |r - 1| = " + std::to_string(worst));

  const auto cmp = compare_boundaries(sets);
  std::size_t confirmed = 0;
  for (const auto& c : cmp.clusters) confirmed += c.cls == BoundaryClass::Confirmed;
  o.check(!cmp.clusters.empty() && confirmed == cmp.clusters.size(),
          std::to_string(confirmed) + "/" + std::to_string(cmp.clusters.size()) + " clusters confirmed");
  if (o.pass) {
    o.detail = "max |r-1| " + std::to_string(worst) + ", " + std::to_string(confirmed) + "/" +
               std::to_string(cmp.clusters.size()) + " clusters confirmed";
  }
  return o;
}

Outcome degradation_ordering() {
  Outcome o;
  const Document doc = demo_source(202);
  const auto cfg = config(AnalysisMode::CharNgram);
  const auto base = pipeline(doc, cfg);
  const double ps[] = {0.1, 0.3, 0.5};
  double means[3] = {};
  double max_r = 0.0;
  for (int k = 0; k < 3; ++k) {
    double sum = 0.0;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      const double r = corr(base, pipeline(synth::replace_tokens(doc, ps[k], 1000 + trial), cfg));
      max_r = std::max(max_r, r);
      sum += r;
    }
    means[k] = sum / 100.0;
  }
  o.check(means[0] > means[1] && means[1] > means[2], "means not strictly decreasing");
  o.check(means[0] > 0.9, "mean r(0.1) = " + fmt(means[0]) + " <= 0.9");
  o.check(max_r <= 1.0, "some r > 1");
  const std::string values = "mean r " + fmt(means[0], 4) + " > " + fmt(means[1], 4) + " > " + fmt(means[2], 4);
  o.detail = o.pass ? values : values + "; " + o.detail;
  return o;
}

Outcome vector_oracle() {
  Outcome o;
  // 5 segments, 30 tokens.
  const std::vector<std::vector<std::string>> tokens = {
      {"bank", "rate", "loan", "bank", "credit", "rate"},
      {"rate", "loan", "loan", "market", "bank", "fund"},
      {"river", "bank", "water", "flow", "river", "stone"},
      {"water", "stone", "river", "fish", "flow", "flow"},
      {"fund", "market", "fish", "credit", "rate", "water"},
  };
  Document doc;
  doc.id = "fixture";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string text;
    for (const auto& t : tokens[i]) text += t + " ";
    doc.segments.push_back({i, SegmentKind::Paragraph, text, text.size()});
  }
  const auto want = oracle::cohesion_signal(tokens);
  const auto got = compute_signal(doc, config(AnalysisMode::Surface));
  o.check(got.size() == 4 && want.size() == 4, "wrong gap count");
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i)
    worst = std::max(worst, std::abs(got.values[i] - want[i]));
  o.check(worst <= 1e-12, "max deviation " + std::to_string(worst));
  if (o.pass) {
    std::ostringstream s;
    s.precision(2);
    s << "max deviation " << worst;
    o.detail = s.str();
  }
  return o;
}

Outcome correlation_oracle() {
  Outcome o;
  std::mt19937_64 rng(44);
  auto random_signal = [&](std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return v;
  };
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = random_signal(1 + rng() % 16);
    const auto y = random_signal(1 + rng() % 16);
    const auto got = cross_correlate(x, y).h;
    const auto want = oracle::correlation(x, y);
    if (got.size() != want.size()) {
      o.check(false, "h length mismatch");
      break;
    }
    for (std::size_t j = 0; j < want.size(); ++j) worst = std::max(worst, std::abs(got[j] - want[j]));
  }
  o.check(worst <= 1e-12, "max h deviation " + std::to_string(worst));
  const auto hand = cross_correlate(std::vector<double>{1, 2}, std::vector<double>{2, 1});
  o.check(hand.h == std::vector<double>{4, 4, 0}, "h for [1,2],[2,1] is not [4,4,0]");
  o.check(hand.r == 0.8, "r for [1,2],[2,1] is " + fmt(hand.r, 17));
  if (o.pass) o.detail = "1000 pairs, h=[4,4,0], r=0.8";
  return o;
}

Outcome exhaustive_segmentation() {
  Outcome o;
  const double grid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::size_t checked = 0, mismatches = 0;
  std::vector<double> v;
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<int> digit(n, 0);
    v.assign(n, 0.0);
    for (;;) {
      for (std::size_t i = 0; i < n; ++i) v[i] = grid[digit[i]];
      const auto got = detect_boundaries(v);
      const auto want = oracle::minima(v);
      bool same = got.gaps.size() == want.size();
      for (std::size_t i = 0; same && i < want.size(); ++i) {
        same = got.gaps[i] == want[i].first && std::abs(got.depths.at(got.gaps[i]) - want[i].second) <= 1e-12;
      }
      mismatches += !same;
      ++checked;
      std::size_t k = 0;
      while (k < n && ++digit[k] == 5) digit[k++] = 0;
      if (k == n) break;
    }
  }
  o.check(mismatches == 0, std::to_string(mismatches) + " mismatching signals");
  if (o.pass) o.detail = std::to_string(checked) + " signals";
  return o;
}

Outcome filter_contracts() {
  Outcome o;
  const FilterSpec specs[] = {{FilterKind::MovingAverage, 3}, {FilterKind::MovingAverage, 5},
                              {FilterKind::MovingAverage, 9}, {FilterKind::Hamming, 3},
                              {FilterKind::Hamming, 5},       {FilterKind::Hamming, 11}};
  std::mt19937_64 rng(66);
  for (const auto& spec : specs) {
    for (double c : {0.0, 0.37, 1.0}) {
      for (double x : lowpass(std::vector<double>(20, c), spec)) {
        if (std::abs(x - c) > 1e-12) o.check(false, "constant signal moved");
      }
    }
  }
  bool range_ok = true, reversal_ok = true, identity_ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& spec = specs[static_cast<std::size_t>(trial) % std::size(specs)];
    std::vector<double> v(static_cast<std::size_t>(spec.window) + rng() % 40);
    for (auto& x : v) x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const auto out = lowpass(v, spec);
    for (double x : out) range_ok &= x >= 0.0 && x <= 1.0;
    std::vector<double> rev(v.rbegin(), v.rend());
    const auto out_rev = lowpass(rev, spec);
    for (std::size_t i = 0; i < out.size(); ++i) reversal_ok &= std::abs(out[i] - out_rev[out.size() - 1 - i]) <= 1e-12;
    identity_ok &= lowpass(v, {FilterKind::MovingAverage, 1}) == v && lowpass(v, {FilterKind::Hamming, 1}) == v;
  }
  o.check(identity_ok, "window 1 is not the identity");
  o.check(range_ok, "output left [0,1]");
  o.check(reversal_ok, "reversal symmetry broken");
  if (o.pass) o.detail = "fixpoint, identity, range and reversal on 1000 signals";
  return o;
}

BoundarySet gaps_of(std::vector<std::size_t> gaps) {
  BoundarySet s;
  s.gaps = std::move(gaps);
  for (auto g : s.gaps) s.depths[g] = 0.5;
  s.signal_length = 12;
  return s;
}

Outcome weak_distortion_repair() {
  Outcome o;
  const auto cmp = compare_boundaries({gaps_of({4}), gaps_of({4}), gaps_of({5})});
  o.check(cmp.clusters.size() == 1, "expected one cluster");
  if (cmp.clusters.size() == 1) {
    o.check(cmp.clusters[0].cls == BoundaryClass::WeakDistortion,
            "class " + std::string(to_string(cmp.clusters[0].cls)));
    o.check(std::abs(cmp.clusters[0].strength - 5.0 / 6.0) <= 1e-15, "strength " + fmt(cmp.clusters[0].strength));
  }
  const auto fixed = repair_boundaries(cmp);
  bool all_four = fixed.size() == 3;
  for (const auto& s : fixed) all_four &= s.gaps == std::vector<std::size_t>{4};
  o.check(all_four, "repair did not yield {4},{4},{4}");
  o.check(repair_boundaries(compare_boundaries(fixed)) == fixed, "repair is not idempotent");
  if (o.pass) o.detail = "weak_distortion, strength 5/6, repaired to {4},{4},{4}";
  return o;
}

Outcome analysis_mode_effect() {
  Outcome o;
  const auto abs = synth::generate_abstract(synth::CorpusParams{}, 303);
  const auto src_lang = synth::make_language("en", abs.lemma_count, 31);
  const auto tgt_lang = synth::make_language("de", abs.lemma_count, 32);
  // Same lemmas, independent inflection choices: a lemma-level bijection.
  const Document src = synth::realize(abs, src_lang, {.inflection_seed = 5}, "src");
  const Document tgt = synth::realize(abs, tgt_lang, {.inflection_seed = 6}, "tgt");
  const auto lemmas = std::make_shared<const LemmaTable>(synth::lemma_table_for(src_lang));

  const double r_lem_surface =
      corr(pipeline(src, config(AnalysisMode::Lemmatized, lemmas)), pipeline(src, config(AnalysisMode::Surface)));
  const double r_trigram = corr(pipeline(src, config(AnalysisMode::CharNgram)), pipeline(tgt, config(AnalysisMode::CharNgram)));
  const double r_surface = corr(pipeline(src, config(AnalysisMode::Surface)), pipeline(tgt, config(AnalysisMode::Surface)));
  o.check(r_lem_surface < 1.0, "lemmatized vs surface r = " + fmt(r_lem_surface));
  o.check(r_trigram >= r_surface, "trigram r " + fmt(r_trigram) + " < surface r " + fmt(r_surface));
  const std::string values = "r(lemma,surface) " + fmt(r_lem_surface, 4) + ", trigram " + fmt(r_trigram, 4) +
                             " >= surface " + fmt(r_surface, 4);
  o.detail = o.pass ? values : values + "; " + o.detail;
  return o;
}

Outcome format_round_trips() {
  Outcome o;
  const fs::path demo = kSource / "data" / "demo";
  for (const char* name : {"en.txt", "de.txt", "fr.txt", "en_merged.txt"}) {
    const Document d = load_document((demo / name).string());
    const std::string once = serialize_document(d);
    o.check(serialize_document(parse_document(once)) == once, std::string("serialize fixpoint: ") + name);
    o.check(parse_document(once) == parse_document(serialize_document(parse_document(once))),
            std::string("parse fixpoint: ") + name);
  }

  const Document en = load_document((demo / "en.txt").string());
  const Document merged = load_document((demo / "en_merged.txt").string());
  const auto pairs = align_documents(en, merged).pairs;
  o.check(read_alignment_tsv(write_alignment_tsv(pairs)) == pairs, "alignment TSV re-read differs");

  // CSV keeps six decimals: values written once re-read identically from then on.
  const CohesionSignal sig = compute_signal(en, config(AnalysisMode::CharNgram));
  const CohesionSignal back = read_signal_csv(write_signal_csv(sig), sig.doc_id);
  o.check(read_signal_csv(write_signal_csv(back), sig.doc_id) == back, "signal CSV re-read differs");
  double worst = 0.0;
  for (std::size_t i = 0; i < sig.size(); ++i) worst = std::max(worst, std::abs(sig.values[i] - back.values[i]));
  o.check(worst <= 5e-7 && back.degenerate == sig.degenerate, "signal CSV lost more than rounding");

  // Golden outputs of every CLI command on the demo corpus.
  using namespace cohesion::cli;
  const fs::path golden = kSource / "tests" / "golden";
  Options lemma;
  lemma.mode = AnalysisMode::Lemmatized;
  lemma.lemmas = (demo / "lemmas_de.tsv").string();
  Options repair;
  repair.repair = true;
  const std::pair<std::string, std::function<CommandResult()>> commands[] = {
      {"analyze", [&] { return cmd_analyze(demo / "en.txt", Options{}); }},
      {"stats", [&] { return cmd_stats(demo / "de.txt", lemma); }},
      {"segment", [&] { return cmd_segment(demo / "en.txt", Options{}); }},
      {"compare", [&] { return cmd_compare(load_manifest(demo / "manifest.txt", repair), repair); }},
      {"correlate", [&] { return cmd_correlate(load_manifest(demo / "manifest.txt", Options{})); }},
      {"align", [&] { return cmd_align(demo / "en.txt", demo / "en_merged.txt", Options{}); }},
  };
  std::size_t files = 0;
  for (const auto& [dir, fn] : commands) {
    for (const auto& f : fn().files) {
      ++files;
      const fs::path p = golden / dir / f.name;
      o.check(fs::exists(p) && read_file(p.string()) == f.content, "golden mismatch: " + dir + "/" + f.name);
    }
  }
  if (o.pass) o.detail = "documents, alignment TSV, signal CSV, " + std::to_string(files) + " golden files";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {1, "bijection-translation fidelity", 5.0, bijection_fidelity},
      {2, "degradation ordering", 30.0, degradation_ordering},
      {3, "oracle equivalence, vectors", 0.0, vector_oracle},
      {4, "oracle equivalence, correlation", 0.0, correlation_oracle},
      {5, "exhaustive segmentation check", 60.0, exhaustive_segmentation},
      {6, "filter contracts", 0.0, filter_contracts},
      {7, "weak-distortion repair", 0.0, weak_distortion_repair},
      {8, "analysis-mode effect", 0.0, analysis_mode_effect},
      {9, "format round-trips", 0.0, format_round_trips},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string timing = fmt(secs, 2) + " s";
    if (c.limit_s > 0.0) {
      timing += " (limit " + fmt(c.limit_s, 0) + " s)";
      if (secs >= c.limit_s) {
        o.pass = false;
        o.detail += " over time limit";
      }
    }
    std::printf("%s criterion %d: %s: %s [%s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
