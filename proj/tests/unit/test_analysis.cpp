#include <random>

#include <gtest/gtest.h>

#include "cohesion/analysis.hpp"
#include "cohesion/error.hpp"
#include "oracle/oracle.hpp"

namespace cohesion {
namespace {

using Tokens = std::vector<std::string>;

Document doc_of(const std::vector<std::string>& texts) {
  Document d;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    d.segments.push_back({i, SegmentKind::Paragraph, texts[i], texts[i].size()});
  }
  return d;
}

TEST(Tokenize, StripsNumbersAndPunctuationAndLowercases) {
  EXPECT_EQ(tokenize("The bank's 3 Banks!"), (Tokens{"the", "bank's", "banks"}));
  EXPECT_EQ(tokenize("1987 2.5%"), Tokens{});
  EXPECT_EQ(tokenize(""), Tokens{});
}

// Expected values come from an independent implementation of the same rule
// over Python's unicodedata general categories (L*), frozen here.
TEST(Tokenize, UnicodeLettersMatchCategoryOracle) {
  EXPECT_EQ(tokenize("Öl-Preis stieg"), (Tokens{"öl-preis", "stieg"}));
  EXPECT_EQ(tokenize("Ça coûte 3,50 € l'unité!"), (Tokens{"ça", "coûte", "l'unité"}));
  EXPECT_EQ(tokenize("Straße—Ökonomie"), (Tokens{"straßeökonomie"}));
  EXPECT_EQ(tokenize("Δημοκρατία 2024 ΑΘΗΝΑ"), (Tokens{"δημοκρατία", "αθηνα"}));
  EXPECT_EQ(tokenize("«Überschuß» - 12-13 --x-- it’s"), (Tokens{"überschuß", "x", "it’s"}));
  EXPECT_EQ(tokenize("Ελλάδα ĲSSEL Ǆemal"), (Tokens{"ελλάδα", "ĳssel", "ǆemal"}));
}

TEST(Tokenize, OutputNeverHasUppercaseDigitsOrEmptyTokens) {
  std::mt19937_64 rng(3);
  const std::string alphabet = "abcXYZ019 .,-'!\t\nÄé";
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    const std::size_t len = rng() % 40;
    for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
    for (const auto& t : tokenize(s)) {
      ASSERT_FALSE(t.empty());
      for (char c : t) {
        ASSERT_FALSE(c >= 'A' && c <= 'Z') << t;
        ASSERT_FALSE(c >= '0' && c <= '9') << t;
      }
      ASSERT_NE(t.front(), '-');
      ASSERT_NE(t.back(), '\'');
    }
  }
}

TEST(Lemmatize, ReplacesKnownFormsOnly) {
  const LemmaTable table = load_lemma_table("banks\tbank\nran\trun");
  EXPECT_EQ(lemmatize({"banks", "ran", "xyzzy"}, table), (Tokens{"bank", "run", "xyzzy"}));
  EXPECT_EQ(lemmatize({}, table), Tokens{});
}

TEST(Lemmatize, IdempotentWhenLemmasAreFixedPointsOrExternal) {
  std::mt19937_64 rng(5);
  auto word = [&] { return std::string(1, static_cast<char>('a' + rng() % 12)) + static_cast<char>('a' + rng() % 3); };
  for (int trial = 0; trial < 200; ++trial) {
    // Forms are two letters; lemmas are either the form itself or a
    // three-letter 'z' word that never occurs as a form.
    std::string tsv;
    for (int e = 0; e < 15; ++e) {
      const std::string form = word();
      const std::string lemma = rng() % 3 == 0 ? form : "z" + word();
      tsv += form + "\t" + lemma + "\n";
    }
    const LemmaTable table = load_lemma_table(tsv);
    Tokens tokens;
    for (int t = 0; t < 20; ++t) tokens.push_back(rng() % 5 == 0 ? "z" + word() : word());
    const Tokens once = lemmatize(tokens, table);
    EXPECT_EQ(once.size(), tokens.size());
    EXPECT_EQ(lemmatize(once, table), once);
  }
}

TEST(CharNgrams, HandEnumeratedWindows) {
  EXPECT_EQ(char_ngrams({"bank"}, 3), (TermCounts{{"_ba", 1}, {"ban", 1}, {"ank", 1}, {"nk_", 1}}));
  EXPECT_EQ(char_ngrams({"a"}, 3), (TermCounts{{"_a_", 1}}));
  EXPECT_EQ(char_ngrams({"ab", "ab"}, 3), (TermCounts{{"_ab", 2}, {"ab_", 2}}));
  EXPECT_EQ(char_ngrams({"a"}, 5), (TermCounts{{"_a_", 1}}));
  EXPECT_EQ(char_ngrams({"öl"}, 2, U'#'), (TermCounts{{"#ö", 1}, {"öl", 1}, {"l#", 1}}));
  EXPECT_THROW(char_ngrams({"x"}, 1), Error);
  EXPECT_THROW(char_ngrams({"x"}, 9), Error);
}

TEST(CharNgrams, MatchesBruteForceEnumeratorAndWindowCount) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<int>(2 + rng() % 7);
    Tokens tokens;
    std::size_t expected_total = 0;
    const std::size_t count = 1 + rng() % 5;
    for (std::size_t t = 0; t < count; ++t) {
      std::string tok(1 + rng() % 10, 'a');
      for (char& c : tok) c = static_cast<char>('a' + rng() % 4);
      const std::size_t len = tok.size();
      expected_total += len + 2 >= static_cast<std::size_t>(n) ? len - static_cast<std::size_t>(n) + 3 : 1;
      tokens.push_back(std::move(tok));
    }
    const TermCounts got = char_ngrams(tokens, n);
    const auto want = oracle::ascii_ngrams(tokens, static_cast<std::size_t>(n));
    ASSERT_EQ(got.size(), want.size());
    std::size_t total = 0;
    for (const auto& [term, c] : got) {
      ASSERT_EQ(want.at(term), c) << term;
      total += c;
    }
    EXPECT_EQ(total, expected_total);
  }
}

TEST(Stoplist, FiltersTokensAndTerms) {
  const Stoplist stop = load_stoplist("the\nof\n");
  EXPECT_EQ(apply_stoplist(Tokens{"the", "bank", "of", "issue"}, stop), (Tokens{"bank", "issue"}));
  EXPECT_EQ(apply_stoplist(Tokens{"the", "bank"}, Stoplist{}), (Tokens{"the", "bank"}));
  EXPECT_EQ(apply_stoplist(Tokens{"the", "of", "the"}, stop), Tokens{});
  EXPECT_EQ(apply_stoplist(TermCounts{{"of", 2}, {"rate", 1}}, stop), (TermCounts{{"rate", 1}}));
}

TEST(AnalysisConfig, Validation) {
  AnalysisConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.mode = AnalysisMode::Lemmatized;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.lemma_table = std::make_shared<LemmaTable>();
  EXPECT_NO_THROW(cfg.validate());
  cfg.mode = AnalysisMode::CharNgram;
  cfg.n = 1;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.n = 3;
  cfg.use_stoplist = true;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(AnalyzeDocument, SurfaceCounts) {
  const auto out = analyze_document(doc_of({"bank bank loan", "loan rate"}), AnalysisConfig{});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].terms, (TermCounts{{"bank", 2}, {"loan", 1}}));
  EXPECT_EQ(out[1].terms, (TermCounts{{"loan", 1}, {"rate", 1}}));
  EXPECT_EQ(out[0].token_count, 3u);
}

TEST(AnalyzeDocument, TrigramCounts) {
  AnalysisConfig cfg;
  cfg.mode = AnalysisMode::CharNgram;
  const auto out = analyze_document(doc_of({"bank bank loan", "loan rate"}), cfg);
  const TermCounts want = {{"_ba", 2}, {"ban", 2}, {"ank", 2}, {"nk_", 2},
                           {"_lo", 1}, {"loa", 1}, {"oan", 1}, {"an_", 1}};
  EXPECT_EQ(out[0].terms, want);
}

TEST(AnalyzeDocument, NumericSegmentIsEmpty) {
  const auto out = analyze_document(doc_of({"bank rate", "1987 2.5%", "rate"}), AnalysisConfig{});
  EXPECT_TRUE(out[1].terms.empty());
  EXPECT_EQ(out[1].token_count, 0u);
  EXPECT_EQ(out[1].index, 1u);
}

TEST(AnalyzeDocument, StoplistAppliesBeforeNgramExpansion) {
  AnalysisConfig cfg;
  cfg.mode = AnalysisMode::CharNgram;
  cfg.use_stoplist = true;
  cfg.stoplist = std::make_shared<Stoplist>(load_stoplist("the\n"));
  const auto out = analyze_document(doc_of({"the bank", "x"}), cfg);
  EXPECT_FALSE(out[0].terms.contains("the"));
  EXPECT_FALSE(out[0].terms.contains("_th"));
  EXPECT_EQ(out[0].token_count, 2u);
}

TEST(AnalyzeDocument, SurfaceCountsSumToTokenCount) {
  const auto out = analyze_document(doc_of({"A b, a! B-c d's 12", "x"}), AnalysisConfig{});
  std::size_t sum = 0;
  for (const auto& [t, c] : out[0].terms) sum += c;
  EXPECT_EQ(sum, out[0].token_count);
}

TEST(CorpusStats, CountsTokensAndTypes) {
  const Document d = doc_of({"a b a", "b c"});
  const CorpusStats s = corpus_stats(d, AnalysisConfig{});
  EXPECT_EQ(s.tokens, 5u);
  EXPECT_EQ(s.surface_types, 3u);
  EXPECT_EQ(s.analyzed_types, 3u);

  AnalysisConfig lem;
  lem.mode = AnalysisMode::Lemmatized;
  lem.lemma_table = std::make_shared<LemmaTable>(load_lemma_table("b\ta\n"));
  const CorpusStats l = corpus_stats(d, lem);
  EXPECT_EQ(l.tokens, 5u);
  EXPECT_EQ(l.surface_types, 3u);
  EXPECT_EQ(l.analyzed_types, 2u);
}

TEST(CorpusStats, LemmatizationNeverSplitsTypes) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> texts;
    for (int s = 0; s < 4; ++s) {
      std::string t;
      for (int w = 0; w < 10; ++w) t += std::string(1, static_cast<char>('a' + rng() % 8)) + " ";
      texts.push_back(t);
    }
    std::string tsv;
    for (int e = 0; e < 5; ++e) {
      tsv += std::string(1, static_cast<char>('a' + rng() % 8)) + "\t" +
             std::string(1, static_cast<char>('a' + rng() % 8)) + "\n";
    }
    AnalysisConfig lem;
    lem.mode = AnalysisMode::Lemmatized;
    lem.lemma_table = std::make_shared<LemmaTable>(load_lemma_table(tsv));
    const CorpusStats s = corpus_stats(doc_of(texts), lem);
    EXPECT_LE(s.analyzed_types, s.surface_types);
  }
}

TEST(AnalyzeDocument, Deterministic) {
  AnalysisConfig cfg;
  cfg.mode = AnalysisMode::CharNgram;
  const Document d = doc_of({"Öl-Preis stieg stark", "the bank's 3 banks", "loan"});
  const auto a = analyze_document(d, cfg);
  const auto b = analyze_document(d, cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].terms, b[i].terms);
}

}  // namespace
}  // namespace cohesion
