#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cohesion/corpusio.hpp"

// Synthetic parallel corpora. A language-neutral "abstract" document (topic
// blocks of lemma ids with inflection slots) is realized into one or more
// languages, each with its own pseudo-word lexicon and suffix inventory.
// Everything is driven by explicit seeds and a fixed-width engine, so the
// output is identical across platforms and standard libraries.
namespace cohesion::synth {

struct CorpusParams {
  std::size_t segments = 484;
  std::size_t background_lemmas = 400;
  std::size_t lemmas_per_topic = 60;
  std::size_t min_topic_paragraphs = 6;
  std::size_t max_topic_paragraphs = 36;
  std::size_t min_sentences = 2;
  std::size_t max_sentences = 5;
  std::size_t min_words = 6;
  std::size_t max_words = 16;
  double topic_word_rate = 0.5;
};

struct AbstractToken {
  std::uint32_t lemma = 0;
  std::uint8_t inflection = 0;
};

struct AbstractSegment {
  bool heading = false;
  std::vector<std::vector<AbstractToken>> sentences;
};

struct AbstractDocument {
  std::vector<AbstractSegment> segments;
  std::size_t lemma_count = 0;
  /// Index of the first segment of every topic block, ascending.
  std::vector<std::size_t> topic_starts;
};

AbstractDocument generate_abstract(const CorpusParams& params, std::uint64_t seed);

struct Language {
  std::string tag;
  /// Citation form per lemma id.
  std::vector<std::string> stems;
  /// An unrelated alternative word per lemma id, used for synonym noise.
  std::vector<std::string> synonyms;
  /// Inflection suffixes; index 0 is the citation form ("").
  std::vector<std::string> suffixes;
};

/// Builds a lexicon of `lemma_count` distinct pseudo-words from a
/// tag-specific syllable inventory.
Language make_language(const std::string& tag, std::size_t lemma_count, std::uint64_t seed);

struct RealizeOptions {
  /// When non-zero, inflection slots are redrawn with this seed instead of
  /// using the abstract document's choices (morphology that differs
  /// between source and translation).
  std::uint64_t inflection_seed = 0;
  /// Probability that an occurrence of a lemma is rendered by its
  /// per-lemma synonym instead.
  double synonym_rate = 0.0;
  double drop_rate = 0.0;
  std::uint64_t noise_seed = 1;
};

Document realize(const AbstractDocument& abstract, const Language& language,
                 const RealizeOptions& options = {}, std::string id = {});

/// Every inflected form of every stem mapped to the stem. Forms produced by
/// two different stems are ambiguous and left out, as load_lemma_table would.
LemmaTable lemma_table_for(const Language& language);
std::string write_lemma_tsv(const Language& language);

/// Applies a seeded permutation of a-z (and the matching uppercase letters).
/// A letter cipher is a vocabulary bijection that also maps character
/// n-grams one-to-one.
Document substitute_letters(const Document& doc, std::uint64_t seed);

/// Replaces every distinct lowercase word by a distinct fresh pseudo-word.
Document rename_vocabulary(const Document& doc, std::uint64_t seed);

/// Replaces a `fraction` of the word tokens by fresh tokens that occur
/// nowhere else.
Document replace_tokens(const Document& doc, double fraction, std::uint64_t seed);

/// Document made of consecutive blocks; every paragraph of block k draws
/// words only from vocabularies[k].
Document topic_blocks(const std::vector<std::vector<std::string>>& vocabularies,
                      std::size_t paragraphs_per_block, std::size_t words_per_paragraph,
                      std::uint64_t seed);

}  // namespace cohesion::synth
