#include "cohesion/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cohesion/error.hpp"
#include "cohesion/text.hpp"

namespace cohesion::synth {

namespace {

// mt19937_64 is fully specified by the standard; the distributions are not,
// so draws are mapped to ranges by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + index(hi - lo + 1); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Zipf-like sampler over ranks 0..n-1 with weight 1 / (rank + 1).
class Zipf {
 public:
  explicit Zipf(std::size_t n) : cumulative_(n) {
    double acc = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      acc += 1.0 / static_cast<double>(r + 1);
      cumulative_[r] = acc;
    }
  }

  std::size_t draw(Rng& rng) const {
    const double u = rng.unit() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                                 cumulative_.size() - 1);
  }

 private:
  std::vector<double> cumulative_;
};

struct Inventory {
  std::vector<std::string> onsets;
  std::vector<std::string> nuclei;
  std::vector<std::string> codas;
  std::vector<std::string> suffixes;
};

Inventory inventory_for(const std::string& tag) {
  if (tag == "de") {
    return {{"b", "d", "f", "g", "h", "k", "l", "m", "n", "p", "r", "s", "t", "w", "z", "sch", "st",
             "kr", "pf", "br", "gr", "fl"},
            {"a", "e", "i", "o", "u", "au", "ei", "ie", "ä", "ö", "ü"},
            {"", "", "n", "r", "t", "ch", "ng", "nk", "st", "ff", "tz", "rm"},
            {"", "e", "en", "er", "es", "s"}};
  }
  if (tag == "fr") {
    return {{"b", "c", "d", "f", "g", "l", "m", "n", "p", "r", "s", "t", "v", "j", "qu", "gr", "ch",
             "pr", "tr", "cl"},
            {"a", "e", "i", "o", "u", "ou", "eau", "ai", "é", "è", "oi"},
            {"", "", "", "n", "r", "s", "l", "nt", "rd", "x"},
            {"", "s", "e", "es", "ent"}};
  }
  return {{"b", "c", "d", "f", "g", "h", "l", "m", "n", "p", "r", "s", "t", "w", "st", "tr", "pl",
           "gr", "br", "ch", "sh", "th"},
          {"a", "e", "i", "o", "u", "ea", "oo", "ai", "ou"},
          {"", "", "n", "r", "t", "s", "nd", "ck", "ll", "st", "m", "rk"},
          {"", "s", "ed", "ing", "er"}};
}

std::string pseudo_word(const Inventory& inv, Rng& rng) {
  const std::size_t syllables = rng.chance(0.55) ? 2 : (rng.chance(0.7) ? 3 : 1);
  std::string w;
  for (std::size_t s = 0; s < syllables; ++s) {
    w += inv.onsets[rng.index(inv.onsets.size())];
    w += inv.nuclei[rng.index(inv.nuclei.size())];
    w += inv.codas[rng.index(inv.codas.size())];
  }
  return w;
}

std::string random_letters(Rng& rng, std::size_t lo, std::size_t hi) {
  std::string w(rng.between(lo, hi), 'a');
  for (char& c : w) c = static_cast<char>('a' + rng.index(26));
  return w;
}

void capitalize(std::string& s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
}

bool is_word_byte(unsigned char c) { return std::isalpha(c) || c >= 0x80; }

std::string ascii_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Rewrites every maximal run of word bytes through `map_word`, which receives
// the lowercased run and returns its replacement. A capitalized first letter
// is carried over.
template <typename F>
Document rewrite_words(const Document& doc, F&& map_word) {
  Document out = doc;
  for (auto& seg : out.segments) {
    std::string rewritten;
    const std::string& t = seg.text;
    std::size_t i = 0;
    while (i < t.size()) {
      if (!is_word_byte(static_cast<unsigned char>(t[i]))) {
        rewritten += t[i++];
        continue;
      }
      std::size_t j = i;
      while (j < t.size() && is_word_byte(static_cast<unsigned char>(t[j]))) ++j;
      const std::string word = t.substr(i, j - i);
      std::string replacement = map_word(ascii_lower(word));
      if (std::isupper(static_cast<unsigned char>(word[0]))) capitalize(replacement);
      rewritten += replacement;
      i = j;
    }
    seg.text = std::move(rewritten);
    seg.char_length = text::length(seg.text);
  }
  return out;
}

std::unordered_set<std::string> word_types(const Document& doc) {
  std::unordered_set<std::string> types;
  for (const auto& seg : doc.segments) {
    const std::string& t = seg.text;
    for (std::size_t i = 0; i < t.size();) {
      if (!is_word_byte(static_cast<unsigned char>(t[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < t.size() && is_word_byte(static_cast<unsigned char>(t[j]))) ++j;
      types.insert(ascii_lower(t.substr(i, j - i)));
      i = j;
    }
  }
  return types;
}

}  // namespace

AbstractDocument generate_abstract(const CorpusParams& params, std::uint64_t seed) {
  if (params.segments < 2) throw Error(ErrorCode::Config, "synthetic corpus needs >= 2 segments");
  Rng rng(seed);
  const Zipf background(params.background_lemmas);
  const Zipf topical(params.lemmas_per_topic);

  AbstractDocument doc;
  std::size_t topic = 0;
  while (doc.segments.size() < params.segments) {
    const auto topic_base = static_cast<std::uint32_t>(params.background_lemmas + topic * params.lemmas_per_topic);
    auto draw = [&](bool topical_word) {
      AbstractToken tok;
      tok.lemma = topical_word ? topic_base + static_cast<std::uint32_t>(topical.draw(rng))
                               : static_cast<std::uint32_t>(background.draw(rng));
      tok.inflection = rng.chance(0.5) ? 0 : static_cast<std::uint8_t>(rng.between(1, 60));
      return tok;
    };

    doc.topic_starts.push_back(doc.segments.size());
    AbstractSegment heading;
    heading.heading = true;
    heading.sentences.emplace_back();
    const std::size_t heading_words = rng.between(2, 4);
    for (std::size_t w = 0; w < heading_words; ++w) heading.sentences.back().push_back(draw(true));
    doc.segments.push_back(std::move(heading));

    const std::size_t paragraphs = rng.between(params.min_topic_paragraphs, params.max_topic_paragraphs);
    for (std::size_t p = 0; p < paragraphs && doc.segments.size() < params.segments; ++p) {
      AbstractSegment para;
      const std::size_t sentences = rng.between(params.min_sentences, params.max_sentences);
      for (std::size_t s = 0; s < sentences; ++s) {
        std::vector<AbstractToken> sentence;
        const std::size_t words = rng.between(params.min_words, params.max_words);
        for (std::size_t w = 0; w < words; ++w) sentence.push_back(draw(rng.chance(params.topic_word_rate)));
        para.sentences.push_back(std::move(sentence));
      }
      doc.segments.push_back(std::move(para));
    }
    ++topic;
  }
  doc.lemma_count = params.background_lemmas + topic * params.lemmas_per_topic;
  return doc;
}

Language make_language(const std::string& tag, std::size_t lemma_count, std::uint64_t seed) {
  const Inventory inv = inventory_for(tag);
  Rng rng(seed);
  Language lang;
  lang.tag = tag;
  lang.suffixes = inv.suffixes;
  std::set<std::string> used;
  auto fresh = [&] {
    for (;;) {
      std::string w = pseudo_word(inv, rng);
      if (text::length(w) >= 3 && used.insert(w).second) return w;
    }
  };
  for (std::size_t i = 0; i < lemma_count; ++i) lang.stems.push_back(fresh());
  for (std::size_t i = 0; i < lemma_count; ++i) lang.synonyms.push_back(fresh());
  return lang;
}

Document realize(const AbstractDocument& abstract, const Language& language,
                 const RealizeOptions& options, std::string id) {
  if (language.stems.size() < abstract.lemma_count) {
    throw Error(ErrorCode::Config, "language '" + language.tag + "' has too few stems");
  }
  Rng inflections(options.inflection_seed);
  Rng noise(options.noise_seed);
  const std::size_t inflected_forms = language.suffixes.size() - 1;

  auto render = [&](const AbstractToken& tok) {
    const bool synonym = options.synonym_rate > 0.0 && noise.chance(options.synonym_rate);
    std::string word = synonym ? language.synonyms[tok.lemma] : language.stems[tok.lemma];
    std::size_t slot = tok.inflection;
    if (options.inflection_seed != 0) {
      slot = inflections.chance(0.5) ? 0 : inflections.between(1, 60);
    }
    if (slot != 0 && inflected_forms > 0) word += language.suffixes[1 + (slot - 1) % inflected_forms];
    return word;
  };

  Document doc;
  doc.id = std::move(id);
  doc.language = language.tag;
  for (const auto& seg : abstract.segments) {
    Segment out;
    out.index = doc.segments.size();
    out.kind = seg.heading ? SegmentKind::Heading : SegmentKind::Paragraph;
    for (const auto& sentence : seg.sentences) {
      std::vector<std::string> words;
      for (const auto& tok : sentence) {
        if (options.drop_rate > 0.0 && noise.chance(options.drop_rate)) continue;
        words.push_back(render(tok));
      }
      if (words.empty()) words.push_back(render(sentence.front()));
      capitalize(words.front());
      if (!out.text.empty()) out.text += ' ';
      for (std::size_t w = 0; w < words.size(); ++w) {
        if (w > 0) out.text += ' ';
        out.text += words[w];
      }
      if (!seg.heading) out.text += '.';
    }
    out.char_length = text::length(out.text);
    doc.segments.push_back(std::move(out));
  }
  return doc;
}

std::string write_lemma_tsv(const Language& language) {
  std::string out = "# form\tlemma (" + language.tag + ")\n";
  auto emit = [&](const std::string& stem) {
    for (const auto& suffix : language.suffixes) out += stem + suffix + '\t' + stem + '\n';
  };
  for (const auto& s : language.stems) emit(s);
  for (const auto& s : language.synonyms) emit(s);
  return out;
}

LemmaTable lemma_table_for(const Language& language) {
  return load_lemma_table(write_lemma_tsv(language));
}

Document substitute_letters(const Document& doc, std::uint64_t seed) {
  Rng rng(seed);
  std::array<char, 26> perm;
  for (int i = 0; i < 26; ++i) perm[static_cast<std::size_t>(i)] = static_cast<char>('a' + i);
  for (std::size_t i = 25; i > 0; --i) std::swap(perm[i], perm[rng.index(i + 1)]);

  Document out = doc;
  for (auto& seg : out.segments) {
    for (char& c : seg.text) {
      if (c >= 'a' && c <= 'z') {
        c = perm[static_cast<std::size_t>(c - 'a')];
      } else if (c >= 'A' && c <= 'Z') {
        c = static_cast<char>(perm[static_cast<std::size_t>(c - 'A')] - 'a' + 'A');
      }
    }
  }
  return out;
}

Document rename_vocabulary(const Document& doc, std::uint64_t seed) {
  Rng rng(seed);
  auto taken = word_types(doc);
  std::unordered_map<std::string, std::string> mapping;
  return rewrite_words(doc, [&](const std::string& w) {
    auto it = mapping.find(w);
    if (it != mapping.end()) return it->second;
    std::string fresh;
    do {
      fresh = random_letters(rng, 4, 10);
    } while (!taken.insert(fresh).second);
    mapping.emplace(w, fresh);
    return fresh;
  });
}

Document replace_tokens(const Document& doc, double fraction, std::uint64_t seed) {
  Rng rng(seed);
  auto taken = word_types(doc);
  return rewrite_words(doc, [&](const std::string& w) {
    if (!rng.chance(fraction)) return w;
    std::string fresh;
    do {
      fresh = random_letters(rng, 6, 10);
    } while (!taken.insert(fresh).second);
    return fresh;
  });
}

Document topic_blocks(const std::vector<std::vector<std::string>>& vocabularies,
                      std::size_t paragraphs_per_block, std::size_t words_per_paragraph,
                      std::uint64_t seed) {
  Rng rng(seed);
  Document doc;
  doc.id = "blocks";
  for (const auto& vocab : vocabularies) {
    if (vocab.empty()) throw Error(ErrorCode::Config, "empty block vocabulary");
    for (std::size_t p = 0; p < paragraphs_per_block; ++p) {
      Segment seg;
      seg.index = doc.segments.size();
      // Cycle through the block vocabulary in a fresh shuffled order each
      // round, so word counts per paragraph differ by at most one.
      std::vector<std::size_t> order(vocab.size());
      for (std::size_t w = 0; w < words_per_paragraph; ++w) {
        if (w % order.size() == 0) {
          for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
          for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
        }
        if (w > 0) seg.text += ' ';
        seg.text += vocab[order[w % order.size()]];
      }
      seg.text += '.';
      seg.char_length = text::length(seg.text);
      doc.segments.push_back(std::move(seg));
    }
  }
  return doc;
}

}  // namespace cohesion::synth
