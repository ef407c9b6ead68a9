#ifndef CORPWS_TESTS_SUPPORT_H_
#define CORPWS_TESTS_SUPPORT_H_

#include <memory>
#include <string>
#include <vector>

#include "corpws/cg.h"
#include "corpws/corpus.h"
#include "corpws/rng.h"
#include "corpws/text.h"

namespace corpws::testing {

inline std::string data_dir() { return CORPWS_DATA_DIR; }
inline std::string data_path(const std::string& rel) { return data_dir() + "/" + rel; }

inline const Tagset& bundled_tagset() {
  static const Tagset t = Tagset::load(data_path("tagset.tsv"));
  return t;
}

inline const Tagger& bundled_tagger() {
  static const Tagger t = Tagger::load(TaggerPaths::in(data_dir()));
  return t;
}

inline const Pipeline& bundled_pipeline() {
  static const Pipeline p = Pipeline::load(data_dir());
  return p;
}

inline std::vector<Document> fixture_corpus() {
  return load_manifest(data_path("corpus/manifest.tsv"));
}

inline DocMeta meta(std::string id, std::string genre = "book", bool sensitive = false) {
  DocMeta m;
  m.id = std::move(id);
  m.language_type = LanguageType::kWritten;
  m.genre = std::move(genre);
  m.sensitive = sensitive;
  return m;
}

// Builds a document from whitespace-separated tokens; "." ends a sentence.
// Lemma is the lowercased token and every token is a singular noun unless it
// is punctuation.
inline Document simple_doc(const std::string& id, const std::string& body,
                           const std::string& genre = "book", bool sensitive = false) {
  Document doc;
  doc.meta = meta(id, genre, sensitive);
  std::vector<AnnotatedToken> sentence;
  for (const std::string& raw : text::split(body, ' ')) {
    if (raw.empty()) continue;
    AnnotatedToken t;
    t.text = raw;
    t.sentence = static_cast<int>(doc.sentences.size()) + 1;
    t.position = static_cast<int>(sentence.size()) + 1;
    const bool punct = !text::starts_with_letter(raw);
    t.analysis.lemma = text::fold_case(raw);
    t.analysis.basic = punct ? BasicCat::kAtd : BasicCat::kE;
    t.analysis.rich = punct ? "Atdt" : "Egu";
    t.sem = punct ? "Z99" : "Z1";
    sentence.push_back(std::move(t));
    if (raw == ".") {
      doc.sentences.push_back(std::move(sentence));
      sentence.clear();
    }
  }
  if (!sentence.empty()) doc.sentences.push_back(std::move(sentence));
  return doc;
}

// Seeded random corpus with mixed case, non-ASCII letters, clitics, digits
// and punctuation, spread over several genres and both sensitivities.
inline std::vector<Document> random_corpus(std::uint64_t seed, std::size_t docs,
                                           std::size_t tokens_per_doc) {
  static const std::vector<std::string> kWords = {
      "mae", "Mae", "y", "yr", "cath", "gath", "ci", "tŷ", "Tŷ", "ŵyn", "Ŵyn", "gwlad",
      "wlad", "da", "dda", "bod", "yn", "Yn", "i", "o", "ar", "a", "ac", "plant", "Cymru",
      "caerdydd", "llyfr", "lyfr", "hen", "newydd", "mawr", "fawr", "bach", "fach",
      "ysgol", "tref", "dref", "canu", "mynd", "Aeth", "aeth", "heddiw", "iawn", "pob"};
  static const std::vector<std::string> kNonWords = {"'n", "'r", ".", ",", "3", "2024", "!",
                                                     "?", "(", ")"};
  static const std::vector<std::string> kGenres = {"book", "magazine", "letter", "thesis"};
  static const std::vector<std::string> kRich = {"Egu", "Ebu", "Anscadu", "Bpres3u",
                                                 "Arsym", "Utra", "Bandb"};
  static const std::vector<std::string> kSem = {"Z5", "A3+", "M7", "L2", "Z99"};
  Rng rng(seed);
  std::vector<Document> out;
  for (std::size_t d = 0; d < docs; ++d) {
    Document doc;
    doc.meta = meta("doc" + std::to_string(d), kGenres[rng.below(kGenres.size())],
                    rng.below(5) == 0);
    std::size_t produced = 0;
    while (produced < tokens_per_doc) {
      std::vector<AnnotatedToken> sentence;
      const std::size_t len = 1 + rng.below(14);
      for (std::size_t i = 0; i < len; ++i) {
        AnnotatedToken t;
        // Skewed draw so that some words are frequent.
        const bool word = rng.below(6) != 0;
        if (word) {
          const std::size_t a = rng.below(kWords.size());
          const std::size_t b = rng.below(kWords.size());
          t.text = kWords[std::min(a, b)];
        } else {
          t.text = kNonWords[rng.below(kNonWords.size())];
        }
        t.sentence = static_cast<int>(doc.sentences.size()) + 1;
        t.position = static_cast<int>(i) + 1;
        t.analysis.lemma = text::fold_case(t.text).substr(0, 3);
        const std::string& rich = kRich[rng.below(kRich.size())];
        t.analysis.rich = rich;
        t.analysis.basic = bundled_tagset().basic_of(rich);
        t.analysis.mutation = static_cast<MutationKind>(rng.below(4));
        t.sem = kSem[rng.below(kSem.size())];
        sentence.push_back(std::move(t));
      }
      produced += sentence.size();
      doc.sentences.push_back(std::move(sentence));
    }
    out.push_back(std::move(doc));
  }
  return out;
}

}  // namespace corpws::testing

#endif  // CORPWS_TESTS_SUPPORT_H_
