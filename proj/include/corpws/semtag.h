#ifndef CORPWS_SEMTAG_H_
#define CORPWS_SEMTAG_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "corpws/cg.h"
#include "corpws/tagset.h"

namespace corpws {

inline constexpr std::string_view kUnmatchedField = "Z99";

struct SemEntry {
  std::string lemma;
  std::optional<BasicCat> basic;
  std::vector<std::string> fields;  // most likely first
};

struct MweEntry {
  std::vector<std::string> pattern;  // lemmas; "*" matches any one lemma
  std::string field;
};

struct InflectionRow {
  std::string surface;
  std::string lemma;
};

struct MweMatch {
  std::size_t start = 0;  // 1-based position of the first token
  std::size_t length = 0;
  std::string field;

  bool operator==(const MweMatch&) const = default;
};

// Non-overlapping matches scanned left to right, longest pattern first at
// each start (earlier file order breaks ties). Comparison is case-folded.
std::vector<MweMatch> mwe_match(const std::vector<std::string>& lemmas,
                                const std::vector<MweEntry>& entries);

struct SemTaggedToken {
  TaggedToken token;
  std::string field;
};

class SemTagger {
 public:
  SemTagger(std::vector<SemEntry> entries, std::vector<MweEntry> mwes,
            std::vector<InflectionRow> inflections);

  // lemma<TAB>basic_or_-<TAB>field1,field2 ; lemma1 lemma2<TAB>field ;
  // surface<TAB>lemma. '#' comments in all three.
  static SemTagger load(const std::string& lexicon_path, const std::string& mwe_path,
                        const std::string& inflection_path);
  static SemTagger load_dir(const std::string& sem_dir);

  std::vector<SemTaggedToken> sem_tag(const std::vector<TaggedToken>& sentence) const;

  // Single-word field: (lemma, basic), then lemma alone, then the inflection
  // table via the surface form; Z99 when nothing matches.
  std::string word_field(std::string_view surface, std::string_view lemma,
                         BasicCat basic) const;

  const std::vector<MweEntry>& mwes() const { return mwes_; }
  SemTagger without_mwes() const;

 private:
  const SemEntry* find(std::string_view lemma, BasicCat basic) const;

  std::vector<SemEntry> entries_;
  std::vector<MweEntry> mwes_;
  std::vector<InflectionRow> inflections_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_lemma_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_folded_lemma_;
  std::unordered_map<std::string, std::string> inflection_lemma_;
};

}  // namespace corpws

#endif  // CORPWS_SEMTAG_H_
