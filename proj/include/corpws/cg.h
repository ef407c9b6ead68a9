#ifndef CORPWS_CG_H_
#define CORPWS_CG_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corpws/lexicon.h"
#include "corpws/segmenter.h"
#include "corpws/tagset.h"

namespace corpws {

enum class CgAction { kSelect, kRemove };

// What a rule selects or removes among the target token's candidates.
struct TagPattern {
  enum class Kind { kRich, kBasic, kMutation };
  Kind kind = Kind::kRich;
  std::string rich;
  BasicCat basic = BasicCat::kGw;
  MutationKind mutation = MutationKind::kNone;

  bool matches(const Analysis& a) const;
  bool operator==(const TagPattern&) const = default;
};

struct ContextTest {
  enum class Kind { kToken, kLemma, kBasic, kRich, kMutation, kUnknown, kBos, kEos };
  int offset = 0;
  // Scan from `offset` away from the target to the sentence edge; the test
  // holds if any visited token satisfies it.
  bool scan = false;
  Kind kind = Kind::kToken;
  std::string value;  // TOKEN/LEMMA/RICH argument
  BasicCat basic = BasicCat::kGw;
  MutationKind mutation = MutationKind::kNone;
  bool negated = false;

  bool operator==(const ContextTest&) const = default;
};

struct CgRule {
  CgAction action = CgAction::kSelect;
  TagPattern target;
  std::vector<ContextTest> contexts;
  std::string name;

  bool operator==(const CgRule&) const = default;
};

// Rule DSL, one statement per ';':
//   SELECT:name (Utra) IF (-1 LEMMA "bod") (1 MUT sm) (NOT *1 BASIC E) ;
// Targets: a rich tag, BASIC=x or MUT=k. Tests: TOKEN "..." (case-insensitive),
// LEMMA "...", BASIC x, RICH x, MUT k, UNKNOWN, BOS, EOS. '#' starts a comment.
std::vector<CgRule> parse_rules(std::string_view source, const Tagset& tagset);
std::vector<CgRule> load_rules(const std::string& path, const Tagset& tagset);

struct TaggedToken {
  Token token;
  std::vector<Analysis> candidates;
  std::optional<Analysis> resolved;
};

// Applies rules in order, sweeping the sentence until a full pass changes
// nothing. An application that would leave a token with no candidates is
// skipped. Afterwards each token resolves to its first remaining candidate.
std::vector<TaggedToken> apply_constraints(std::vector<TaggedToken> sentence,
                                           const std::vector<CgRule>& rules);

struct TaggerPaths {
  std::string tagset;
  std::string lexicon;
  std::string english;
  std::string abbreviations;
  std::string rules;

  // Bundled fixture files under `data_dir`.
  static TaggerPaths in(const std::string& data_dir);
};

class Tagger {
 public:
  Tagger(Tagset tagset, Lexicon lexicon, Segmenter segmenter,
         std::vector<CgRule> rules);
  static Tagger load(const TaggerPaths& paths);

  TaggedToken candidates_for(const Token& token) const;
  std::vector<std::vector<TaggedToken>> tag(std::string_view text) const;
  std::vector<TaggedToken> tag_sentence(const Sentence& sentence) const;

  const Tagset& tagset() const { return tagset_; }
  const Lexicon& lexicon() const { return lexicon_; }
  const Segmenter& segmenter() const { return segmenter_; }
  const std::vector<CgRule>& rules() const { return rules_; }

 private:
  Analysis special_analysis(const std::string& text) const;

  Tagset tagset_;
  Lexicon lexicon_;
  Segmenter segmenter_;
  std::vector<CgRule> rules_;
};

// Tab-separated table: ID TOKEN POSITION LEMMA BASIC RICH MUTATION, with a
// header line and IDs running across sentences.
std::string format_tag_table(const std::vector<std::vector<TaggedToken>>& sentences);

}  // namespace corpws

#endif  // CORPWS_CG_H_
