#ifndef CORPWS_LEXICON_H_
#define CORPWS_LEXICON_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "corpws/tagset.h"

namespace corpws {

enum class MutationKind { kNone, kSoft, kNasal, kAspirate };

// Serialized as "-", "sm", "nm", "am".
std::string_view to_string(MutationKind kind);
std::optional<MutationKind> parse_mutation(std::string_view code);

struct LexEntry {
  std::string surface;
  std::string lemma;
  std::string rich_tag;
  BasicCat basic = BasicCat::kGw;
  std::uint64_t frequency = 0;

  bool operator==(const LexEntry&) const = default;
};

struct Analysis {
  std::string lemma;
  BasicCat basic = BasicCat::kGw;
  std::string rich;
  MutationKind mutation = MutationKind::kNone;

  bool operator==(const Analysis&) const = default;
};

struct MutationCandidate {
  std::string base;
  MutationKind kind = MutationKind::kNone;

  bool operator==(const MutationCandidate&) const = default;
};

// Mutates the initial consonant of `base`. Initials that the given mutation
// does not affect are returned unchanged. Capitalisation of the first letter
// is preserved.
std::string apply_mutation(std::string_view base, MutationKind kind);

// Every string-level inverse of the mutation table, starting with
// (surface, none). Uppercase-initial surfaces also yield the candidates of
// their lowercase-initial variant. No lexicon filtering happens here.
std::vector<MutationCandidate> demutate(std::string_view surface);

class Lexicon {
 public:
  Lexicon(std::vector<LexEntry> entries, std::unordered_set<std::string> english,
          const Tagset& tagset);

  // Lexicon TSV: surface<TAB>lemma<TAB>rich_tag<TAB>frequency, '#' comments.
  // English list: one lowercase word per line.
  static Lexicon load(const std::string& lexicon_path,
                      const std::string& english_path, const Tagset& tagset);
  static std::vector<LexEntry> parse_entries(std::string_view contents,
                                             const Tagset& tagset);

  // Candidate analyses ordered by descending entry frequency, then file order.
  // Empty when nothing matches.
  std::vector<Analysis> lookup(std::string_view surface) const;

  bool is_english(std::string_view surface) const;

  const std::vector<LexEntry>& entries() const { return entries_; }
  const std::unordered_set<std::string>& english() const { return english_; }

 private:
  void collect(std::string_view surface,
               std::vector<std::pair<std::size_t, MutationKind>>& hits) const;

  std::vector<LexEntry> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_surface_;
  std::unordered_set<std::string> english_;
};

}  // namespace corpws

#endif  // CORPWS_LEXICON_H_
