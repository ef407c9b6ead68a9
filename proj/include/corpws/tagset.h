#ifndef CORPWS_TAGSET_H_
#define CORPWS_TAGSET_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace corpws {

// The 13 basic part-of-speech categories.
enum class BasicCat {
  kE,      // noun
  kAns,    // adjective
  kB,      // verb
  kAdf,    // adverb
  kAr,     // preposition
  kCys,    // conjunction
  kBan,    // article / determiner
  kRha,    // pronoun
  kRhi,    // numeral
  kEbych,  // interjection
  kU,      // particle unique to Welsh
  kGw,     // other: foreign words, symbols, digits, unknown
  kAtd,    // punctuation
};

inline constexpr std::size_t kBasicCatCount = 13;

const std::array<BasicCat, kBasicCatCount>& all_basic_cats();
std::string_view to_string(BasicCat cat);
std::optional<BasicCat> parse_basic_cat(std::string_view code);
// Throws ParseError on an unknown code.
BasicCat basic_cat_from_code(std::string_view code);

struct TagFeatures {
  std::optional<std::string> gender;
  std::optional<std::string> number;
  std::optional<std::string> person;
  std::optional<std::string> tense;

  bool operator==(const TagFeatures&) const = default;
};

struct RichTag {
  std::string code;
  BasicCat basic = BasicCat::kGw;
  TagFeatures features;

  bool operator==(const RichTag&) const = default;
};

class Tagset {
 public:
  Tagset() = default;
  explicit Tagset(std::vector<RichTag> tags);

  // Format: rich_code<TAB>basic_code[<TAB>feature=value,...]; '#' comments.
  static Tagset load(const std::string& path);
  static Tagset parse(std::string_view contents);

  // Throws UnknownTag for codes not in the inventory.
  const RichTag& parse_tag(std::string_view code) const;
  const RichTag* find(std::string_view code) const;
  bool contains(std::string_view code) const { return find(code) != nullptr; }
  BasicCat basic_of(std::string_view code) const { return parse_tag(code).basic; }

  const std::vector<RichTag>& tags() const { return tags_; }

 private:
  std::vector<RichTag> tags_;
  std::unordered_map<std::string, std::size_t> by_code_;
};

}  // namespace corpws

#endif  // CORPWS_TAGSET_H_
