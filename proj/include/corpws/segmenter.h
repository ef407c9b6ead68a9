#ifndef CORPWS_SEGMENTER_H_
#define CORPWS_SEGMENTER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace corpws {

// Half-open byte range into the normalized text (see normalize_text).
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const CharSpan&) const = default;
};

struct Token {
  std::string text;
  int sentence = 0;  // 1-based
  int position = 0;  // 1-based within the sentence
  CharSpan span;

  bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

struct UnitCounts {
  std::size_t tokens = 0;
  std::size_t words = 0;

  bool operator==(const UnitCounts&) const = default;
};

// NFC, with U+2019 folded to an ASCII apostrophe. Token spans index into this.
std::string normalize_text(std::string_view text);

// A word is a token whose first character is a letter; everything else
// (punctuation, digits, clitics such as 'n) is a non-word token.
bool is_word(std::string_view token_text);
UnitCounts count_units(std::span<const Token> tokens);

class Segmenter {
 public:
  Segmenter() = default;
  explicit Segmenter(std::vector<std::string> abbreviations);

  // One abbreviation per line; blank lines and '#' comments ignored.
  static Segmenter load(const std::string& path);

  // Sentences end at '.', '!' or '?' (plus any closing quotes or brackets)
  // followed by whitespace or end of text. Clitics 'n 'r 'm 'i 'u 'w 'th 'ch
  // become their own tokens; other punctuation is one token per character.
  std::vector<Sentence> tokenize(std::string_view text) const;

  static const std::vector<std::string>& clitics();

 private:
  std::vector<std::string> abbreviations_;  // case-folded
};

}  // namespace corpws

#endif  // CORPWS_SEGMENTER_H_
