#ifndef CORPWS_TEXT_H_
#define CORPWS_TEXT_H_

// UTF-8 helpers backed by ICU.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace corpws::text {

// Decodes the code point starting at byte `pos`; advances `pos` past it.
// Ill-formed sequences decode as U+FFFD and consume one byte.
char32_t next_code_point(std::string_view s, std::size_t& pos);
char32_t first_code_point(std::string_view s);
void append_utf8(std::string& out, char32_t cp);

std::string nfc(std::string_view s);
// Unicode simple case folding.
std::string fold_case(std::string_view s);

bool is_letter(char32_t cp);
bool is_upper(char32_t cp);
bool is_digit(char32_t cp);
bool is_space(char32_t cp);
bool is_mark(char32_t cp);
bool is_punct(char32_t cp);
bool is_symbol(char32_t cp);

// True when the first character is a letter: the corpus definition of a word
// as opposed to any token.
bool starts_with_letter(std::string_view s);
bool starts_upper(std::string_view s);

std::string lower_initial(std::string_view s);
std::string upper_initial(std::string_view s);

// Read all lines of a UTF-8 file, without line terminators.
std::vector<std::string> read_lines(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

std::vector<std::string> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace corpws::text

#endif  // CORPWS_TEXT_H_
