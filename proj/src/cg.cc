#include "corpws/cg.h"

#include <algorithm>
#include <cassert>
#include <charconv>

#include "corpws/error.h"
#include "corpws/text.h"

namespace corpws {

namespace {

// ---------------------------------------------------------------------------
// Rule DSL lexer and parser

struct Lexeme {
  enum class Kind { kOpen, kClose, kSemicolon, kString, kWord, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  int line = 0;
};

std::vector<Lexeme> lex_rules(std::string_view src) {
  std::vector<Lexeme> out;
  int line = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
    } else if (c == '(') {
      out.push_back({Lexeme::Kind::kOpen, "(", line});
      ++i;
    } else if (c == ')') {
      out.push_back({Lexeme::Kind::kClose, ")", line});
      ++i;
    } else if (c == ';') {
      out.push_back({Lexeme::Kind::kSemicolon, ";", line});
      ++i;
    } else if (c == '"') {
      const std::size_t close = src.find('"', i + 1);
      if (close == std::string_view::npos) {
        throw ParseError("rules line " + std::to_string(line) +
                         ": unterminated string");
      }
      out.push_back({Lexeme::Kind::kString,
                     std::string(src.substr(i + 1, close - i - 1)), line});
      i = close + 1;
    } else {
      const std::size_t start = i;
      while (i < src.size() && std::string_view(" \t\r\n();\"#").find(src[i]) ==
                                   std::string_view::npos) {
        ++i;
      }
      out.push_back({Lexeme::Kind::kWord, std::string(src.substr(start, i - start)),
                     line});
    }
  }
  out.push_back({Lexeme::Kind::kEnd, "", line});
  return out;
}

class RuleParser {
 public:
  RuleParser(std::vector<Lexeme> lexemes, const Tagset& tagset)
      : lx_(std::move(lexemes)), tagset_(tagset) {}

  std::vector<CgRule> parse() {
    std::vector<CgRule> rules;
    while (peek().kind != Lexeme::Kind::kEnd) rules.push_back(rule());
    return rules;
  }

 private:
  const Lexeme& peek() const { return lx_[pos_]; }
  const Lexeme& take() { return lx_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("rules line " + std::to_string(peek().line) + ": " + message);
  }

  const Lexeme& expect(Lexeme::Kind kind, std::string_view what) {
    if (peek().kind != kind) {
      fail("expected " + std::string(what) + ", found '" + peek().text + "'");
    }
    return take();
  }

  CgRule rule() {
    const Lexeme& head = expect(Lexeme::Kind::kWord, "SELECT or REMOVE");
    CgRule r;
    const std::string_view word = head.text;
    const std::size_t colon = word.find(':');
    const std::string_view action = word.substr(0, colon);
    if (action == "SELECT") {
      r.action = CgAction::kSelect;
    } else if (action == "REMOVE") {
      r.action = CgAction::kRemove;
    } else {
      fail("unknown action '" + std::string(action) + "'");
    }
    r.name = colon == std::string_view::npos
                 ? "rule@" + std::to_string(head.line)
                 : std::string(word.substr(colon + 1));

    expect(Lexeme::Kind::kOpen, "'('");
    r.target = target(expect(Lexeme::Kind::kWord, "target tag").text);
    expect(Lexeme::Kind::kClose, "')'");

    const Lexeme& kw = expect(Lexeme::Kind::kWord, "IF");
    if (kw.text != "IF") fail("expected IF, found '" + kw.text + "'");
    while (peek().kind == Lexeme::Kind::kOpen) r.contexts.push_back(context(r.target));
    if (r.contexts.empty()) fail("rule '" + r.name + "' has no context tests");
    expect(Lexeme::Kind::kSemicolon, "';'");
    return r;
  }

  BasicCat basic(const std::string& code) {
    if (auto cat = parse_basic_cat(code)) return *cat;
    fail("unknown basic category '" + code + "'");
  }

  MutationKind mutation(const std::string& code) {
    if (auto m = parse_mutation(code)) return *m;
    fail("unknown mutation '" + code + "'");
  }

  std::string rich(const std::string& code) {
    if (!tagset_.contains(code)) {
      throw UnknownTag("rules line " + std::to_string(peek().line) +
                       ": unknown rich tag '" + code + "'");
    }
    return code;
  }

  TagPattern target(const std::string& word) {
    TagPattern p;
    if (word.starts_with("BASIC=")) {
      p.kind = TagPattern::Kind::kBasic;
      p.basic = basic(word.substr(6));
    } else if (word.starts_with("MUT=")) {
      p.kind = TagPattern::Kind::kMutation;
      p.mutation = mutation(word.substr(4));
    } else {
      p.kind = TagPattern::Kind::kRich;
      p.rich = rich(word);
    }
    return p;
  }

  int offset(const std::string& word, bool& scan) {
    std::string_view s = word;
    scan = s.starts_with('*');
    if (scan) s.remove_prefix(1);
    if (s.starts_with('+')) s.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      fail("bad offset '" + word + "'");
    }
    if (scan && value == 0) fail("scanning offset must be non-zero");
    return value;
  }

  ContextTest context(const TagPattern& target_pattern) {
    expect(Lexeme::Kind::kOpen, "'('");
    ContextTest t;
    std::string word = expect(Lexeme::Kind::kWord, "offset").text;
    if (word == "NOT") {
      t.negated = true;
      word = expect(Lexeme::Kind::kWord, "offset").text;
    }
    t.offset = offset(word, t.scan);

    const std::string kind = expect(Lexeme::Kind::kWord, "test").text;
    if (kind == "TOKEN" || kind == "LEMMA") {
      t.kind = kind == "TOKEN" ? ContextTest::Kind::kToken : ContextTest::Kind::kLemma;
      t.value = expect(Lexeme::Kind::kString, "quoted string").text;
    } else if (kind == "BASIC") {
      t.kind = ContextTest::Kind::kBasic;
      t.basic = basic(expect(Lexeme::Kind::kWord, "basic category").text);
    } else if (kind == "RICH") {
      t.kind = ContextTest::Kind::kRich;
      t.value = rich(expect(Lexeme::Kind::kWord, "rich tag").text);
    } else if (kind == "MUT") {
      t.kind = ContextTest::Kind::kMutation;
      t.mutation = mutation(expect(Lexeme::Kind::kWord, "mutation").text);
    } else if (kind == "UNKNOWN") {
      t.kind = ContextTest::Kind::kUnknown;
    } else if (kind == "BOS") {
      t.kind = ContextTest::Kind::kBos;
    } else if (kind == "EOS") {
      t.kind = ContextTest::Kind::kEos;
    } else {
      fail("unknown test '" + kind + "'");
    }
    expect(Lexeme::Kind::kClose, "')'");

    if (t.offset == 0 && !t.scan) {
      const bool restates_target =
          (t.kind == ContextTest::Kind::kRich &&
           target_pattern.kind == TagPattern::Kind::kRich &&
           t.value == target_pattern.rich) ||
          (t.kind == ContextTest::Kind::kBasic &&
           target_pattern.kind == TagPattern::Kind::kBasic &&
           t.basic == target_pattern.basic) ||
          (t.kind == ContextTest::Kind::kMutation &&
           target_pattern.kind == TagPattern::Kind::kMutation &&
           t.mutation == target_pattern.mutation);
      if (restates_target) fail("offset 0 may not test the target pattern");
      if (t.kind == ContextTest::Kind::kBos || t.kind == ContextTest::Kind::kEos) {
        fail("BOS/EOS need a non-zero offset");
      }
    }
    return t;
  }

  std::vector<Lexeme> lx_;
  std::size_t pos_ = 0;
  const Tagset& tagset_;
};

// ---------------------------------------------------------------------------
// Rule application

bool token_satisfies(const TaggedToken& tok, const ContextTest& t) {
  const auto any = [&](auto pred) {
    return std::any_of(tok.candidates.begin(), tok.candidates.end(), pred);
  };
  switch (t.kind) {
    case ContextTest::Kind::kToken:
      return text::fold_case(tok.token.text) == text::fold_case(t.value);
    case ContextTest::Kind::kLemma:
      return any([&](const Analysis& a) { return a.lemma == t.value; });
    case ContextTest::Kind::kBasic:
      return any([&](const Analysis& a) { return a.basic == t.basic; });
    case ContextTest::Kind::kRich:
      return any([&](const Analysis& a) { return a.rich == t.value; });
    case ContextTest::Kind::kMutation:
      return any([&](const Analysis& a) { return a.mutation == t.mutation; });
    case ContextTest::Kind::kUnknown:
      return any([](const Analysis& a) { return a.rich == "Gwann"; });
    case ContextTest::Kind::kBos:
    case ContextTest::Kind::kEos:
      return false;
  }
  return false;
}

bool context_holds(const std::vector<TaggedToken>& sentence, std::size_t target,
                   const ContextTest& t) {
  const auto n = static_cast<long>(sentence.size());
  long j = static_cast<long>(target) + t.offset;
  bool result = false;
  if (t.kind == ContextTest::Kind::kBos) {
    result = j < 0;
  } else if (t.kind == ContextTest::Kind::kEos) {
    result = j >= n;
  } else if (!t.scan) {
    result = j >= 0 && j < n && token_satisfies(sentence[static_cast<std::size_t>(j)], t);
  } else {
    const long step = t.offset < 0 ? -1 : 1;
    for (; j >= 0 && j < n; j += step) {
      if (token_satisfies(sentence[static_cast<std::size_t>(j)], t)) {
        result = true;
        break;
      }
    }
  }
  return t.negated ? !result : result;
}

}  // namespace

bool TagPattern::matches(const Analysis& a) const {
  switch (kind) {
    case Kind::kRich: return a.rich == rich;
    case Kind::kBasic: return a.basic == basic;
    case Kind::kMutation: return a.mutation == mutation;
  }
  return false;
}

std::vector<CgRule> parse_rules(std::string_view source, const Tagset& tagset) {
  return RuleParser(lex_rules(source), tagset).parse();
}

std::vector<CgRule> load_rules(const std::string& path, const Tagset& tagset) {
  return parse_rules(text::read_file(path), tagset);
}

std::vector<TaggedToken> apply_constraints(std::vector<TaggedToken> sentence,
                                           const std::vector<CgRule>& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const CgRule& rule : rules) {
      for (std::size_t i = 0; i < sentence.size(); ++i) {
        auto& cands = sentence[i].candidates;
        const auto matching = static_cast<std::size_t>(std::count_if(
            cands.begin(), cands.end(),
            [&](const Analysis& a) { return rule.target.matches(a); }));
        // SELECT with nothing to drop, or an application that would empty
        // the candidate set, changes nothing.
        if (matching == 0 || matching == cands.size()) continue;
        const bool holds = std::all_of(
            rule.contexts.begin(), rule.contexts.end(),
            [&](const ContextTest& t) { return context_holds(sentence, i, t); });
        if (!holds) continue;
        const bool keep_matching = rule.action == CgAction::kSelect;
        std::erase_if(cands, [&](const Analysis& a) {
          return rule.target.matches(a) != keep_matching;
        });
        assert(!cands.empty());
        changed = true;
      }
    }
  }
  for (TaggedToken& tok : sentence) {
    tok.resolved = tok.candidates.front();
  }
  return sentence;
}

TaggerPaths TaggerPaths::in(const std::string& data_dir) {
  return TaggerPaths{data_dir + "/tagset.tsv", data_dir + "/lexicon.tsv",
                     data_dir + "/english.txt", data_dir + "/abbreviations.txt",
                     data_dir + "/rules.cg"};
}

Tagger::Tagger(Tagset tagset, Lexicon lexicon, Segmenter segmenter,
               std::vector<CgRule> rules)
    : tagset_(std::move(tagset)),
      lexicon_(std::move(lexicon)),
      segmenter_(std::move(segmenter)),
      rules_(std::move(rules)) {
  for (const char* required : {"Gwann", "Atdt", "Atdcan"}) {
    tagset_.parse_tag(required);
  }
}

Tagger Tagger::load(const TaggerPaths& paths) {
  Tagset tagset = Tagset::load(paths.tagset);
  Lexicon lexicon = Lexicon::load(paths.lexicon, paths.english, tagset);
  Segmenter segmenter = Segmenter::load(paths.abbreviations);
  std::vector<CgRule> rules = load_rules(paths.rules, tagset);
  return Tagger(std::move(tagset), std::move(lexicon), std::move(segmenter),
                std::move(rules));
}

Analysis Tagger::special_analysis(const std::string& tok) const {
  const auto pick = [&](const char* code, const char* fallback) {
    return std::string(tagset_.contains(code) ? code : fallback);
  };
  bool all_punct = true;
  bool all_symbol = true;
  std::size_t pos = 0;
  while (pos < tok.size()) {
    const char32_t cp = text::next_code_point(tok, pos);
    all_punct = all_punct && text::is_punct(cp);
    all_symbol = all_symbol && text::is_symbol(cp);
  }
  std::string rich;
  if (all_punct) {
    if (tok == "." || tok == "!" || tok == "?") {
      rich = "Atdt";
    } else if (tok == "\"" || tok == "'" || tok == "«" || tok == "»" ||
               tok == "“" || tok == "”") {
      rich = pick("Atddyf", "Atdcan");
    } else if (tok == "(" || tok == "[" || tok == "{") {
      rich = pick("Atdchw", "Atdcan");
    } else if (tok == ")" || tok == "]" || tok == "}") {
      rich = pick("Atdde", "Atdcan");
    } else {
      rich = "Atdcan";
    }
  } else if (all_symbol) {
    rich = pick("Gwsym", "Gwann");
  } else if (text::is_digit(text::first_code_point(tok))) {
    rich = pick("Gwdig", "Gwann");
  } else {
    rich = "Gwann";
  }
  return Analysis{tok, tagset_.basic_of(rich), rich, MutationKind::kNone};
}

TaggedToken Tagger::candidates_for(const Token& token) const {
  TaggedToken out;
  out.token = token;
  bool all_punct = !token.text.empty();
  std::size_t pos = 0;
  while (pos < token.text.size()) {
    const char32_t cp = text::next_code_point(token.text, pos);
    all_punct = all_punct && text::is_punct(cp);
  }
  if (!all_punct) out.candidates = lexicon_.lookup(token.text);
  if (out.candidates.empty()) out.candidates.push_back(special_analysis(token.text));
  return out;
}

std::vector<TaggedToken> Tagger::tag_sentence(const Sentence& sentence) const {
  std::vector<TaggedToken> tagged;
  tagged.reserve(sentence.size());
  for (const Token& t : sentence) tagged.push_back(candidates_for(t));
  return apply_constraints(std::move(tagged), rules_);
}

std::vector<std::vector<TaggedToken>> Tagger::tag(std::string_view input) const {
  std::vector<std::vector<TaggedToken>> out;
  for (const Sentence& s : segmenter_.tokenize(input)) out.push_back(tag_sentence(s));
  return out;
}

std::string format_tag_table(const std::vector<std::vector<TaggedToken>>& sentences) {
  std::string out = "ID\tTOKEN\tPOSITION\tLEMMA\tBASIC\tRICH\tMUTATION\n";
  int id = 0;
  for (const auto& sentence : sentences) {
    for (const TaggedToken& t : sentence) {
      const Analysis& a = t.resolved ? *t.resolved : t.candidates.front();
      out += std::to_string(++id);
      out += '\t' + t.token.text;
      out += '\t' + std::to_string(t.token.sentence) + "," +
             std::to_string(t.token.position);
      out += '\t' + a.lemma;
      out += '\t';
      out += to_string(a.basic);
      out += '\t' + a.rich;
      out += '\t';
      out += to_string(a.mutation);
      out += '\n';
    }
  }
  return out;
}

}  // namespace corpws
