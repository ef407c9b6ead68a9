#include "corpws/tagset.h"

#include "corpws/error.h"
#include "corpws/text.h"

namespace corpws {

namespace {

constexpr std::array<BasicCat, kBasicCatCount> kAllCats = {
    BasicCat::kE,   BasicCat::kAns, BasicCat::kB,     BasicCat::kAdf,
    BasicCat::kAr,  BasicCat::kCys, BasicCat::kBan,   BasicCat::kRha,
    BasicCat::kRhi, BasicCat::kEbych, BasicCat::kU,   BasicCat::kGw,
    BasicCat::kAtd};

constexpr std::array<std::string_view, kBasicCatCount> kCatCodes = {
    "E", "Ans", "B", "Adf", "Ar", "Cys", "Ban", "Rha", "Rhi", "Ebych", "U",
    "Gw", "Atd"};

}  // namespace

const std::array<BasicCat, kBasicCatCount>& all_basic_cats() { return kAllCats; }

std::string_view to_string(BasicCat cat) {
  return kCatCodes[static_cast<std::size_t>(cat)];
}

std::optional<BasicCat> parse_basic_cat(std::string_view code) {
  for (std::size_t i = 0; i < kCatCodes.size(); ++i) {
    if (kCatCodes[i] == code) return kAllCats[i];
  }
  return std::nullopt;
}

BasicCat basic_cat_from_code(std::string_view code) {
  if (auto cat = parse_basic_cat(code)) return *cat;
  throw ParseError("unknown basic category '" + std::string(code) + "'");
}

Tagset::Tagset(std::vector<RichTag> tags) : tags_(std::move(tags)) {
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    const RichTag& tag = tags_[i];
    if (tag.code.empty()) throw ParseError("empty rich tag code");
    if (!tag.code.starts_with(to_string(tag.basic))) {
      throw ParseError("rich tag '" + tag.code +
                       "' does not begin with its basic category '" +
                       std::string(to_string(tag.basic)) + "'");
    }
    if (!by_code_.emplace(tag.code, i).second) {
      throw ParseError("duplicate rich tag '" + tag.code + "'");
    }
  }
}

Tagset Tagset::load(const std::string& path) {
  return parse(text::read_file(path));
}

Tagset Tagset::parse(std::string_view contents) {
  std::vector<RichTag> tags;
  std::size_t line_no = 0;
  for (const std::string& raw : text::split(contents, '\n')) {
    ++line_no;
    std::string_view line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = text::split(line, '\t');
    if (cols.size() < 2 || cols.size() > 3) {
      throw ParseError("tagset line " + std::to_string(line_no) +
                       ": expected 2 or 3 tab-separated columns");
    }
    RichTag tag;
    tag.code = cols[0];
    const auto basic = parse_basic_cat(cols[1]);
    if (!basic) {
      throw ParseError("tagset line " + std::to_string(line_no) +
                       ": unknown basic category '" + cols[1] + "'");
    }
    tag.basic = *basic;
    if (cols.size() == 3 && !cols[2].empty()) {
      for (const std::string& pair : text::split(cols[2], ',')) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos) {
          throw ParseError("tagset line " + std::to_string(line_no) +
                           ": malformed feature '" + pair + "'");
        }
        const std::string key = pair.substr(0, eq);
        std::string value = pair.substr(eq + 1);
        if (key == "gender") {
          tag.features.gender = std::move(value);
        } else if (key == "number") {
          tag.features.number = std::move(value);
        } else if (key == "person") {
          tag.features.person = std::move(value);
        } else if (key == "tense") {
          tag.features.tense = std::move(value);
        } else {
          throw ParseError("tagset line " + std::to_string(line_no) +
                           ": unknown feature '" + key + "'");
        }
      }
    }
    tags.push_back(std::move(tag));
  }
  return Tagset(std::move(tags));
}

const RichTag* Tagset::find(std::string_view code) const {
  auto it = by_code_.find(std::string(code));
  return it == by_code_.end() ? nullptr : &tags_[it->second];
}

const RichTag& Tagset::parse_tag(std::string_view code) const {
  if (const RichTag* tag = find(code)) return *tag;
  throw UnknownTag("unknown rich tag '" + std::string(code) + "'");
}

}  // namespace corpws
