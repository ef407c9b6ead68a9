#include "corpws/tagset.h"

#include <gtest/gtest.h>

#include "corpws/error.h"
#include "support.h"

namespace corpws {
namespace {

TEST(Tagset, BasicCategoriesRoundTrip) {
  EXPECT_EQ(all_basic_cats().size(), kBasicCatCount);
  for (BasicCat c : all_basic_cats()) EXPECT_EQ(parse_basic_cat(to_string(c)), c);
  EXPECT_FALSE(parse_basic_cat("X").has_value());
  EXPECT_THROW(basic_cat_from_code("Noun"), ParseError);
}

TEST(Tagset, BundledTagsetCoversEveryBasicCategory) {
  const Tagset& t = testing::bundled_tagset();
  for (BasicCat c : all_basic_cats()) {
    bool seen = false;
    for (const RichTag& tag : t.tags()) seen = seen || tag.basic == c;
    EXPECT_TRUE(seen) << to_string(c);
  }
}

TEST(Tagset, ParseTagGivesBasicAndFeatures) {
  const Tagset& t = testing::bundled_tagset();
  const RichTag& ebu = t.parse_tag("Ebu");
  EXPECT_EQ(ebu.basic, BasicCat::kE);
  EXPECT_EQ(ebu.features.gender, "feminine");
  EXPECT_EQ(ebu.features.number, "singular");
  EXPECT_EQ(t.basic_of("Bpres3u"), BasicCat::kB);
  EXPECT_EQ(t.basic_of("Anscadu"), BasicCat::kAns);
}

TEST(Tagset, UnknownTagThrows) {
  EXPECT_THROW(testing::bundled_tagset().parse_tag("Xyz"), UnknownTag);
  EXPECT_FALSE(testing::bundled_tagset().contains("Xyz"));
}

TEST(Tagset, RejectsTagWhoseCodeDisagreesWithItsCategory) {
  EXPECT_THROW(Tagset::parse("Egu\tB\n"), ParseError);
}

TEST(Tagset, RejectsDuplicates) {
  EXPECT_THROW(Tagset::parse("Egu\tE\nEgu\tE\n"), ParseError);
}

TEST(Tagset, RejectsUnknownFeature) {
  EXPECT_THROW(Tagset::parse("Egu\tE\tcolour=red\n"), ParseError);
}

}  // namespace
}  // namespace corpws
