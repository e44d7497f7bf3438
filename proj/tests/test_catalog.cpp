#include <gtest/gtest.h>

#include "cgt/catalog.hpp"
#include "oracle.hpp"

namespace {

std::vector<std::uint64_t> oracle_spectrum(const cgt::GeneratedGroup& g) {
  auto s = oracle::spectrum(oracle::order_counts(oracle::closure(g.generators)));
  return {s.begin(), s.end()};
}

}  // namespace

TEST(Catalog, BuiltinNamesInOrder) {
  const auto c = cgt::Catalog::builtin();
  EXPECT_EQ(c.names(), (std::vector<std::string>{"A7", "A8", "L3_4", "L2_7", "L2_5", "F168", "2E4_A7", "L3_4_2_2",
                                                 "O7_3", "S6_3"}));
  EXPECT_THROW(c.at("M11"), cgt::InvalidInput);
  EXPECT_FALSE(c.at("O7_3").constructed());
  EXPECT_TRUE(c.at("A8").constructed());
}

TEST(Catalog, RejectsDuplicatesAndBadSheets) {
  auto c = cgt::Catalog::builtin();
  EXPECT_THROW(c.add_sheet(cgt::sheet("A8", {{2, 1}}, {1, 2}, cgt::SheetSource::paper_data)), cgt::InvalidInput);
  EXPECT_THROW(c.add_sheet(cgt::sheet("X", {{2, 1}}, {1, 4}, cgt::SheetSource::paper_data)), cgt::InvalidInput);
  EXPECT_THROW(c.add_sheet(cgt::sheet("Y", {{2, 1}}, {1, 2, 3}, cgt::SheetSource::paper_data)), cgt::InvalidInput);
  EXPECT_THROW(c.add_sheet(cgt::sheet("Z", {{3, 1}, {2, 1}}, {1}, cgt::SheetSource::paper_data)), cgt::InvalidInput);
  c.add_sheet(cgt::sheet("C6", {{2, 1}, {3, 1}}, {1, 2, 3, 6}, cgt::SheetSource::paper_data));
  EXPECT_TRUE(c.contains("C6"));
  EXPECT_EQ(c.names().back(), "C6");
}

// Each constructed entry against an independent closure.
TEST(Catalog, ConstructedOrdersAndSpectraMatchOracle) {
  const auto c = cgt::Catalog::builtin();
  for (const auto& name : {"A7", "A8", "L3_4", "L2_7", "L2_5", "F168"}) {
    const auto& e = c.at(name);
    auto g = e.construct(1).group;
    auto elements = oracle::closure(g.generators);
    EXPECT_EQ(cgt::Integer(elements.size()), e.sheet.order_value()) << name;
    EXPECT_EQ(oracle_spectrum(g), e.sheet.spectrum) << name;
    EXPECT_TRUE(cgt::divisor_closed(e.sheet.spectrum)) << name;
  }
}

TEST(Catalog, SpecificSpectra) {
  EXPECT_EQ(oracle_spectrum(cgt::alternating(7)), (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(oracle_spectrum(cgt::two_frobenius_168()), (std::vector<std::uint64_t>{1, 2, 3, 6, 7}));
  EXPECT_EQ(oracle_spectrum(cgt::psl3_4()), (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 7}));
}

TEST(Catalog, AffineA7SearchIsSeedReproducible) {
  auto a = cgt::affine_2e4_a7(1);
  auto b = cgt::affine_2e4_a7(1);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.b, b.b);
  EXPECT_EQ(a.attempts, b.attempts);
  auto other = cgt::affine_2e4_a7(77);
  auto t1 = cgt::order_count_table(cgt::build_chain(a.group));
  auto t2 = cgt::order_count_table(cgt::build_chain(other.group));
  EXPECT_EQ(t1, t2);
  EXPECT_EQ(cgt::spectrum(t1), (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 14}));
}

TEST(Catalog, ConstructionGuards) {
  EXPECT_THROW(cgt::alternating(2), cgt::InvalidInput);
  EXPECT_THROW(cgt::psl2(9), cgt::InvalidInput);
  EXPECT_THROW(cgt::psl2(3), cgt::InvalidInput);
  EXPECT_EQ(cgt::primitive_root(7), 3u);
  EXPECT_EQ(cgt::primitive_root(13), 2u);
}

TEST(Catalog, LargeFactSheets) {
  auto sheets = cgt::fact_sheets_large();
  ASSERT_EQ(sheets.size(), 2u);
  EXPECT_EQ(sheets[0].order_value(), cgt::Integer("4585351680"));
  EXPECT_EQ(sheets[0].order_value(), sheets[1].order_value());
  for (const auto& s : sheets) {
    EXPECT_NO_THROW(cgt::validate_sheet(s));
    EXPECT_EQ(s.source, cgt::SheetSource::paper_data);
  }
  EXPECT_EQ(cgt::to_string(cgt::SheetSource::paper_data), "paper-data");
}

TEST(Catalog, DerivedOrdersOfOrder40320Groups) {
  const auto c = cgt::Catalog::builtin();
  auto ext = c.at("L3_4_2_2").construct(1);
  EXPECT_EQ(cgt::derived_series(ext.group).derived_subgroup_order(), 20160);
  EXPECT_FALSE(ext.notes.empty());
  auto aff = c.at("2E4_A7").construct(1);
  EXPECT_TRUE(cgt::derived_series(aff.group).perfect());
}
