#include "genchar/partition.hpp"

#include <set>

#include <gtest/gtest.h>

using namespace genchar;

namespace {

// λ/ν of the 20-box broken border strip with sharp and dull boxes marked.
SkewShape figure_shape() {
  return SkewShape(Partition{12, 9, 8, 7, 7, 4, 4, 4, 4, 4, 1, 1, 1}, Partition{8, 8, 8, 6, 4, 3, 3, 3, 3});
}

std::int64_t hook_length_dim(const Partition& lam) {
  // n! / Π hooks, accumulated as a rational product to stay exact.
  std::int64_t num = 1;
  std::int64_t den = 1;
  int k = 0;
  for (int r = 0; r < lam.length(); ++r) {
    for (int c = 0; c < lam[r]; ++c) {
      num *= ++k;
      int arm = lam[r] - c - 1;
      int leg = 0;
      while (lam[r + leg + 1] > c) ++leg;
      den *= arm + leg + 1;
    }
  }
  return num / den;
}

}  // namespace

TEST(PartitionTest, ConstructionStripsTrailingZeros) {
  Partition p(std::vector<int>{3, 1, 0, 0});
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p[5], 0);
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
}

TEST(PartitionTest, TextRoundTrip) {
  EXPECT_EQ(to_string(Partition{3, 2, 1}), "3,2,1");
  EXPECT_EQ(to_string(Partition{}), "-");
  EXPECT_EQ(parse_partition("3,2,1"), (Partition{3, 2, 1}));
  EXPECT_EQ(parse_partition("-"), Partition{});
  EXPECT_EQ(parse_partition(" 4, 4 ,1"), (Partition{4, 4, 1}));
}

TEST(PartitionTest, ParseErrorsCarryPosition) {
  try {
    parse_partition("3,x");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_partition("2,3"), ParseError);
  EXPECT_THROW(parse_partition("2,,1"), ParseError);
  EXPECT_THROW(parse_partition(""), ParseError);
}

TEST(PartitionTest, PartitionsOfSmallN) {
  EXPECT_EQ(partitions_of(0), std::vector<Partition>{Partition{}});
  EXPECT_EQ(partitions_of(3), (std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}}));
  EXPECT_EQ(partitions_of(6).size(), 11u);
}

TEST(PartitionTest, PartitionCountsMatchEulerRecurrence) {
  // Pentagonal number recurrence as an independent count.
  std::vector<long> p(13, 0);
  p[0] = 1;
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      long sign = (k % 2 == 1) ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  }
  for (int n = 0; n <= 12; ++n) {
    auto parts = partitions_of(n);
    EXPECT_EQ(static_cast<long>(parts.size()), p[n]) << "n = " << n;
    EXPECT_TRUE(std::is_sorted(parts.begin(), parts.end(), std::greater<>())) << "n = " << n;
  }
}

TEST(PartitionTest, AddBoxPositions) {
  auto got = add_box_positions(Partition{2, 1});
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[0].first, (Partition{3, 1}));
  EXPECT_EQ(got[0].second, (Box{1, 3}));
  EXPECT_EQ(got[1].first, (Partition{2, 2}));
  EXPECT_EQ(got[1].second, (Box{2, 2}));
  EXPECT_EQ(got[2].first, (Partition{2, 1, 1}));
  EXPECT_EQ(got[2].second, (Box{3, 1}));

  auto from_empty = add_box_positions(Partition{});
  ASSERT_EQ(from_empty.size(), 1u);
  EXPECT_EQ(from_empty[0].second, (Box{1, 1}));

  auto from_one = add_box_positions(Partition{1});
  ASSERT_EQ(from_one.size(), 2u);
  EXPECT_EQ(from_one[0].first, (Partition{2}));
  EXPECT_EQ(from_one[1].first, (Partition{1, 1}));
}

TEST(PartitionTest, RemoveBoxPositions) {
  auto got = remove_box_positions(Partition{3, 2, 2});
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0].first, (Partition{2, 2, 2}));
  EXPECT_EQ(got[0].second, (Box{1, 3}));
  EXPECT_EQ(got[1].first, (Partition{3, 2, 1}));
  EXPECT_EQ(got[1].second, (Box{3, 2}));

  auto single = remove_box_positions(Partition{1});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].first, Partition{});

  auto square = remove_box_positions(Partition{2, 2});
  ASSERT_EQ(square.size(), 1u);
  EXPECT_EQ(square[0].first, (Partition{2, 1}));
}

TEST(PartitionTest, AddAndRemoveAreInverse) {
  for (int n = 0; n <= 7; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      for (const auto& [lam, box] : add_box_positions(mu)) {
        auto back = remove_box_positions(lam);
        EXPECT_NE(std::find(back.begin(), back.end(), std::make_pair(mu, box)), back.end());
      }
    }
  }
}

TEST(PartitionTest, SubpartitionsOfSize) {
  auto got = subpartitions_of_size(Partition{3, 2}, 3);
  EXPECT_EQ(got, (std::vector<Partition>{Partition{3}, Partition{2, 1}}));
  EXPECT_EQ(subpartitions_of_size(Partition{2, 1}, 0), std::vector<Partition>{Partition{}});
}

TEST(SkewShapeTest, BoxesAndLabels) {
  SkewShape s(Partition{3, 2, 2, 1}, Partition{1, 1});
  std::vector<Box> expected{{1, 2}, {1, 3}, {2, 2}, {3, 1}, {3, 2}, {4, 1}};
  EXPECT_EQ(s.boxes(), expected);
  auto labels = standard_labelling(s);
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(labels.at(expected[i]), static_cast<int>(i) + 1);
  EXPECT_EQ(s.label_of(Box{1, 1}), 0);

  auto single = standard_labelling(SkewShape(Partition{1}));
  EXPECT_EQ(single.at(Box{1, 1}), 1);

  SkewShape t(Partition{2, 2, 1}, Partition{1});
  std::vector<Box> row_major{{1, 2}, {2, 1}, {2, 2}, {3, 1}};
  EXPECT_EQ(t.boxes(), row_major);
}

TEST(SkewShapeTest, ParseAndPrint) {
  SkewShape s = parse_skew_shape("3,2,1/1,1");
  EXPECT_EQ(s.outer(), (Partition{3, 2, 1}));
  EXPECT_EQ(s.inner(), (Partition{1, 1}));
  EXPECT_EQ(to_string(s), "3,2,1/1,1");
  EXPECT_EQ(parse_skew_shape("2,1").inner(), Partition{});
  EXPECT_THROW(parse_skew_shape("2/3"), std::invalid_argument);
}

TEST(SkewShapeTest, ClassifyExamples) {
  auto square = classify_skew(SkewShape(Partition{2, 2}));
  EXPECT_FALSE(square.is_border_strip);
  EXPECT_FALSE(square.is_broken_border_strip);
  EXPECT_EQ(square.connected_components, 1);
  EXPECT_FALSE(square.height.has_value());

  auto hook = classify_skew(SkewShape(Partition{3, 1}));
  EXPECT_TRUE(hook.is_border_strip);
  EXPECT_TRUE(hook.is_broken_border_strip);
  EXPECT_EQ(hook.connected_components, 1);
  EXPECT_EQ(hook.height, 1);

  auto apart = classify_skew(SkewShape(Partition{3, 1, 1}, Partition{2, 1}));
  EXPECT_FALSE(apart.is_border_strip);
  EXPECT_TRUE(apart.is_broken_border_strip);
  EXPECT_EQ(apart.connected_components, 2);
  EXPECT_EQ(apart.height, 0);
}

TEST(SkewShapeTest, FigureShape) {
  SkewShape s = figure_shape();
  EXPECT_EQ(s.size(), 20);
  auto c = classify_skew(s);
  EXPECT_FALSE(c.is_border_strip);
  EXPECT_TRUE(c.is_broken_border_strip);
  // Boxes touching only at a corner are separate components.
  EXPECT_EQ(c.connected_components, 3);
  EXPECT_EQ(c.height, 9);
  EXPECT_EQ(sharp_corners(s).size(), 2u);
  EXPECT_EQ(dull_boxes(s).size(), 5u);
}

TEST(SkewShapeTest, SharpCornersAndDullBoxes) {
  SkewShape single(Partition{1});
  EXPECT_TRUE(sharp_corners(single).empty());
  EXPECT_EQ(dull_boxes(single), std::vector<Box>{(Box{1, 1})});

  SkewShape hook(Partition{3, 1});
  EXPECT_EQ(sharp_corners(hook), std::vector<Box>{(Box{1, 1})});
  EXPECT_EQ(dull_boxes(hook), (std::vector<Box>{{1, 3}, {2, 1}}));

  EXPECT_THROW(sharp_corners(SkewShape(Partition{2, 2})), std::domain_error);
  EXPECT_THROW(dull_boxes(SkewShape(Partition{3, 3}, Partition{1})), std::domain_error);
}

TEST(SkewShapeTest, TwoByTwoBlock) {
  EXPECT_TRUE(has_two_by_two_block(SkewShape(Partition{2, 2})));
  EXPECT_FALSE(has_two_by_two_block(SkewShape(Partition{3, 2}, Partition{1})));
  EXPECT_TRUE(has_two_by_two_block(SkewShape(Partition{3, 3}, Partition{1})));
}

TEST(TableauTest, EnumerationCounts) {
  EXPECT_EQ(enumerate_syt(SkewShape(Partition{2, 2, 1})).size(), 5u);
  EXPECT_EQ(enumerate_syt(SkewShape(Partition{1})).size(), 1u);
  EXPECT_EQ(enumerate_syt(SkewShape(Partition{3, 1})).size(), 3u);
  EXPECT_EQ(enumerate_syt(SkewShape(Partition{2, 1}, Partition{1})).size(), 2u);
}

TEST(TableauTest, EnumerationMatchesHookLengthFormula) {
  for (int n = 1; n <= 7; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      auto tableaux = enumerate_syt(SkewShape(lam));
      EXPECT_EQ(static_cast<std::int64_t>(tableaux.size()), hook_length_dim(lam)) << to_string(lam);
      EXPECT_EQ(dim(lam), hook_length_dim(lam)) << to_string(lam);
    }
  }
}

TEST(TableauTest, EveryTableauIsStandardAndDistinct) {
  for (const SkewShape& s : compact_skew_shapes(6)) {
    std::set<std::vector<int>> seen;
    for (const StandardTableau& t : enumerate_syt(s)) {
      EXPECT_TRUE(seen.insert(t.entries).second) << to_string(s);
      for (const Box& b : s.boxes()) {
        for (const Box& next : {Box{b.row, b.col + 1}, Box{b.row + 1, b.col}}) {
          if (s.contains(next)) EXPECT_LT(t.entry_at(b), t.entry_at(next)) << to_string(s);
        }
      }
      for (int k = 1; k <= s.size(); ++k) EXPECT_EQ(t.entry_at(t.box_of(k)), k);
    }
  }
}

TEST(TableauTest, DimExamples) {
  EXPECT_EQ(dim(Partition{2, 1}), 2);
  EXPECT_EQ(dim(Partition{6}), 1);
  EXPECT_EQ(dim(Partition{2, 2}), 2);
  EXPECT_EQ(dim(Partition{}), 1);
  EXPECT_EQ(dim(Partition{4, 3, 2, 1}), 768);
}

TEST(SkewShapeTest, CompactShapesHaveNoEmptyRowsOrColumns) {
  auto shapes = compact_skew_shapes(5);
  std::set<SkewShape> unique(shapes.begin(), shapes.end());
  EXPECT_EQ(unique.size(), shapes.size());
  for (const SkewShape& s : shapes) {
    ASSERT_GE(s.size(), 1);
    ASSERT_LE(s.size(), 5);
    std::set<int> rows, cols;
    for (const Box& b : s.boxes()) {
      rows.insert(b.row);
      cols.insert(b.col);
    }
    EXPECT_EQ(*rows.rbegin(), static_cast<int>(rows.size())) << to_string(s);
    EXPECT_EQ(*cols.rbegin(), static_cast<int>(cols.size())) << to_string(s);
  }
}
