#include "jnmf/errors.hpp"
#include "jnmf/partition.hpp"

#include <gtest/gtest.h>

using namespace jnmf;

TEST(Partition, SizesAndMembers) {
    const Partition p({0, 1, 0, 2, 1});
    EXPECT_EQ(p.size(), 5u);
    EXPECT_EQ(p.communities(), 3u);
    EXPECT_EQ(p.sizes(), (std::vector<std::size_t>{2, 2, 1}));
    EXPECT_EQ(p.members(), (std::vector<std::vector<int>>{{0, 2}, {1, 4}, {3}}));
}

TEST(Partition, RejectsGapsAndNegativeLabels) {
    EXPECT_THROW(Partition({0, 2}), ParameterError);
    EXPECT_THROW(Partition({-1, 0}), ParameterError);
    EXPECT_THROW(Partition({1, 1}), ParameterError);
}

TEST(Partition, CompactedKeepsAscendingOrder) {
    const std::vector<int> raw{7, 3, 7, 9};
    const auto p = Partition::compacted(raw);
    EXPECT_EQ(p.assignment(), (std::vector<int>{1, 0, 1, 2}));
}

TEST(Partition, EquivalenceIgnoresLabelNames) {
    const Partition a({0, 0, 1, 1});
    const Partition b({1, 1, 0, 0});
    const Partition c({0, 1, 0, 1});
    EXPECT_TRUE(a.equivalent(b));
    EXPECT_FALSE(a == b);
    EXPECT_FALSE(a.equivalent(c));
    EXPECT_FALSE(a.equivalent(Partition({0, 0, 1})));
    EXPECT_FALSE(Partition({0, 0, 0}).equivalent(Partition({0, 0, 1})));
}
