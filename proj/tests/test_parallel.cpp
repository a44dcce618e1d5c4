#include "jnmf/parallel.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using jnmf::parallel_map;

TEST(ParallelMap, KeepsIndexOrder) {
    for (unsigned threads : {1u, 2u, 4u, 0u}) {
        const auto out = parallel_map(50, [](std::size_t i) { return static_cast<int>(i * i); }, threads);
        ASSERT_EQ(out.size(), 50u);
        for (std::size_t i = 0; i < out.size(); ++i)
            EXPECT_EQ(out[i], static_cast<int>(i * i));
    }
}

TEST(ParallelMap, EmptyInput) {
    EXPECT_TRUE(parallel_map(0, [](std::size_t) { return 1; }, 3).empty());
}

TEST(ParallelMap, RethrowsTaskFailure) {
    auto fail = [](std::size_t i) {
        if (i == 7)
            throw std::runtime_error("boom");
        return i;
    };
    EXPECT_THROW(parallel_map(20, fail, 3), std::runtime_error);
    EXPECT_THROW(parallel_map(20, fail, 1), std::runtime_error);
}
