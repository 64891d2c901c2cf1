#include <set>

#include <gtest/gtest.h>

#include "hopfsym/partition.hpp"
#include "oracles.hpp"

using namespace hopfsym;

TEST(Partition, StripsTrailingZeros) {
    EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
    EXPECT_EQ(Partition({0}), Partition{});
    EXPECT_EQ(Partition({3, 1, 1}).weight(), 5);
    EXPECT_EQ(Partition({3, 1, 1}).length(), 3);
}

TEST(Partition, RejectsIncreasingOrNegativeParts) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0, 1}), std::invalid_argument);
}

TEST(Partition, CanonicalOrder) {
    const auto four = partitions_of(4);
    const std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(four, expected);
    EXPECT_TRUE(std::is_sorted(four.begin(), four.end()));
    EXPECT_LT(Partition({5}), Partition({1, 1, 1, 1, 1, 1}));  // degree first
    EXPECT_LT(Partition{}, Partition{1});
}

TEST(Partition, Conjugate) {
    EXPECT_EQ(conjugate({2, 1}), Partition({2, 1}));
    EXPECT_EQ(conjugate({3, 1}), Partition({2, 1, 1}));
    EXPECT_EQ(conjugate({}), Partition{});
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : partitions_of(n)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Partition, Contains) {
    EXPECT_TRUE(contains({1, 1}, {2, 1}));
    EXPECT_FALSE(contains({1, 1, 1}, {3, 1}));
    EXPECT_TRUE(contains({}, {4, 2}));
    EXPECT_TRUE(contains({}, {}));
    EXPECT_FALSE(contains({3}, {2, 2}));
}

TEST(Partition, EnumerationCounts) {
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n <= 9; ++n) EXPECT_EQ(partitions_of(n).size(), counts[static_cast<std::size_t>(n)]) << n;
    EXPECT_EQ(partitions_of(0), std::vector<Partition>{Partition{}});
    const std::vector<Partition> two_rows{{4}, {3, 1}, {2, 2}};
    EXPECT_EQ(partitions_of(4, 2), two_rows);
}

TEST(Partition, EnumerationIsExhaustiveAndUnique) {
    // brute force: every weakly decreasing vector of positive parts summing to n
    for (int n = 1; n <= 8; ++n) {
        std::set<Partition> brute;
        std::vector<int> parts;
        auto rec = [&](auto&& self, int left, int cap) -> void {
            if (left == 0) {
                brute.insert(Partition(parts));
                return;
            }
            for (int p = 1; p <= std::min(left, cap); ++p) {
                parts.push_back(p);
                self(self, left - p, p);
                parts.pop_back();
            }
        };
        rec(rec, n, n);
        const auto listed = partitions_of(n);
        EXPECT_EQ(std::set<Partition>(listed.begin(), listed.end()), brute);
        EXPECT_EQ(listed.size(), brute.size());
    }
}

TEST(Partition, DimGl) {
    EXPECT_EQ(dim_gl({2}, 4), 10);
    EXPECT_EQ(dim_gl({1, 1, 1, 1}, 4), 1);
    EXPECT_EQ(dim_gl({3, 1, 1}, 4), oracle::ssyt_count({3, 1, 1}, 4));
    EXPECT_EQ(dim_gl({3, 1, 1}, 4), 36);
    EXPECT_EQ(dim_gl({1, 1, 1}, 2), 0);
    EXPECT_EQ(dim_gl({}, 0), 1);
}

TEST(Partition, DimGlMatchesTableauCount) {
    for (int w = 0; w <= 6; ++w)
        for (const auto& p : partitions_of(w))
            for (int n = 0; n <= 5; ++n) EXPECT_EQ(dim_gl(p, n), oracle::ssyt_count(p, n)) << p.str() << " n=" << n;
}

TEST(Partition, DimSn) {
    EXPECT_EQ(dim_sn({2, 1}), 2);
    EXPECT_EQ(dim_sn({7}), 1);
    EXPECT_EQ(dim_sn({1, 1, 1}), 1);
    Integer factorial = 1;
    for (int n = 1; n <= 8; ++n) {
        factorial *= n;
        Integer sum = 0;
        for (const auto& p : partitions_of(n)) {
            EXPECT_EQ(dim_sn(p), oracle::standard_tableaux(p));
            sum += dim_sn(p) * dim_sn(p);
        }
        EXPECT_EQ(sum, factorial) << n;
    }
}

TEST(Partition, ParseText) {
    EXPECT_EQ(parse_partition("[3,1,1]"), Partition({3, 1, 1}));
    EXPECT_EQ(parse_partition(" [ ] "), Partition{});
    EXPECT_THROW(parse_partition("[1,2]"), std::invalid_argument);
    EXPECT_THROW(parse_partition("[1,"), std::invalid_argument);
    EXPECT_THROW(parse_partition("3,1"), std::invalid_argument);
    EXPECT_EQ(Partition({3, 1, 1}).str(), "[3,1,1]");
}

TEST(Partition, ZFactor) {
    EXPECT_EQ(z_factor({1, 1, 1}), 6);
    EXPECT_EQ(z_factor({2, 1}), 2);
    EXPECT_EQ(z_factor({2, 2}), 8);
    EXPECT_EQ(z_factor({}), 1);
}
