#include <gtest/gtest.h>

#include "hopfsym/plethysm.hpp"
#include "oracles.hpp"

using namespace hopfsym;

TEST(Plethysm, SquareOfExteriorSquare) {
    EXPECT_EQ(plethysm(s({1, 1}), s({2})), s({2, 2}) + s({1, 1, 1, 1}));
    EXPECT_EQ(oracle::plethysm_by_substitution({1, 1}, {2}, 4), s({2, 2}) + s({1, 1, 1, 1}));
}

TEST(Plethysm, IdentityInner) {
    for (const auto& mu : partitions_up_to(6)) EXPECT_EQ(plethysm(s({1}), s(mu)), s(mu));
}

TEST(Plethysm, ExteriorSquareOfSymmetricSquare) {
    EXPECT_EQ(oracle::plethysm_by_substitution({2}, {1, 1}, 4), s({3, 1}));
    EXPECT_EQ(plethysm(s({2}), s({1, 1})), s({3, 1}));
}

TEST(Plethysm, AgreesWithSubstitutionOracle) {
    const std::vector<std::pair<Partition, Partition>> cases{
        {{2}, {2}}, {{2}, {3}}, {{1, 1}, {3}}, {{1, 1}, {2, 1}}, {{2}, {2, 1}}, {{2, 1}, {2}}, {{3}, {2}}, {{1, 1, 1}, {2}}};
    for (const auto& [inner, outer] : cases) {
        const int degree = inner.weight() * outer.weight();
        EXPECT_EQ(plethysm(s(inner), s(outer)), oracle::plethysm_by_substitution(inner, outer, degree))
            << outer.str() << "[" << inner.str() << "]";
    }
}

TEST(Plethysm, RejectsBadInner) {
    EXPECT_THROW(plethysm(unit() + s({1}), s({2})), std::invalid_argument);
    EXPECT_THROW(plethysm(s({1}) - s({2}), s({2})), std::invalid_argument);
    EXPECT_THROW(plethysm_basis({}, {2}), std::invalid_argument);
}

TEST(Plethysm, ConstantOuterTerm) {
    EXPECT_EQ(plethysm(s({2}), unit()), unit());
    EXPECT_EQ(plethysm(s({2}), 3 * unit() + s({1})), 3 * unit() + s({2}));
}

TEST(Plethysm, DegreeMultiplicativity) {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (const auto& inner : partitions_of(a))
                for (const auto& outer : partitions_of(b)) {
                    const SchurExpr p = plethysm(s(inner), s(outer));
                    EXPECT_FALSE(p.is_zero());
                    EXPECT_TRUE(is_homogeneous(p, a * b)) << outer.str() << "[" << inner.str() << "]";
                    for (const auto& [nu, c] : p) EXPECT_GT(c, 0);
                }
}

TEST(Plethysm, OuterProductDistributes) {
    // (f g)[h] = f[h] g[h]
    const std::vector<Partition> inners{{2}, {1, 1}, {2, 1}};
    const std::vector<Partition> outers{{1}, {2}, {1, 1}};
    for (const auto& h : inners)
        for (const auto& f : outers)
            for (const auto& g : outers) {
                if (h.weight() * (f.weight() + g.weight()) > 9) continue;
                EXPECT_EQ(plethysm(s(h), outer_product(s(f), s(g))),
                          outer_product(plethysm(s(h), s(f)), plethysm(s(h), s(g))));
            }
}

TEST(Plethysm, InnerSumSplitsOverOuterCoproduct) {
    // s_mu[f + g] = sum C^mu_{ab} s_a[f] s_b[g]
    const SchurExpr f = s({2});
    const SchurExpr g = s({1, 1});
    for (const auto& mu : partitions_up_to(3)) {
        SchurExpr expected;
        for (const auto& [ab, c] : outer_coproduct(s(mu)))
            expected.add_scaled(outer_product(plethysm(f, s(ab.first)), plethysm(g, s(ab.second))), c);
        EXPECT_EQ(plethysm(f + g, s(mu)), expected) << mu.str();
    }
}

TEST(Plethysm, DimensionReadingAsBranching) {
    // {1^2} o {2} at n = 4 is the GL(6) irrep {2} viewed in GL(4)
    Integer count = 0;
    for (const auto& [nu, c] : plethysm(s({1, 1}), s({2}))) count += c * oracle::ssyt_count(nu, 4);
    EXPECT_EQ(dim_gl({1, 1}, 4), 6);
    EXPECT_EQ(count, dim_gl({2}, 6));
    EXPECT_EQ(count, 21);
}

TEST(Plethysm, CoproductOfPlethysm) {
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; a * b <= 8; ++b)
            for (const auto& inner : partitions_of(a))
                for (const auto& outer : partitions_of(b))
                    EXPECT_EQ(outer_coproduct(plethysm(s(inner), s(outer))), oracle::coproduct_of_plethysm(inner, outer))
                        << outer.str() << "[" << inner.str() << "]";
}
