#include <random>

#include <gtest/gtest.h>

#include "hopfsym/twist.hpp"

using namespace hopfsym;

namespace {

SubgroupChar sub(const Partition& pi, SchurExpr terms) { return {pi, std::move(terms)}; }

SchurExpr random_expr(std::mt19937& rng, int max_weight) {
    std::uniform_int_distribution<int> weight(0, max_weight);
    const auto level = partitions_of(weight(rng));
    std::uniform_int_distribution<std::size_t> pick(0, level.size() - 1);
    return s(level[pick(rng)]);
}

}  // namespace

TEST(Twist, BranchExamples) {
    EXPECT_EQ(branch(s({1, 1, 1, 1}), {1, 1, 1}), sub({1, 1, 1}, s({1, 1, 1, 1}) + s({1})));
    EXPECT_EQ(branch(s({2}), {2}), sub({2}, s({2}) + unit()));
    EXPECT_EQ(branch(s({1}), {1, 1, 1}), sub({1, 1, 1}, s({1})));
}

TEST(Twist, LiftExamples) {
    EXPECT_EQ(lift(sub({1, 1, 1}, s({1, 1, 1, 1}))), s({1, 1, 1, 1}) - s({1}));
    EXPECT_EQ(lift(sub({2}, s({2}))), s({2}) - unit());
    EXPECT_EQ(lift(sub({2, 1}, s({1, 1}))), s({1, 1}));
}

TEST(Twist, SkewBySeries) {
    EXPECT_EQ(skew_by_series(s({2, 1}), series_M(3)), s({2, 1}) + s({2}) + s({1, 1}) + s({1}));
    EXPECT_EQ(skew_by_series(3 * s({2, 1}) - s({3}), SchurSeries::unit(3)), 3 * s({2, 1}) - s({3}));
    EXPECT_EQ(skew_by_series(skew_by_series(s({3, 2}), series_M(5)), series_L(5)), s({3, 2}));
    EXPECT_THROW(skew_by_series(s({3}), series_M(2)), std::domain_error);
}

TEST(Twist, BranchLiftRoundTrip) {
    for (const Partition& pi : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{1, 1, 1}})
        for (const auto& lambda : partitions_up_to(8)) {
            EXPECT_EQ(branch(lift(sub(pi, s(lambda))), pi), sub(pi, s(lambda))) << pi.str() << lambda.str();
            EXPECT_EQ(lift(branch(s(lambda), pi)), s(lambda)) << pi.str() << lambda.str();
        }
}

TEST(Twist, ClassicalBranchings) {
    for (const auto& lambda : partitions_up_to(6)) {
        const int d = lambda.weight();
        EXPECT_EQ(lift(sub({2}, s(lambda))), skew_by_series(s(lambda), series_C(d)));
        EXPECT_EQ(lift(sub({1, 1}, s(lambda))), skew_by_series(s(lambda), series_A(d)));
        EXPECT_EQ(lift(sub({1}, s(lambda))), skew_by_series(s(lambda), series_L(d)));
    }
    // [1,1] = {1,1} for O(n); <1,1> = {1,1} - {0} for Sp(n)
    EXPECT_EQ(lift(sub({2}, s({1, 1}))), s({1, 1}));
    EXPECT_EQ(lift(sub({1, 1}, s({1, 1}))), s({1, 1}) - unit());
}

TEST(Twist, NewellLittlewood) {
    EXPECT_EQ(newell_littlewood(sub({2}, s({1})), sub({2}, s({1}))), sub({2}, s({2}) + s({1, 1}) + unit()));
    for (const auto& lambda : partitions_up_to(4))
        EXPECT_EQ(newell_littlewood(sub({2}, s(lambda)), sub({2}, unit())), sub({2}, s(lambda)));
    EXPECT_EQ(newell_littlewood(sub({1, 1}, s({1, 1})), sub({1, 1}, s({1, 1}))).terms,
              twisted_product_lift(sub({1, 1}, s({1, 1})), sub({1, 1}, s({1, 1}))).terms);
    EXPECT_THROW(newell_littlewood(sub({3}, s({1})), sub({3}, s({1}))), std::invalid_argument);
    EXPECT_THROW(newell_littlewood(sub({2}, s({1})), sub({1, 1}, s({1}))), std::invalid_argument);
}

TEST(Twist, PiNewellLittlewoodTableExamples) {
    const Partition pi{1, 1, 1};
    EXPECT_EQ(pi_newell_littlewood(sub(pi, s({1, 1, 1})), sub(pi, s({2}))),
              sub(pi, s({3, 1, 1}) + s({2, 1, 1, 1}) + s({2}) + s({1, 1})));
    EXPECT_EQ(pi_newell_littlewood(sub(pi, s({2})), sub(pi, s({2}))), sub(pi, s({4}) + s({3, 1}) + s({2, 2})));
}

TEST(Twist, ThreeRoutesAgree) {
    for (const Partition& pi : {Partition{2}, Partition{1, 1}})
        for (const auto& lambda : partitions_up_to(4))
            for (const auto& mu : partitions_up_to(4)) {
                const SubgroupChar a = sub(pi, s(lambda));
                const SubgroupChar b = sub(pi, s(mu));
                const SubgroupChar expected = twisted_product_lift(a, b);
                EXPECT_EQ(pi_newell_littlewood(a, b), expected) << pi.str() << lambda.str() << mu.str();
                EXPECT_EQ(twisted_product_cocycle(a, b), expected) << pi.str() << lambda.str() << mu.str();
                EXPECT_EQ(newell_littlewood(a, b), expected) << pi.str() << lambda.str() << mu.str();
            }
    const Partition pi{1, 1, 1};
    for (const auto& lambda : partitions_up_to(3))
        for (const auto& mu : partitions_up_to(3)) {
            const SubgroupChar a = sub(pi, s(lambda));
            const SubgroupChar b = sub(pi, s(mu));
            const SubgroupChar expected = twisted_product_lift(a, b);
            EXPECT_EQ(twisted_product(a, b, ProductRoute::kernel), expected);
            EXPECT_EQ(twisted_product(a, b, ProductRoute::cocycle), expected);
        }
}

TEST(Twist, TrivialTwist) {
    const Partition pi{1};
    for (const auto& lambda : partitions_up_to(3))
        for (const auto& mu : partitions_up_to(3)) {
            const SubgroupChar a = sub(pi, s(lambda));
            const SubgroupChar b = sub(pi, s(mu));
            EXPECT_EQ(twisted_product_lift(a, b).terms, lr_product(lambda, mu));
            EXPECT_EQ(twisted_product_cocycle(a, b).terms, lr_product(lambda, mu));
        }
    EXPECT_EQ(twisted_product_lift(sub({2}, unit()), sub({2}, unit())), sub({2}, unit()));
}

TEST(Twist, CommutativeAndAssociative) {
    std::mt19937 rng(20261017);
    for (const Partition& pi : {Partition{2}, Partition{1, 1, 1}})
        for (int trial = 0; trial < 12; ++trial) {
            const SubgroupChar a = sub(pi, random_expr(rng, 3));
            const SubgroupChar b = sub(pi, random_expr(rng, 3));
            const SubgroupChar c = sub(pi, random_expr(rng, 3));
            EXPECT_EQ(twisted_product_lift(a, b), twisted_product_lift(b, a));
            EXPECT_EQ(twisted_product_lift(twisted_product_lift(a, b), c),
                      twisted_product_lift(a, twisted_product_lift(b, c)));
        }
}

TEST(Twist, FiltrationDegrees) {
    for (const Partition& pi : {Partition{2}, Partition{1, 1, 1}, Partition{2, 1}})
        for (const auto& lambda : partitions_up_to(3))
            for (const auto& mu : partitions_up_to(3)) {
                const int top = lambda.weight() + mu.weight();
                for (const auto& [nu, c] : pi_newell_littlewood(sub(pi, s(lambda)), sub(pi, s(mu))).terms) {
                    EXPECT_LE(nu.weight(), top);
                    EXPECT_EQ((top - nu.weight()) % pi.weight(), 0);
                }
            }
}

TEST(Twist, ProductErrors) {
    EXPECT_THROW(twisted_product_lift(sub({2}, s({1})), sub({1, 1}, s({1}))), std::invalid_argument);
    EXPECT_THROW(pi_newell_littlewood(sub({2}, s({2})), sub({2}, s({2})), 3), std::domain_error);
}

TEST(Twist, Convolution) {
    const Cochain1 m = Cochain1::from_series(series_M(6));
    const Cochain1 l = Cochain1::from_series(series_L(6));
    const Cochain1 eps = Cochain1::counit(6);
    const Cochain1 eps_m = convolution(eps, m);
    const Cochain1 m_l = convolution(m, l);
    for (const auto& lambda : partitions_up_to(6)) {
        EXPECT_EQ(eps_m(lambda), m(lambda));
        EXPECT_EQ(m_l(lambda), eps(lambda)) << lambda.str();
    }
    EXPECT_EQ(convolution(m, m)(Partition{1}), 2);
    EXPECT_THROW(m(Partition{7}), std::domain_error);
}

TEST(Twist, Coboundary) {
    const Cochain2 dm = coboundary1(Cochain1::from_series(series_M(6)), Cochain1::from_series(series_L(6)));
    const Cochain2 de = coboundary1(Cochain1::counit(6), Cochain1::counit(6));
    for (const auto& x : partitions_up_to(6))
        for (const auto& y : partitions_up_to(6 - x.weight())) {
            const Integer trivial = x.empty() && y.empty() ? 1 : 0;
            EXPECT_EQ(dm(x, y), trivial) << x.str() << y.str();
            EXPECT_EQ(de(x, y), trivial);
        }
    const Cochain2 dm2 = coboundary1(Cochain1::from_series(series_Mpi({2}, 4)),
                                     Cochain1::from_series(series_Mpi_inverse({2}, 4)));
    EXPECT_EQ(dm2(Partition{1}, Partition{1}), 1);
    EXPECT_THROW(coboundary1(Cochain1::from_series(series_M(4)), Cochain1::from_series(series_M(4))),
                 std::invalid_argument);
}
