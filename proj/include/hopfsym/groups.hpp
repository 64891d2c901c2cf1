#pragma once

// The subgroup H_{1^3}(4) of GL(4) stabilizing a rank-3 antisymmetric
// tensor eta supported on the first three basis vectors: formal dimensions
// of its characters, determinant modification rules for labels of length 4,
// products against (2), and the defining stabilizer equation.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "expr.hpp"
#include "partition.hpp"
#include "twist.hpp"

namespace hopfsym {

/// Formal dimension of (lambda)_pi in H_pi(n): dimension of its lift to GL(n).
/// Virtual characters can have negative formal dimension.
inline Integer formal_dimension(const SubgroupChar& a, int n) {
    Integer total = 0;
    for (const auto& [lambda, c] : lift(a)) total = checked_add(total, checked_mul(c, dim_gl(lambda, n)));
    return total;
}

/// {lambda_1..lambda_n} = eps^{lambda_n} {lambda_1 - lambda_n, ..., 0}.
/// Returns (power of the determinant, reduced partition).
inline std::pair<int, Partition> gl_det_factor(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw std::invalid_argument("gl_det_factor: " + lambda.str() + " has more than " + std::to_string(n) + " parts");
    const int k = lambda[static_cast<std::size_t>(n - 1)];
    std::vector<int> parts = lambda.parts();
    for (int& p : parts) p -= k;
    return {k, Partition(std::move(parts))};
}

/// A term eps^k (lambda): the key orders by determinant power, then label.
using EpsilonLabel = std::pair<int, Partition>;

/// Z-combination of eps^k (lambda)_pi with l(lambda) < n.
using EpsilonExpr = LinearCombination<EpsilonLabel>;

struct ModificationRelation {
    Partition label;              ///< the length-4 label being rewritten
    SchurExpr branch_rest;        ///< (lambda) = {lambda} - branch_rest
    EpsilonExpr reduced;          ///< (lambda) = sum eps^k (mu), l(mu) <= 3
    Integer dimension = 0;        ///< formal dimension of (lambda) in H_{1^3}(4)
    Integer gl_dimension = 0;     ///< dimension of {lambda} in GL(4)
    std::map<Partition, Integer> term_dimensions;  ///< formal dimensions of the (mu) appearing
};

namespace detail {

inline const Partition& h13_pi() {
    static const Partition pi{1, 1, 1};
    return pi;
}

// Rewrites (lambda)_{1^3} for l(lambda) = 4 into determinant-reduced form:
// (lambda) = eps^k branch({reduced}) - sum of the other branch terms, each
// length-4 term rewritten recursively (they have smaller weight).
inline EpsilonExpr h13_reduce(const Partition& lambda, std::map<Partition, EpsilonExpr>& memo) {
    if (lambda.length() < 4) return EpsilonExpr({0, lambda});
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    const auto [k, reduced] = gl_det_factor(lambda, 4);
    EpsilonExpr out;
    for (const auto& [mu, c] : branch(s(reduced), h13_pi()).terms) out.add({k, mu}, c);
    SchurExpr rest = branch(s(lambda), h13_pi()).terms;
    rest.add(lambda, -1);
    for (const auto& [mu, c] : rest) out.add_scaled(h13_reduce(mu, memo), -c);
    memo.emplace(lambda, out);
    return out;
}

}  // namespace detail

/// The six determinant modification rules for H_{1^3}(4), derived by
/// branching plus determinant reduction, each checked for formal-dimension
/// consistency (eps has dimension 1).
inline std::vector<ModificationRelation> modification_relations_h13() {
    static const std::vector<Partition> labels = {{1, 1, 1, 1}, {2, 1, 1, 1}, {2, 2, 1, 1},
                                                  {2, 2, 2, 1}, {2, 2, 2, 2}, {3, 1, 1, 1}};
    std::map<Partition, EpsilonExpr> memo;
    std::vector<ModificationRelation> out;
    for (const Partition& lambda : labels) {
        ModificationRelation rel;
        rel.label = lambda;
        rel.branch_rest = branch(s(lambda), detail::h13_pi()).terms;
        rel.branch_rest.add(lambda, -1);
        rel.reduced = detail::h13_reduce(lambda, memo);
        rel.dimension = formal_dimension({detail::h13_pi(), s(lambda)}, 4);
        rel.gl_dimension = dim_gl(lambda, 4);
        Integer reduced_dim = 0;
        for (const auto& [term, c] : rel.reduced) {
            const Integer d = formal_dimension({detail::h13_pi(), s(term.second)}, 4);
            rel.term_dimensions.emplace(term.second, d);
            reduced_dim = checked_add(reduced_dim, checked_mul(c, d));
        }
        Integer unreduced_dim = rel.gl_dimension;
        for (const auto& [mu, c] : rel.branch_rest) {
            const Integer d = formal_dimension({detail::h13_pi(), s(mu)}, 4);
            rel.term_dimensions.emplace(mu, d);
            unreduced_dim = checked_add(unreduced_dim, checked_mul(-c, d));
        }
        if (reduced_dim != rel.dimension || unreduced_dim != rel.dimension)
            throw std::logic_error("modification relation for " + lambda.str() + " fails the dimension check");
        out.push_back(std::move(rel));
    }
    return out;
}

struct ProductRow {
    Partition left;
    Partition right;
    SubgroupChar product;
    Integer left_dimension = 0;
    Integer right_dimension = 0;
    std::vector<std::pair<Partition, Integer>> term_dimensions;  ///< canonical order
    Integer dimension_sum = 0;  ///< sum of coefficient * formal dimension

    [[nodiscard]] bool dimensions_consistent() const {
        return dimension_sum == checked_mul(left_dimension, right_dimension);
    }
};

/// Products (lambda).(2) in H_{1^3}(4) for lambda in (2),(1,1),(3),(2,1),(1,1,1).
inline std::vector<ProductRow> product_table_h13(ProductRoute route = ProductRoute::kernel) {
    static const std::vector<Partition> rows = {{2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}};
    const Partition right{2};
    const Partition& pi = detail::h13_pi();
    std::vector<ProductRow> out;
    for (const Partition& left : rows) {
        ProductRow row;
        row.left = left;
        row.right = right;
        row.product = twisted_product({pi, s(left)}, {pi, s(right)}, route);
        row.left_dimension = formal_dimension({pi, s(left)}, 4);
        row.right_dimension = formal_dimension({pi, s(right)}, 4);
        for (const auto& [mu, c] : row.product.terms) {
            const Integer d = formal_dimension({pi, s(mu)}, 4);
            row.term_dimensions.emplace_back(mu, d);
            row.dimension_sum = checked_add(row.dimension_sum, checked_mul(c, d));
        }
        out.push_back(std::move(row));
    }
    return out;
}

using RationalMatrix4 = std::array<std::array<Rational, 4>, 4>;

/// eta_{pqr}: the Levi-Civita symbol on indices 0..2, zero if any index is 3.
inline int eta(int p, int q, int r) {
    if (p > 2 || q > 2 || r > 2 || p == q || q == r || p == r) return 0;
    // sign of the permutation (p, q, r) of (0, 1, 2)
    int inversions = (p > q) + (p > r) + (q > r);
    return inversions % 2 ? -1 : 1;
}

/// True iff sum_{pqr} A[x][p] A[y][q] A[z][r] eta_{pqr} = eta_{xyz} for all x, y, z.
inline bool stabilizer_check(const RationalMatrix4& a) {
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z) {
                Rational total = 0;
                for (int p = 0; p < 3; ++p)
                    for (int q = 0; q < 3; ++q)
                        for (int r = 0; r < 3; ++r) {
                            const int e = eta(p, q, r);
                            if (e == 0) continue;
                            total += e * a[static_cast<std::size_t>(x)][static_cast<std::size_t>(p)] *
                                     a[static_cast<std::size_t>(y)][static_cast<std::size_t>(q)] *
                                     a[static_cast<std::size_t>(z)][static_cast<std::size_t>(r)];
                        }
                if (total != eta(x, y, z)) return false;
            }
    return true;
}

}  // namespace hopfsym
