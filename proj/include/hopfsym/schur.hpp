#pragma once

// The Hopf algebra Lambda of symmetric functions in the Schur basis:
// outer product (Littlewood-Richardson), outer coproduct, Schur-Hall scalar
// product, skew, antipode and counit, plus the tableau-based monomial
// expansion used as an independent check of all of the above.

#include <algorithm>
#include <map>
#include <vector>

#include "expr.hpp"
#include "memo.hpp"
#include "partition.hpp"

namespace hopfsym {

namespace detail {

// Adds the cells labelled `label` of an LR tableau as a horizontal strip,
// row by row. `prev_strip[r]` holds the number of (label-1) cells in row r.
struct LrStripBuilder {
    const std::vector<int>& content;
    std::vector<int> shape;
    std::vector<std::vector<int>> strips;
    SchurExpr result;

    void run() {
        strips.assign(content.size(), {});
        place_label(0);
    }

    void place_label(std::size_t label) {
        if (label == content.size()) {
            result.add(Partition(shape), 1);
            return;
        }
        const std::vector<int> before = shape;
        const std::size_t rows = before.size() + 1;
        shape.resize(rows, 0);
        strips[label].assign(rows, 0);
        place_row(label, 0, content[label], 0, 0, before);
        shape = before;
    }

    // prefix_label / prefix_prev: cells of this label in rows < row, and of the
    // previous label in rows < row.
    void place_row(std::size_t label, std::size_t row, int remaining, int prefix_label, int prefix_prev,
                   const std::vector<int>& before) {
        if (row == before.size() + 1) {
            if (remaining == 0) {
                std::vector<int> saved = shape;
                while (!shape.empty() && shape.back() == 0) shape.pop_back();
                place_label(label + 1);
                shape = std::move(saved);
            }
            return;
        }
        const int current = row < before.size() ? before[row] : 0;
        int cap = remaining;
        if (row > 0) cap = std::min(cap, before[row - 1] - current);
        if (label > 0) cap = std::min(cap, prefix_prev - prefix_label);
        const int prev_here = label > 0 && row < strips[label - 1].size() ? strips[label - 1][row] : 0;
        for (int take = cap; take >= 0; --take) {
            shape[row] = current + take;
            strips[label][row] = take;
            place_row(label, row + 1, remaining - take, prefix_label + take, prefix_prev + prev_here, before);
        }
        shape[row] = current;
        strips[label][row] = 0;
    }
};

// Enumerates LR fillings of the skew shape outer/inner in reading order
// (rows top to bottom, each row right to left); the content of each filling
// labels a term of s_{outer/inner}.
struct LrSkewFiller {
    const Partition& outer;
    const Partition& inner;
    std::vector<std::pair<int, int>> cells;
    std::vector<std::vector<int>> filling;
    std::vector<int> content;
    SchurExpr result;

    void run() {
        filling.assign(static_cast<std::size_t>(outer.length()), {});
        for (int r = 0; r < outer.length(); ++r) {
            filling[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer[r]), 0);
            for (int c = outer[r] - 1; c >= inner[r]; --c) cells.emplace_back(r, c);
        }
        content.assign(static_cast<std::size_t>(outer.length()) + 1, 0);
        fill(0);
    }

    void fill(std::size_t idx) {
        if (idx == cells.size()) {
            result.add(Partition(content), 1);
            return;
        }
        const auto [r, c] = cells[idx];
        const auto ur = static_cast<std::size_t>(r);
        const auto uc = static_cast<std::size_t>(c);
        int hi = r + 1;  // lattice words put at most label r+1 in row r
        if (c + 1 < outer[ur]) hi = std::min(hi, filling[ur][uc + 1]);
        int lo = 1;
        if (r > 0 && c >= inner[ur - 1]) lo = filling[ur - 1][uc] + 1;
        for (int v = lo; v <= hi; ++v) {
            const auto uv = static_cast<std::size_t>(v - 1);
            if (v > 1 && content[uv] >= content[uv - 1]) continue;
            filling[ur][uc] = v;
            ++content[uv];
            fill(idx + 1);
            --content[uv];
        }
        filling[ur][uc] = 0;
    }
};

inline MemoTable<PartitionPair, SchurExpr, PartitionPairHash>& lr_product_table() {
    static MemoTable<PartitionPair, SchurExpr, PartitionPairHash> table;
    return table;
}

inline MemoTable<PartitionPair, SchurExpr, PartitionPairHash>& skew_table() {
    static MemoTable<PartitionPair, SchurExpr, PartitionPairHash> table;
    return table;
}

inline MemoTable<Partition, TensorExpr, PartitionHash>& coproduct_table() {
    static MemoTable<Partition, TensorExpr, PartitionHash> table;
    return table;
}

}  // namespace detail

/// s_lambda * s_mu in the Schur basis, by LR tableaux (horizontal strips
/// with the lattice-word condition). Results are memoized.
inline const SchurExpr& lr_product(const Partition& lambda, const Partition& mu) {
    // the product is commutative; build on the longer shape with the shorter content
    const bool swap = lambda.weight() < mu.weight() || (lambda.weight() == mu.weight() && mu < lambda);
    const Partition& base = swap ? mu : lambda;
    const Partition& added = swap ? lambda : mu;
    return detail::lr_product_table().get_or_compute({base, added}, [&] {
        detail::LrStripBuilder builder{added.parts(), base.parts(), {}, {}};
        builder.run();
        return std::move(builder.result);
    });
}

inline Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;
    if (!contains(lambda, nu) || !contains(mu, nu)) return 0;
    return lr_product(lambda, mu).coeff(nu);
}

inline SchurExpr outer_product(const SchurExpr& f, const SchurExpr& g) {
    SchurExpr out;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g) out.add_scaled(lr_product(a, b), checked_mul(ca, cb));
    return out;
}

/// s_{nu/mu} = sum_lambda C^nu_{lambda mu} s_lambda, by LR fillings of nu/mu.
inline const SchurExpr& skew_basis(const Partition& nu, const Partition& mu) {
    return detail::skew_table().get_or_compute({nu, mu}, [&] {
        if (!contains(mu, nu)) return SchurExpr{};
        detail::LrSkewFiller filler{nu, mu, {}, {}, {}, {}};
        filler.run();
        return std::move(filler.result);
    });
}

/// f / g: the adjoint of multiplication by g under the Schur-Hall form.
inline SchurExpr skew(const SchurExpr& f, const SchurExpr& g) {
    SchurExpr out;
    for (const auto& [nu, cn] : f)
        for (const auto& [mu, cm] : g) out.add_scaled(skew_basis(nu, mu), checked_mul(cn, cm));
    return out;
}

/// Delta(s_lambda) = sum_eta s_eta (x) s_{lambda/eta}.
inline const TensorExpr& coproduct_basis(const Partition& lambda) {
    return detail::coproduct_table().get_or_compute(lambda, [&] {
        TensorExpr out;
        for (int d = 0; d <= lambda.weight(); ++d)
            for (const Partition& eta : partitions_of(d))
                if (contains(eta, lambda))
                    for (const auto& [xi, c] : skew_basis(lambda, eta)) out.add({eta, xi}, c);
        return out;
    });
}

inline TensorExpr outer_coproduct(const SchurExpr& f) {
    TensorExpr out;
    for (const auto& [lambda, c] : f) out.add_scaled(coproduct_basis(lambda), c);
    return out;
}

/// Schur-Hall scalar product; Schur functions are orthonormal.
inline Integer scalar(const SchurExpr& f, const SchurExpr& g) {
    Integer total = 0;
    const SchurExpr& small = f.size() <= g.size() ? f : g;
    const SchurExpr& large = f.size() <= g.size() ? g : f;
    for (const auto& [lambda, c] : small) total = checked_add(total, checked_mul(c, large.coeff(lambda)));
    return total;
}

/// Scalar product on Lambda (x) Lambda: product of the factorwise forms.
inline Integer scalar(const TensorExpr& f, const TensorExpr& g) {
    Integer total = 0;
    const TensorExpr& small = f.size() <= g.size() ? f : g;
    const TensorExpr& large = f.size() <= g.size() ? g : f;
    for (const auto& [key, c] : small) total = checked_add(total, checked_mul(c, large.coeff(key)));
    return total;
}

inline SchurExpr antipode(const SchurExpr& f) {
    SchurExpr out;
    for (const auto& [lambda, c] : f) out.add(conjugate(lambda), lambda.weight() % 2 ? -c : c);
    return out;
}

inline Integer counit(const SchurExpr& f) { return f.coeff(Partition{}); }

/// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
inline TensorExpr tensor_product(const TensorExpr& f, const TensorExpr& g) {
    TensorExpr out;
    for (const auto& [ab, c1] : f) {
        for (const auto& [cd, c2] : g) {
            const Integer scale = checked_mul(c1, c2);
            const SchurExpr& left = lr_product(ab.first, cd.first);
            const SchurExpr& right = lr_product(ab.second, cd.second);
            for (const auto& [l, cl] : left)
                for (const auto& [r, cr] : right) out.add({l, r}, checked_mul(scale, checked_mul(cl, cr)));
        }
    }
    return out;
}

/// Exponent vector -> coefficient.
using MonomialMap = std::map<std::vector<int>, Integer>;

namespace detail {

struct SsytWalker {
    const Partition& shape;
    int variables;
    std::vector<std::vector<int>> filling;
    std::vector<int> exponents;
    MonomialMap* out;
    Integer scale;

    void walk(int r, int c) {
        if (r == shape.length()) {
            auto [it, inserted] = out->try_emplace(exponents, scale);
            if (!inserted) it->second = checked_add(it->second, scale);
            return;
        }
        if (c == shape[static_cast<std::size_t>(r)]) {
            walk(r + 1, 0);
            return;
        }
        const auto ur = static_cast<std::size_t>(r);
        const auto uc = static_cast<std::size_t>(c);
        int lo = c > 0 ? filling[ur][uc - 1] : 1;
        if (r > 0) lo = std::max(lo, filling[ur - 1][uc] + 1);
        for (int v = lo; v <= variables; ++v) {
            filling[ur][uc] = v;
            ++exponents[static_cast<std::size_t>(v - 1)];
            walk(r, c + 1);
            --exponents[static_cast<std::size_t>(v - 1)];
        }
    }
};

}  // namespace detail

/// Expansion of f in n variables, summing x^{weight(T)} over semistandard
/// tableaux T with entries in 1..n.
inline MonomialMap monomial_expansion(const SchurExpr& f, int n) {
    MonomialMap out;
    for (const auto& [lambda, c] : f) {
        if (lambda.length() > n) continue;
        detail::SsytWalker walker{lambda, n, {}, std::vector<int>(static_cast<std::size_t>(n), 0), &out, c};
        for (int r = 0; r < lambda.length(); ++r)
            walker.filling.emplace_back(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r)]), 0);
        walker.walk(0, 0);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace hopfsym
