#pragma once

// Symmetric-group characters (Murnaghan-Nakayama), the Schur <-> power-sum
// transition, and the inner (Kronecker) product with its dual coproduct.
//
// The inner structure is defined degreewise: products of pieces of unequal
// degree vanish, and delta(s_()) = s_() (x) s_(). The pair (*, delta) is not
// a bialgebra, so no compatibility between the two is provided or assumed.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "expr.hpp"
#include "memo.hpp"
#include "partition.hpp"
#include "schur.hpp"

namespace hopfsym {

namespace detail {

inline MemoTable<PartitionPair, Integer, PartitionPairHash>& character_table() {
    static MemoTable<PartitionPair, Integer, PartitionPairHash> table;
    return table;
}

inline MemoTable<PartitionPair, SchurExpr, PartitionPairHash>& kronecker_table() {
    static MemoTable<PartitionPair, SchurExpr, PartitionPairHash> table;
    return table;
}

inline Partition from_beta(const std::vector<int>& beta_desc) {
    std::vector<int> parts(beta_desc.size());
    const int len = static_cast<int>(beta_desc.size());
    for (int i = 0; i < len; ++i) parts[static_cast<std::size_t>(i)] = beta_desc[static_cast<std::size_t>(i)] - (len - 1 - i);
    return Partition(std::move(parts));
}

}  // namespace detail

/// chi^lambda(rho): the irreducible S_n character lambda on cycle type rho.
/// Evaluated by the Murnaghan-Nakayama rule: strip a rim hook of length
/// rho_1, recurse on the rest of rho.
inline Integer sn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.weight() != rho.weight())
        throw std::invalid_argument("sn_character: weights differ (" + lambda.str() + " vs " + rho.str() + ")");
    if (rho.empty()) return 1;
    return detail::character_table().get_or_compute({lambda, rho}, [&] {
        const int k = rho[0];
        const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
        const int len = lambda.length();
        std::vector<int> beta(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
        const std::set<int> occupied(beta.begin(), beta.end());
        Integer total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            const int target = beta[i] - k;
            if (target < 0 || occupied.count(target)) continue;
            int between = 0;
            for (int b : beta)
                if (b > target && b < beta[i]) ++between;
            std::vector<int> moved = beta;
            moved[i] = target;
            std::sort(moved.begin(), moved.end(), std::greater<>());
            const Integer sub = sn_character(detail::from_beta(moved), rest);
            total = checked_add(total, between % 2 ? -sub : sub);
        }
        return total;
    });
}

/// Exact rational combination of power sums p_rho.
class PowerSumExpr {
public:
    using map_type = std::map<Partition, Rational>;

    void add(const Partition& rho, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(rho, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    [[nodiscard]] Rational coeff(const Partition& rho) const {
        auto it = terms_.find(rho);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    [[nodiscard]] const map_type& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] auto begin() const noexcept { return terms_.begin(); }
    [[nodiscard]] auto end() const noexcept { return terms_.end(); }

    friend bool operator==(const PowerSumExpr&, const PowerSumExpr&) = default;

private:
    map_type terms_;
};

/// p_rho * p_sigma = p_{rho u sigma}
inline Partition union_of(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

inline PowerSumExpr multiply(const PowerSumExpr& f, const PowerSumExpr& g) {
    PowerSumExpr out;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g) out.add(union_of(a, b), ca * cb);
    return out;
}

/// s_lambda = sum_rho chi^lambda(rho) / z_rho p_rho
inline PowerSumExpr to_power_sum(const SchurExpr& f) {
    PowerSumExpr out;
    for (const auto& [lambda, c] : f)
        for (const Partition& rho : partitions_of(lambda.weight()))
            out.add(rho, Rational(checked_mul(c, sn_character(lambda, rho)), z_factor(rho)));
    return out;
}

/// p_rho = sum_nu chi^nu(rho) s_nu; throws if the result is not integral.
inline SchurExpr from_power_sum(const PowerSumExpr& f) {
    std::map<int, std::vector<std::pair<Partition, Rational>>> by_degree;
    for (const auto& [rho, c] : f) by_degree[rho.weight()].emplace_back(rho, c);
    SchurExpr out;
    for (const auto& [degree, terms] : by_degree) {
        for (const Partition& nu : partitions_of(degree)) {
            Rational total = 0;
            for (const auto& [rho, c] : terms) total += c * sn_character(nu, rho);
            out.add(nu, to_integer(total));
        }
    }
    return out;
}

/// s_lambda * s_mu (Kronecker product) for |lambda| = |mu|; memoized.
inline const SchurExpr& kronecker_product(const Partition& lambda, const Partition& mu) {
    const bool swap = mu < lambda;
    const Partition& a = swap ? mu : lambda;
    const Partition& b = swap ? lambda : mu;
    return detail::kronecker_table().get_or_compute({a, b}, [&] {
        SchurExpr out;
        const int n = a.weight();
        if (n != b.weight()) return out;
        BigInt factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        const auto classes = partitions_of(n);
        for (const Partition& nu : classes) {
            BigInt total = 0;
            for (const Partition& rho : classes) {
                const BigInt class_size = factorial / z_factor(rho);
                total += class_size * sn_character(a, rho) * sn_character(b, rho) * sn_character(nu, rho);
            }
            if (total % factorial != 0) throw std::logic_error("non-integral Kronecker coefficient");
            out.add(nu, to_integer(BigInt(total / factorial)));
        }
        return out;
    });
}

inline Integer kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return kronecker_product(lambda, mu).coeff(nu);
}

/// Degreewise bilinear Kronecker product; cross-degree pairs give zero.
inline SchurExpr inner_product(const SchurExpr& f, const SchurExpr& g) {
    SchurExpr out;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g)
            if (a.weight() == b.weight()) out.add_scaled(kronecker_product(a, b), checked_mul(ca, cb));
    return out;
}

/// delta(s_lambda) = sum_{mu,nu} gamma^lambda_{mu nu} s_mu (x) s_nu
inline TensorExpr inner_coproduct(const SchurExpr& f) {
    TensorExpr out;
    for (const auto& [lambda, c] : f) {
        const auto level = partitions_of(lambda.weight());
        for (const Partition& mu : level)
            for (const Partition& nu : level) {
                const Integer g = kronecker_product(mu, nu).coeff(lambda);
                if (g != 0) out.add({mu, nu}, checked_mul(c, g));
            }
    }
    return out;
}

/// Degree-d piece of the Cauchy kernel: sum_{xi |- d} s_xi (x) s_xi.
inline TensorExpr cauchy_kernel(int degree) {
    TensorExpr out;
    for (const Partition& xi : partitions_of(degree)) out.add({xi, xi}, 1);
    return out;
}

}  // namespace hopfsym
