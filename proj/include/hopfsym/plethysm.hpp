#pragma once

#include <stdexcept>

#include "characters.hpp"
#include "expr.hpp"
#include "memo.hpp"
#include "partition.hpp"

namespace hopfsym {

namespace detail {

inline MemoTable<PartitionPair, SchurExpr, PartitionPairHash>& plethysm_table() {
    static MemoTable<PartitionPair, SchurExpr, PartitionPairHash> table;
    return table;
}

/// p_k[f] for f given in power sums: every p_rho becomes p_{k*rho}.
inline PowerSumExpr scale_power_sums(const PowerSumExpr& f, int k) {
    PowerSumExpr out;
    for (const auto& [rho, c] : f) {
        std::vector<int> parts = rho.parts();
        for (int& part : parts) part *= k;
        out.add(Partition(std::move(parts)), c);
    }
    return out;
}

/// s_outer[f], with f already expanded in power sums.
inline SchurExpr plethysm_power_sum(const PowerSumExpr& inner, const Partition& outer) {
    if (outer.empty()) return unit();
    PowerSumExpr total;
    for (const Partition& rho : partitions_of(outer.weight())) {
        const Integer chi = sn_character(outer, rho);
        if (chi == 0) continue;
        PowerSumExpr term;
        term.add(Partition{}, Rational(chi, z_factor(rho)));
        for (int part : rho.parts()) term = multiply(term, scale_power_sums(inner, part));
        for (const auto& [sigma, c] : term) total.add(sigma, c);
    }
    return from_power_sum(total);
}

inline void check_plethysm_inner(const SchurExpr& inner) {
    for (const auto& [lambda, c] : inner) {
        if (lambda.empty()) throw std::invalid_argument("plethysm: inner argument has a constant term");
        if (c < 0) throw std::invalid_argument("plethysm: inner argument must be Schur-positive");
    }
}

}  // namespace detail

/// s_outer[s_inner], i.e. {inner} o {outer} in the composition notation
/// where the left factor is substituted into the right one. Memoized.
inline const SchurExpr& plethysm_basis(const Partition& inner, const Partition& outer) {
    if (inner.empty()) throw std::invalid_argument("plethysm: inner argument has a constant term");
    return detail::plethysm_table().get_or_compute({inner, outer}, [&] {
        if (inner == Partition{1}) return s(outer);
        return detail::plethysm_power_sum(to_power_sum(s(inner)), outer);
    });
}

/// outer[inner] for a Schur-positive inner argument without constant term.
/// Computed through power sums: p_k[p_m] = p_{km}.
inline SchurExpr plethysm(const SchurExpr& inner, const SchurExpr& outer) {
    detail::check_plethysm_inner(inner);
    SchurExpr out;
    if (inner.is_zero()) {
        out.add(Partition{}, counit(outer));
        return out;
    }
    if (inner.size() == 1 && inner.begin()->second == 1) {
        const Partition& kappa = inner.begin()->first;
        for (const auto& [mu, c] : outer) out.add_scaled(plethysm_basis(kappa, mu), c);
        return out;
    }
    const PowerSumExpr inner_ps = to_power_sum(inner);
    for (const auto& [mu, c] : outer) out.add_scaled(detail::plethysm_power_sum(inner_ps, mu), c);
    return out;
}

}  // namespace hopfsym
