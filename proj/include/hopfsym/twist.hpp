#pragma once

// Branching operators GL(n) -> H_pi(n), their inverses, and the twisted
// product of subgroup characters (lambda)_pi computed three ways:
//   kernel  - skew both factors by the proper-cut kernel K of M_pi,
//   lift    - lift to GL(n), multiply, branch back,
//   cocycle - contract with the 2-cochain d(m_pi) of the series M_pi.

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "expr.hpp"
#include "memo.hpp"
#include "schur.hpp"
#include "series.hpp"

namespace hopfsym {

/// Formal character of H_pi: a Z-combination of labels (lambda)_pi.
struct SubgroupChar {
    Partition pi;
    SchurExpr terms;

    friend bool operator==(const SubgroupChar&, const SubgroupChar&) = default;
};

namespace detail {

inline void require_same_pi(const SubgroupChar& a, const SubgroupChar& b) {
    if (a.pi != b.pi)
        throw std::invalid_argument("subgroup characters belong to different subgroups: " + a.pi.str() + " vs " +
                                    b.pi.str());
}

}  // namespace detail

/// f / Phi = (phi (x) id) Delta(f), skewing by every term of the series.
inline SchurExpr skew_by_series(const SchurExpr& f, const SchurSeries& phi) {
    if (max_degree(f) > phi.cutoff())
        throw std::domain_error("skew_by_series: expression degree exceeds series cutoff " +
                                std::to_string(phi.cutoff()));
    SchurExpr out;
    for (const auto& [nu, cn] : f)
        for (int d = 0; d <= nu.weight(); ++d)
            for (const auto& [kappa, ck] : phi.piece(d)) out.add_scaled(skew_basis(nu, kappa), checked_mul(cn, ck));
    return out;
}

/// Restriction GL(n) -> H_pi(n): {lambda} -> (lambda / M_pi).
inline SubgroupChar branch(const SchurExpr& f, const Partition& pi) {
    const int cutoff = std::max(max_degree(f), 0);
    return {pi, skew_by_series(f, series_Mpi(pi, cutoff))};
}

/// Inverse of branch: (lambda) -> {lambda / M_pi^{-1}}.
inline SchurExpr lift(const SubgroupChar& a) {
    const int cutoff = std::max(max_degree(a.terms), 0);
    return skew_by_series(a.terms, series_Mpi_inverse(a.pi, cutoff));
}

/// Classical Newell-Littlewood product for O(n) (pi = (2)) and Sp(n)
/// (pi = (1,1)): [lambda].[mu] = sum_xi [lambda/xi . mu/xi].
inline SubgroupChar newell_littlewood(const SubgroupChar& a, const SubgroupChar& b) {
    detail::require_same_pi(a, b);
    if (a.pi != Partition{2} && a.pi != Partition{1, 1})
        throw std::invalid_argument("newell_littlewood: pi must be [2] or [1,1], got " + a.pi.str());
    SchurExpr out;
    const int top = std::min(max_degree(a.terms), max_degree(b.terms));
    for (int d = 0; d <= top; ++d)
        for (const Partition& xi : partitions_of(d))
            out += outer_product(skew(a.terms, s(xi)), skew(b.terms, s(xi)));
    return {a.pi, out};
}

/// Product through the proper-cut kernel: sum over k1 (x) k2 in K of
/// (lambda/k1).(mu/k2). Only degrees up to |lambda|+|mu| of K contribute, so
/// the kernel cutoff must reach that far.
inline SubgroupChar pi_newell_littlewood(const SubgroupChar& a, const SubgroupChar& b, int cutoff = kDefaultCutoff) {
    detail::require_same_pi(a, b);
    const int needed = std::max(max_degree(a.terms), 0) + std::max(max_degree(b.terms), 0);
    if (cutoff < needed)
        throw std::domain_error("pi_newell_littlewood: cutoff " + std::to_string(cutoff) +
                                " cannot hold kernel degrees up to " + std::to_string(needed));
    const TensorSeries kernel = proper_cut_kernel(a.pi, needed);
    SchurExpr out;
    for (int d = 0; d <= needed; ++d)
        for (const auto& [pair, c] : kernel.piece(d)) {
            const SchurExpr left = skew(a.terms, s(pair.first));
            if (left.is_zero()) continue;
            const SchurExpr right = skew(b.terms, s(pair.second));
            if (right.is_zero()) continue;
            out.add_scaled(outer_product(left, right), c);
        }
    return {a.pi, out};
}

/// ((a)/Phi . (b)/Phi)/Phi^{-1} with Phi = M_pi^{-1}: lift, multiply, branch.
inline SubgroupChar twisted_product_lift(const SubgroupChar& a, const SubgroupChar& b) {
    detail::require_same_pi(a, b);
    return branch(outer_product(lift(a), lift(b)), a.pi);
}

/// Linear form Lambda -> Z, evaluated on basis labels up to a degree bound.
class Cochain1 {
public:
    using Eval = std::function<Integer(const Partition&)>;

    Cochain1(Eval eval, int max_degree) : eval_(std::move(eval)), max_degree_(max_degree) {}

    /// phi(s_lambda) = <Phi | s_lambda>
    static Cochain1 from_series(const SchurSeries& phi) {
        auto held = std::make_shared<const SchurSeries>(phi);
        return {[held](const Partition& lambda) { return held->coeff(lambda); }, phi.cutoff()};
    }

    static Cochain1 counit(int max_degree) {
        return {[](const Partition& lambda) -> Integer { return lambda.empty() ? 1 : 0; }, max_degree};
    }

    [[nodiscard]] int max_degree() const noexcept { return max_degree_; }

    Integer operator()(const Partition& lambda) const {
        if (lambda.weight() > max_degree_)
            throw std::domain_error("cochain evaluated above its degree bound " + std::to_string(max_degree_));
        return eval_(lambda);
    }

    Integer operator()(const SchurExpr& f) const {
        Integer total = 0;
        for (const auto& [lambda, c] : f) total = checked_add(total, checked_mul(c, (*this)(lambda)));
        return total;
    }

private:
    Eval eval_;
    int max_degree_;
};

/// Bilinear form Lambda x Lambda -> Z, defined for total degree up to a bound.
class Cochain2 {
public:
    using Eval = std::function<Integer(const Partition&, const Partition&)>;

    Cochain2(Eval eval, int max_degree)
        : eval_(std::move(eval)), max_degree_(max_degree),
          memo_(std::make_shared<MemoTable<PartitionPair, Integer, PartitionPairHash>>()) {}

    static Cochain2 counit(int max_degree) {
        return {[](const Partition& x, const Partition& y) -> Integer { return x.empty() && y.empty() ? 1 : 0; },
                max_degree};
    }

    [[nodiscard]] int max_degree() const noexcept { return max_degree_; }

    Integer operator()(const Partition& x, const Partition& y) const {
        if (x.weight() + y.weight() > max_degree_)
            throw std::domain_error("2-cochain evaluated above its degree bound " + std::to_string(max_degree_));
        return memo_->get_or_compute({x, y}, [&] { return eval_(x, y); });
    }

private:
    Eval eval_;
    int max_degree_;
    std::shared_ptr<MemoTable<PartitionPair, Integer, PartitionPairHash>> memo_;
};

/// (c * c')(x) = sum c(x_(1)) c'(x_(2))
inline Cochain1 convolution(const Cochain1& c, const Cochain1& c_prime) {
    return {[c, c_prime](const Partition& x) {
                Integer total = 0;
                for (const auto& [pair, k] : coproduct_basis(x))
                    total = checked_add(total, checked_mul(k, checked_mul(c(pair.first), c_prime(pair.second))));
                return total;
            },
            std::min(c.max_degree(), c_prime.max_degree())};
}

/// (d phi)(x, y) = phi^{-1}(x_(1)) phi^{-1}(y_(1)) phi(x_(2) . y_(2)).
/// `phi_inv` must be the convolution inverse of `phi`; this is checked on
/// every label up to the common degree bound.
inline Cochain2 coboundary1(const Cochain1& phi, const Cochain1& phi_inv) {
    const int bound = std::min(phi.max_degree(), phi_inv.max_degree());
    const Cochain1 product = convolution(phi, phi_inv);
    for (const Partition& lambda : partitions_up_to(bound))
        if (product(lambda) != (lambda.empty() ? 1 : 0))
            throw std::invalid_argument("coboundary1: cochains are not convolution inverses at " + lambda.str());
    return {[phi, phi_inv](const Partition& x, const Partition& y) {
                Integer total = 0;
                for (const auto& [xs, cx] : coproduct_basis(x)) {
                    const Integer left = phi_inv(xs.first);
                    if (left == 0) continue;
                    for (const auto& [ys, cy] : coproduct_basis(y)) {
                        const Integer right = phi_inv(ys.first);
                        if (right == 0) continue;
                        const Integer middle = phi(lr_product(xs.second, ys.second));
                        total = checked_add(total,
                                            checked_mul(checked_mul(cx, cy), checked_mul(left, checked_mul(right, middle))));
                    }
                }
                return total;
            },
            bound};
}

/// Twisted product from the exact 2-cocycle d(m_pi):
/// sum d(m_pi)(lambda_(1), mu_(1)) (lambda_(2) . mu_(2)).
inline SubgroupChar twisted_product_cocycle(const SubgroupChar& a, const SubgroupChar& b) {
    detail::require_same_pi(a, b);
    const int degree = std::max(max_degree(a.terms), 0) + std::max(max_degree(b.terms), 0);
    const Cochain2 cocycle = coboundary1(Cochain1::from_series(series_Mpi(a.pi, degree)),
                                         Cochain1::from_series(series_Mpi_inverse(a.pi, degree)));
    SchurExpr out;
    for (const auto& [lambda, ca] : a.terms)
        for (const auto& [mu, cb] : b.terms) {
            const Integer scale = checked_mul(ca, cb);
            for (const auto& [ls, cl] : coproduct_basis(lambda))
                for (const auto& [ms, cm] : coproduct_basis(mu)) {
                    const Integer weight = cocycle(ls.first, ms.first);
                    if (weight == 0) continue;
                    out.add_scaled(lr_product(ls.second, ms.second), checked_mul(scale, checked_mul(weight, checked_mul(cl, cm))));
                }
        }
    return {a.pi, out};
}

enum class ProductRoute { kernel, lift, cocycle };

inline SubgroupChar twisted_product(const SubgroupChar& a, const SubgroupChar& b, ProductRoute route,
                                    int cutoff = kDefaultCutoff) {
    switch (route) {
        case ProductRoute::kernel: return pi_newell_littlewood(a, b, cutoff);
        case ProductRoute::cocycle: return twisted_product_cocycle(a, b);
        case ProductRoute::lift: break;
    }
    return twisted_product_lift(a, b);
}

}  // namespace hopfsym
