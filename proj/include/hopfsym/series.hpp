#pragma once

// Degree-truncated Schur function series. The formal variable t is the
// degree grading: piece d of a series is homogeneous of degree d, and every
// series carries an explicit cutoff. Binary operations require equal
// cutoffs; mixing cutoffs throws instead of silently truncating.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "expr.hpp"
#include "memo.hpp"
#include "plethysm.hpp"
#include "schur.hpp"

namespace hopfsym {

inline constexpr int kDefaultCutoff = 12;

namespace detail {

inline void require_same_cutoff(int a, int b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": series cutoffs differ (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
}

inline void require_cutoff(int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("series cutoff must be nonnegative");
}

}  // namespace detail

class SchurSeries {
public:
    explicit SchurSeries(int cutoff) : pieces_((detail::require_cutoff(cutoff), static_cast<std::size_t>(cutoff) + 1)) {}

    static SchurSeries unit(int cutoff) {
        SchurSeries out(cutoff);
        out.pieces_[0] = hopfsym::unit();
        return out;
    }

    [[nodiscard]] int cutoff() const noexcept { return static_cast<int>(pieces_.size()) - 1; }
    [[nodiscard]] const SchurExpr& piece(int degree) const { return pieces_.at(static_cast<std::size_t>(degree)); }
    [[nodiscard]] const std::vector<SchurExpr>& pieces() const noexcept { return pieces_; }

    void set_piece(int degree, SchurExpr value) {
        if (degree < 0 || degree > cutoff()) throw std::out_of_range("series degree out of range");
        if (!is_homogeneous(value, degree))
            throw std::invalid_argument("series piece " + std::to_string(degree) + " is not homogeneous");
        pieces_[static_cast<std::size_t>(degree)] = std::move(value);
    }

    /// Coefficient of s_lambda (zero above the cutoff is not representable).
    [[nodiscard]] Integer coeff(const Partition& lambda) const {
        if (lambda.weight() > cutoff())
            throw std::domain_error("series coefficient requested above cutoff " + std::to_string(cutoff()));
        return pieces_[static_cast<std::size_t>(lambda.weight())].coeff(lambda);
    }

    [[nodiscard]] SchurSeries truncated(int new_cutoff) const {
        if (new_cutoff > cutoff()) throw std::invalid_argument("cannot extend a truncated series");
        SchurSeries out(new_cutoff);
        for (int d = 0; d <= new_cutoff; ++d) out.pieces_[static_cast<std::size_t>(d)] = pieces_[static_cast<std::size_t>(d)];
        return out;
    }

    friend SchurSeries operator*(const SchurSeries& a, const SchurSeries& b) {
        detail::require_same_cutoff(a.cutoff(), b.cutoff(), "series product");
        SchurSeries out(a.cutoff());
        for (int i = 0; i <= a.cutoff(); ++i) {
            if (a.piece(i).is_zero()) continue;
            for (int j = 0; i + j <= a.cutoff(); ++j) {
                if (b.piece(j).is_zero()) continue;
                out.pieces_[static_cast<std::size_t>(i + j)] += outer_product(a.piece(i), b.piece(j));
            }
        }
        return out;
    }

    friend bool operator==(const SchurSeries&, const SchurSeries&) = default;

private:
    std::vector<SchurExpr> pieces_;
};

/// Series in Lambda (x) Lambda graded by total degree.
class TensorSeries {
public:
    explicit TensorSeries(int cutoff) : pieces_((detail::require_cutoff(cutoff), static_cast<std::size_t>(cutoff) + 1)) {}

    static TensorSeries unit(int cutoff) {
        TensorSeries out(cutoff);
        out.pieces_[0] = tensor_unit();
        return out;
    }

    [[nodiscard]] int cutoff() const noexcept { return static_cast<int>(pieces_.size()) - 1; }
    [[nodiscard]] const TensorExpr& piece(int degree) const { return pieces_.at(static_cast<std::size_t>(degree)); }

    void set_piece(int degree, TensorExpr value) {
        if (degree < 0 || degree > cutoff()) throw std::out_of_range("tensor series degree out of range");
        for (const auto& [key, c] : value)
            if (key.first.weight() + key.second.weight() != degree)
                throw std::invalid_argument("tensor series piece " + std::to_string(degree) + " is not homogeneous");
        pieces_[static_cast<std::size_t>(degree)] = std::move(value);
    }

    void add_to_piece(int degree, const TensorExpr& value) {
        TensorExpr sum = piece(degree) + value;
        set_piece(degree, std::move(sum));
    }

    friend TensorSeries operator*(const TensorSeries& a, const TensorSeries& b) {
        detail::require_same_cutoff(a.cutoff(), b.cutoff(), "tensor series product");
        TensorSeries out(a.cutoff());
        for (int i = 0; i <= a.cutoff(); ++i) {
            if (a.piece(i).is_zero()) continue;
            for (int j = 0; i + j <= a.cutoff(); ++j) {
                if (b.piece(j).is_zero()) continue;
                out.pieces_[static_cast<std::size_t>(i + j)] += tensor_product(a.piece(i), b.piece(j));
            }
        }
        return out;
    }

    friend bool operator==(const TensorSeries&, const TensorSeries&) = default;

private:
    std::vector<TensorExpr> pieces_;
};

/// M = sum_m s_(m)
inline SchurSeries series_M(int cutoff = kDefaultCutoff) {
    SchurSeries out(cutoff);
    for (int m = 0; m <= cutoff; ++m) out.set_piece(m, s(Partition::row(m)));
    return out;
}

/// L = sum_m (-1)^m s_(1^m)
inline SchurSeries series_L(int cutoff = kDefaultCutoff) {
    SchurSeries out(cutoff);
    for (int m = 0; m <= cutoff; ++m) out.set_piece(m, s(Partition::column(m), m % 2 ? -1 : 1));
    return out;
}

/// {inner} o Phi: the piece of degree m*|inner| is s_inner substituted into
/// piece m of the outer series. The result has the requested cutoff, which
/// the outer series must be long enough to supply.
inline SchurSeries plethysm_series(const Partition& inner, const SchurSeries& outer, int cutoff) {
    if (inner.empty()) throw std::invalid_argument("plethysm_series: inner partition must be nonempty");
    const int k = inner.weight();
    if (outer.cutoff() < cutoff / k)
        throw std::invalid_argument("plethysm_series: outer series cutoff too small for requested cutoff");
    SchurSeries out(cutoff);
    for (int m = 0; m * k <= cutoff; ++m) out.set_piece(m * k, plethysm(s(inner), outer.piece(m)));
    return out;
}

inline SchurSeries plethysm_series(const Partition& inner, const SchurSeries& outer) {
    return plethysm_series(inner, outer, outer.cutoff());
}

namespace detail {

struct PartitionIntHash {
    std::size_t operator()(const std::pair<Partition, int>& p) const noexcept {
        return PartitionHash{}(p.first) * 31U + static_cast<std::size_t>(p.second);
    }
};

inline MemoTable<std::pair<Partition, int>, SchurSeries, PartitionIntHash>& mpi_table() {
    static MemoTable<std::pair<Partition, int>, SchurSeries, PartitionIntHash> table;
    return table;
}

inline MemoTable<std::pair<Partition, int>, SchurSeries, PartitionIntHash>& mpi_inverse_table() {
    static MemoTable<std::pair<Partition, int>, SchurSeries, PartitionIntHash> table;
    return table;
}

}  // namespace detail

/// M_pi = {pi} o M
inline const SchurSeries& series_Mpi(const Partition& pi, int cutoff = kDefaultCutoff) {
    if (pi.empty()) throw std::invalid_argument("series_Mpi: pi must be nonempty");
    return detail::mpi_table().get_or_compute(
        {pi, cutoff}, [&] { return plethysm_series(pi, series_M(cutoff / pi.weight()), cutoff); });
}

/// M_pi^{-1} = {pi} o L
inline const SchurSeries& series_Mpi_inverse(const Partition& pi, int cutoff = kDefaultCutoff) {
    if (pi.empty()) throw std::invalid_argument("series_Mpi_inverse: pi must be nonempty");
    return detail::mpi_inverse_table().get_or_compute(
        {pi, cutoff}, [&] { return plethysm_series(pi, series_L(cutoff / pi.weight()), cutoff); });
}

/// A = {1^2} o L, B = A^{-1}, C = {2} o L, D = C^{-1}
inline SchurSeries series_A(int cutoff = kDefaultCutoff) { return series_Mpi_inverse({1, 1}, cutoff); }
inline SchurSeries series_B(int cutoff = kDefaultCutoff) { return series_Mpi({1, 1}, cutoff); }
inline SchurSeries series_C(int cutoff = kDefaultCutoff) { return series_Mpi_inverse({2}, cutoff); }
inline SchurSeries series_D(int cutoff = kDefaultCutoff) { return series_Mpi({2}, cutoff); }

/// Degree-by-degree formal inverse; the constant term must be s_().
inline SchurSeries series_invert(const SchurSeries& phi) {
    if (phi.piece(0) != unit()) throw std::domain_error("series_invert: constant term is not 1");
    SchurSeries out(phi.cutoff());
    out.set_piece(0, unit());
    for (int d = 1; d <= phi.cutoff(); ++d) {
        SchurExpr acc;
        for (int j = 1; j <= d; ++j) {
            if (phi.piece(j).is_zero() || out.piece(d - j).is_zero()) continue;
            acc -= outer_product(phi.piece(j), out.piece(d - j));
        }
        out.set_piece(d, std::move(acc));
    }
    return out;
}

inline TensorSeries series_coproduct(const SchurSeries& phi) {
    TensorSeries out(phi.cutoff());
    for (int d = 0; d <= phi.cutoff(); ++d) out.set_piece(d, outer_coproduct(phi.piece(d)));
    return out;
}

/// Phi (x) Psi as a tensor series, truncated at the common cutoff.
inline TensorSeries series_tensor(const SchurSeries& phi, const SchurSeries& psi) {
    detail::require_same_cutoff(phi.cutoff(), psi.cutoff(), "series tensor");
    TensorSeries out(phi.cutoff());
    for (int i = 0; i <= phi.cutoff(); ++i)
        for (int j = 0; i + j <= phi.cutoff(); ++j)
            if (!phi.piece(i).is_zero() && !psi.piece(j).is_zero())
                out.add_to_piece(i + j, tensor_of(phi.piece(i), psi.piece(j)));
    return out;
}

/// K = (M_pi^{-1} (x) M_pi^{-1}) * Delta(M_pi): the part of Delta(M_pi) left
/// after dividing out M_pi (x) M_pi.
inline TensorSeries proper_cut_kernel(const Partition& pi, int cutoff = kDefaultCutoff) {
    const SchurSeries& inv = series_Mpi_inverse(pi, cutoff);
    return series_tensor(inv, inv) * series_coproduct(series_Mpi(pi, cutoff));
}

/// <Phi | f>
inline Integer linear_form(const SchurSeries& phi, const SchurExpr& f) {
    if (max_degree(f) > phi.cutoff())
        throw std::domain_error("linear_form: argument degree exceeds series cutoff " + std::to_string(phi.cutoff()));
    Integer total = 0;
    for (const auto& [lambda, c] : f) total = checked_add(total, checked_mul(c, phi.coeff(lambda)));
    return total;
}

inline bool is_grouplike(const SchurSeries& phi) { return series_coproduct(phi) == series_tensor(phi, phi); }

}  // namespace hopfsym
