#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "integer.hpp"

namespace hopfsym {

/// An integer partition: a weakly decreasing list of positive parts.
///
/// Trailing zeros are dropped on construction so every basis label has one
/// representative; the empty partition is the unit label (0). Ordering is the
/// canonical term order used throughout the library: ascending weight, then
/// reverse-lexicographic within a weight, so (4) < (3,1) < (2,2) < (2,1,1).
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    /// Rectangle with `rows` rows of length `cols`.
    static Partition rectangle(int rows, int cols) {
        if (rows <= 0 || cols <= 0) return {};
        return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
    }
    static Partition row(int n) { return rectangle(1, n); }
    static Partition column(int n) { return rectangle(n, 1); }

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int weight() const noexcept { return weight_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based), zero beyond the length.
    [[nodiscard]] int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    [[nodiscard]] std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out + "]";
    }

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }

    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
        if (a.weight_ != b.weight_) return a.weight_ <=> b.weight_;
        // reverse-lexicographic: larger leading parts come first
        return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                      a.parts_.end());
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int part : p.parts()) h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

/// True iff the diagram of `mu` fits inside the diagram of `lambda`.
inline bool contains(const Partition& mu, const Partition& lambda) {
    if (mu.length() > lambda.length()) return false;
    for (std::size_t i = 0; i < mu.parts().size(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& prefix,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (slots == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // the remaining slots must be able to absorb what is left
        if (static_cast<long>(part) * slots < remaining) break;
        prefix.push_back(part);
        partitions_rec(remaining - part, part, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All partitions of n, optionally restricted to at most `max_length` parts,
/// in canonical (reverse-lexicographic) order.
inline std::vector<Partition> partitions_of(int n, std::optional<int> max_length = std::nullopt) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> prefix;
    const int slots = max_length ? *max_length : n;
    detail::partitions_rec(n, n, slots, prefix, out);
    return out;
}

/// All partitions with weight 0..max_weight, canonical order.
inline std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto level = partitions_of(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// Hook length of cell (row, col), both 0-based; the cell must lie in lambda.
inline int hook_length(const Partition& lambda, const Partition& lambda_conj, int row, int col) {
    return lambda[static_cast<std::size_t>(row)] - col + lambda_conj[static_cast<std::size_t>(col)] - row - 1;
}

/// Dimension of the GL(n) irrep V^lambda, i.e. s_lambda(1^n), by the
/// hook-content formula.
inline Integer dim_gl(const Partition& lambda, int n) {
    if (lambda.length() > n) return 0;
    const Partition conj = conjugate(lambda);
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
            num *= n + j - i;
            den *= hook_length(lambda, conj, i, j);
        }
    }
    return to_integer(BigInt(num / den));
}

/// Number of standard Young tableaux of shape lambda (hook length formula).
inline Integer dim_sn(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    BigInt num = 1;
    for (int k = 2; k <= lambda.weight(); ++k) num *= k;
    BigInt den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) den *= hook_length(lambda, conj, i, j);
    return to_integer(BigInt(num / den));
}

/// z_rho = prod_i i^{r_i} r_i!, the centralizer order of cycle type rho.
inline Integer z_factor(const Partition& rho) {
    Integer z = 1;
    std::size_t i = 0;
    const auto& parts = rho.parts();
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto mult = static_cast<Integer>(j - i);
        for (Integer k = 1; k <= mult; ++k) z = checked_mul(z, checked_mul(parts[i], k));
        i = j;
    }
    return z;
}

/// Parse the bracketed text form `[3,1,1]`; `[]` is the empty partition.
inline Partition parse_partition(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') throw std::invalid_argument("partition must start with '['");
    ++pos;
    std::vector<int> parts;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("expected a part at offset " + std::to_string(pos));
            parts.push_back(std::stoi(std::string(text.substr(start, pos - start))));
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                break;
            }
            throw std::invalid_argument("expected ',' or ']' at offset " + std::to_string(pos));
        }
    }
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("trailing characters after partition");
    return Partition(std::move(parts));
}

}  // namespace hopfsym
