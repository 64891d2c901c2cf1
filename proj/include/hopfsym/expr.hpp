#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "integer.hpp"
#include "partition.hpp"

namespace hopfsym {

/// Finite Z-linear combination of basis labels. Zero coefficients are never
/// stored, so two combinations are equal iff their term maps are equal.
/// Iteration follows the key ordering, which for partitions is the
/// canonical term order.
template <class Key>
class LinearCombination {
public:
    using key_type = Key;
    using map_type = std::map<Key, Integer>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;
    explicit LinearCombination(const Key& key, Integer coeff = 1) { add(key, coeff); }

    static LinearCombination zero() { return {}; }

    LinearCombination& add(const Key& key, Integer coeff) {
        if (coeff == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second = checked_add(it->second, coeff);
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    /// this += scale * other
    LinearCombination& add_scaled(const LinearCombination& other, Integer scale) {
        if (scale == 0) return *this;
        for (const auto& [key, c] : other.terms_) add(key, checked_mul(c, scale));
        return *this;
    }

    [[nodiscard]] Integer coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? 0 : it->second;
    }

    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] const map_type& terms() const noexcept { return terms_; }
    [[nodiscard]] const_iterator begin() const noexcept { return terms_.begin(); }
    [[nodiscard]] const_iterator end() const noexcept { return terms_.end(); }

    LinearCombination& operator+=(const LinearCombination& o) { return add_scaled(o, 1); }
    LinearCombination& operator-=(const LinearCombination& o) { return add_scaled(o, -1); }
    LinearCombination& operator*=(Integer s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, c] : terms_) c = checked_mul(c, s);
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= -1; }
    friend LinearCombination operator*(Integer s, LinearCombination a) { return a *= s; }
    friend LinearCombination operator*(LinearCombination a, Integer s) { return a *= s; }
    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    map_type terms_;
};

using PartitionPair = std::pair<Partition, Partition>;

struct PartitionPairHash {
    std::size_t operator()(const PartitionPair& p) const noexcept {
        const PartitionHash h;
        return h(p.first) * 0x100000001b3ULL ^ h(p.second);
    }
};

/// Element of Lambda: Z-combination of Schur functions s_lambda.
using SchurExpr = LinearCombination<Partition>;
/// Element of Lambda (x) Lambda: Z-combination of s_a (x) s_b.
using TensorExpr = LinearCombination<PartitionPair>;

inline SchurExpr s(const Partition& lambda, Integer coeff = 1) { return SchurExpr(lambda, coeff); }
inline SchurExpr unit() { return SchurExpr(Partition{}); }
inline TensorExpr tensor(const Partition& a, const Partition& b, Integer coeff = 1) {
    return TensorExpr(PartitionPair{a, b}, coeff);
}
inline TensorExpr tensor_unit() { return tensor({}, {}); }

/// Highest degree occurring in f, or -1 for zero.
template <class Key>
int max_degree(const LinearCombination<Key>& f);

template <>
inline int max_degree(const SchurExpr& f) {
    return f.is_zero() ? -1 : f.terms().rbegin()->first.weight();
}

template <>
inline int max_degree(const TensorExpr& f) {
    int d = -1;
    for (const auto& [key, c] : f) d = std::max(d, key.first.weight() + key.second.weight());
    return d;
}

/// Degree-d homogeneous component of a Schur expression.
inline SchurExpr homogeneous_part(const SchurExpr& f, int degree) {
    SchurExpr out;
    for (const auto& [lambda, c] : f)
        if (lambda.weight() == degree) out.add(lambda, c);
    return out;
}

inline bool is_homogeneous(const SchurExpr& f, int degree) {
    for (const auto& [lambda, c] : f)
        if (lambda.weight() != degree) return false;
    return true;
}

/// s_a (x) s_b extended bilinearly.
inline TensorExpr tensor_of(const SchurExpr& f, const SchurExpr& g) {
    TensorExpr out;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g) out.add({a, b}, checked_mul(ca, cb));
    return out;
}

}  // namespace hopfsym
