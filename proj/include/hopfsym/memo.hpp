#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hopfsym {

/// Thread-safe memo table. Values are computed outside the lock, so a
/// computation may recurse into the same table; if two threads race on one
/// key the first insertion wins and both observe the same value.
///
/// References returned by get_or_compute stay valid until clear().
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoTable {
public:
    template <class Compute>
    const Value& get_or_compute(const Key& key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

    void insert(const Key& key, Value value) {
        std::unique_lock lock(mutex_);
        table_.try_emplace(key, std::move(value));
    }

    [[nodiscard]] std::vector<std::pair<Key, Value>> snapshot() const {
        std::shared_lock lock(mutex_);
        return {table_.begin(), table_.end()};
    }

    [[nodiscard]] std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

    /// Not safe while other threads hold references into the table.
    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Value, Hash> table_;
};

}  // namespace hopfsym
