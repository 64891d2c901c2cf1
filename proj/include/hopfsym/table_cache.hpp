#pragma once

// On-disk persistence of the memo tables (LR products, plethysms, S_n
// characters). Each table is one UTF-8 text file: a version header line,
// then `key<TAB>value` lines. A file whose header does not match the current
// version, or that fails to parse, is ignored and rewritten on save.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "characters.hpp"
#include "io.hpp"
#include "plethysm.hpp"
#include "schur.hpp"

namespace hopfsym {

inline constexpr const char* kCacheFormatHeader = "# hopfsym-cache v1";

namespace detail {

inline std::string pair_key(const PartitionPair& key) { return key.first.str() + "|" + key.second.str(); }

inline std::optional<PartitionPair> parse_pair_key(const std::string& text) {
    const auto bar = text.find('|');
    if (bar == std::string::npos) return std::nullopt;
    try {
        return PartitionPair{parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1))};
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

template <class Value, class Format>
void write_table(const std::filesystem::path& file, const std::string& name,
                 std::vector<std::pair<PartitionPair, Value>> rows, Format&& format_value) {
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ofstream out(file, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + file.string());
    out << kCacheFormatHeader << ' ' << name << '\n';
    for (const auto& [key, value] : rows) out << pair_key(key) << '\t' << format_value(value) << '\n';
}

// Returns the parsed rows, or nothing if the file is missing, stale or malformed.
template <class Value, class Parse>
std::optional<std::vector<std::pair<PartitionPair, Value>>> read_table(const std::filesystem::path& file,
                                                                       const std::string& name, Parse&& parse_value) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != std::string(kCacheFormatHeader) + " " + name) return std::nullopt;
    std::vector<std::pair<PartitionPair, Value>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) return std::nullopt;
        auto key = parse_pair_key(line.substr(0, tab));
        if (!key) return std::nullopt;
        try {
            rows.emplace_back(std::move(*key), parse_value(line.substr(tab + 1)));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return rows;
}

}  // namespace detail

/// Loads whatever valid tables exist under `dir`; returns the number of
/// entries loaded.
inline std::size_t load_tables(const std::filesystem::path& dir) {
    std::size_t loaded = 0;
    const auto parse_schur = [](const std::string& v) { return parse_expr(v); };
    if (auto rows = detail::read_table<SchurExpr>(dir / "lr.tsv", "lr", parse_schur)) {
        for (auto& [k, v] : *rows) detail::lr_product_table().insert(k, std::move(v));
        loaded += rows->size();
    }
    if (auto rows = detail::read_table<SchurExpr>(dir / "plethysm.tsv", "plethysm", parse_schur)) {
        for (auto& [k, v] : *rows) detail::plethysm_table().insert(k, std::move(v));
        loaded += rows->size();
    }
    if (auto rows = detail::read_table<Integer>(dir / "characters.tsv", "characters",
                                                [](const std::string& v) { return static_cast<Integer>(std::stoll(v)); })) {
        for (auto& [k, v] : *rows) detail::character_table().insert(k, v);
        loaded += rows->size();
    }
    return loaded;
}

inline void save_tables(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    detail::write_table(dir / "lr.tsv", "lr", detail::lr_product_table().snapshot(), format_expr);
    detail::write_table(dir / "plethysm.tsv", "plethysm", detail::plethysm_table().snapshot(), format_expr);
    detail::write_table(dir / "characters.tsv", "characters", detail::character_table().snapshot(),
                        [](Integer v) { return std::to_string(v); });
}

}  // namespace hopfsym
