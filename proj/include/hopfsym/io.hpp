#pragma once

// Text syntax shared by the command-line tool:
//   expr  := '0' | ['-'] term (('+' | '-') term)*
//   term  := [integer '*'] partition | integer
// e.g. `3*[2,1] - [1,1,1] + 2*[]`. Whitespace is ignored. Formatting emits
// terms in canonical order with explicit signs and no `1*` prefixes.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <istream>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

#include "expr.hpp"
#include "groups.hpp"
#include "partition.hpp"
#include "series.hpp"
#include "twist.hpp"

namespace hopfsym {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::invalid_argument(message + " at offset " + std::to_string(offset)), offset_(offset) {}
    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    SchurExpr parse() {
        SchurExpr out;
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (first && peek() == '+') throw ParseError("unexpected '+'", pos_);
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            parse_term(out, sign);
            first = false;
            skip_ws();
            if (pos_ == text_.size()) break;
        }
        return out;
    }

private:
    [[nodiscard]] char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Integer parse_integer() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", start);
        try {
            return std::stoll(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }

    void parse_term(SchurExpr& out, int sign) {
        Integer coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_integer();
            skip_ws();
            if (peek() != '*') {
                out.add(Partition{}, checked_mul(sign, coeff));
                return;
            }
            ++pos_;
            skip_ws();
        }
        if (peek() != '[') throw ParseError("expected '['", pos_);
        const std::size_t start = pos_;
        const std::size_t close = text_.find(']', pos_);
        if (close == std::string_view::npos) throw ParseError("unterminated partition", start);
        pos_ = close + 1;
        try {
            out.add(parse_partition(text_.substr(start, pos_ - start)), checked_mul(sign, coeff));
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// `terms` is any range of (key, coefficient) pairs with nonzero coefficients.
template <class Terms, class KeyFormatter>
std::string format_combination(const Terms& terms, KeyFormatter&& key_text) {
    if (std::begin(terms) == std::end(terms)) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (first) {
            if (c < 0) out += "- ";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const Integer mag = c < 0 ? -c : c;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += key_text(key);
        first = false;
    }
    return out;
}

}  // namespace detail

inline SchurExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline std::string format_expr(const SchurExpr& f) {
    return detail::format_combination(f, [](const Partition& p) { return p.str(); });
}

inline std::string format_tensor(const TensorExpr& f) {
    return detail::format_combination(
        f, [](const PartitionPair& p) { return p.first.str() + "⊗" + p.second.str(); });
}

/// Subgroup labels are wrapped in parentheses: `([4]) + ([3,1])`.
inline std::string format_subgroup(const SubgroupChar& a) {
    return detail::format_combination(a.terms, [](const Partition& p) { return "(" + p.str() + ")"; });
}

/// Terms of f with the highest power of eps first, canonical label order within a power.
inline std::vector<std::pair<EpsilonLabel, Integer>> epsilon_display_order(const EpsilonExpr& f) {
    std::vector<std::pair<EpsilonLabel, Integer>> terms(f.begin(), f.end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.first.first > b.first.first; });
    return terms;
}

/// `eps^2*([]) - eps*([1]) + ([1,1])`
inline std::string format_epsilon(const EpsilonExpr& f) {
    return detail::format_combination(epsilon_display_order(f), [](const EpsilonLabel& t) {
        std::string prefix;
        if (t.first == 1) prefix = "eps*";
        if (t.first > 1) prefix = "eps^" + std::to_string(t.first) + "*";
        return prefix + "(" + t.second.str() + ")";
    });
}

/// Reads four lines of four rationals (`p/q` or integers) separated by spaces.
inline RationalMatrix4 parse_matrix4(std::istream& in) {
    RationalMatrix4 out{};
    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (row == 4) throw std::invalid_argument("matrix has more than 4 rows");
        std::istringstream fields(line);
        std::string field;
        int col = 0;
        while (fields >> field) {
            if (col == 4) throw std::invalid_argument("matrix row " + std::to_string(row + 1) + " has more than 4 entries");
            const auto slash = field.find('/');
            try {
                const auto digits_ok = [](const std::string& t) {
                    const std::size_t start = !t.empty() && t[0] == '-' ? 1 : 0;
                    return t.size() > start &&
                           std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                                       [](unsigned char ch) { return std::isdigit(ch) != 0; });
                };
                const std::string num = field.substr(0, slash);
                const std::string den = slash == std::string::npos ? "1" : field.substr(slash + 1);
                if (!digits_ok(num) || !digits_ok(den)) throw std::invalid_argument("bad number");
                const BigInt d(den);
                if (d == 0) throw std::invalid_argument("zero denominator");
                out[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = Rational(BigInt(num), d);
            } catch (const std::exception&) {
                throw std::invalid_argument("matrix entry '" + field + "' is not a rational number");
            }
            ++col;
        }
        if (col != 4) throw std::invalid_argument("matrix row " + std::to_string(row + 1) + " must have 4 entries");
        ++row;
    }
    if (row != 4) throw std::invalid_argument("matrix must have 4 rows");
    return out;
}

}  // namespace hopfsym
